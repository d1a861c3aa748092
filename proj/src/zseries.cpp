#include "modforms/zseries.hpp"

#include <algorithm>
#include <cstring>

#include "modforms/errors.hpp"

namespace mf::zs {

namespace {

constexpr std::size_t kLimbBits = GMP_NUMB_BITS;

std::size_t max_bits(std::span<const mpz_class> v) {
  std::size_t best = 0;
  for (const auto& x : v) {
    if (sgn(x) != 0) best = std::max(best, mpz_sizeinbase(x.get_mpz_t(), 2));
  }
  return best;
}

std::size_t bit_length(std::size_t v) {
  std::size_t out = 0;
  while (v != 0) {
    ++out;
    v >>= 1;
  }
  return out;
}

// Packs the signed coefficients into sum_i v_i 2^{i*slot_limbs*LIMB_BITS}.
mpz_class pack(std::span<const mpz_class> v, std::size_t slot_limbs) {
  const std::size_t total = v.size() * slot_limbs;
  mpz_class pos;
  mpz_class neg;
  mp_limb_t* pw = mpz_limbs_write(pos.get_mpz_t(), static_cast<mp_size_t>(total));
  mp_limb_t* nw = mpz_limbs_write(neg.get_mpz_t(), static_cast<mp_size_t>(total));
  std::memset(pw, 0, total * sizeof(mp_limb_t));
  std::memset(nw, 0, total * sizeof(mp_limb_t));
  bool any_neg = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const mpz_srcptr x = v[i].get_mpz_t();
    const std::size_t size = mpz_size(x);
    if (size == 0) continue;
    mp_limb_t* dst = (mpz_sgn(x) > 0 ? pw : nw) + i * slot_limbs;
    std::memcpy(dst, mpz_limbs_read(x), size * sizeof(mp_limb_t));
    any_neg = any_neg || mpz_sgn(x) < 0;
  }
  mpz_limbs_finish(pos.get_mpz_t(), static_cast<mp_size_t>(total));
  mpz_limbs_finish(neg.get_mpz_t(), static_cast<mp_size_t>(total));
  if (any_neg) pos -= neg;
  return pos;
}

// Inverse of pack for the first n balanced digits of `c`.
ZVec unpack(const mpz_class& c, std::size_t slot_limbs, std::size_t n) {
  ZVec out(n);
  const int sign = sgn(c);
  if (sign == 0) return out;
  const mp_limb_t* limbs = mpz_limbs_read(c.get_mpz_t());
  const std::size_t size = mpz_size(c.get_mpz_t());
  const std::size_t slot_bits = slot_limbs * kLimbBits;
  mpz_class half;
  mpz_class full;
  mpz_setbit(half.get_mpz_t(), slot_bits - 1);
  mpz_setbit(full.get_mpz_t(), slot_bits);
  bool carry = false;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t begin = i * slot_limbs;
    mpz_class& digit = out[i];
    if (begin < size) {
      const std::size_t count = std::min(slot_limbs, size - begin);
      mp_limb_t* w = mpz_limbs_write(digit.get_mpz_t(), static_cast<mp_size_t>(count));
      std::memcpy(w, limbs + begin, count * sizeof(mp_limb_t));
      mpz_limbs_finish(digit.get_mpz_t(), static_cast<mp_size_t>(count));
    }
    if (carry) digit += 1;
    if (digit >= half) {
      digit -= full;
      carry = true;
    } else {
      carry = false;
    }
    if (sign < 0) digit = -digit;
  }
  return out;
}

std::span<const mpz_class> trimmed(std::span<const mpz_class> v, std::size_t n) {
  std::size_t len = std::min(v.size(), n);
  while (len > 0 && sgn(v[len - 1]) == 0) --len;
  return v.first(len);
}

}  // namespace

ZVec mul_trunc_schoolbook(std::span<const mpz_class> a, std::span<const mpz_class> b,
                          std::size_t n) {
  ZVec out(n);
  const std::size_t la = std::min(a.size(), n);
  for (std::size_t i = 0; i < la; ++i) {
    if (sgn(a[i]) == 0) continue;
    const std::size_t lb = std::min(b.size(), n - i);
    for (std::size_t j = 0; j < lb; ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

ZVec mul_trunc(std::span<const mpz_class> a, std::span<const mpz_class> b, std::size_t n) {
  a = trimmed(a, n);
  b = trimmed(b, n);
  if (a.empty() || b.empty()) return ZVec(n);
  const std::size_t shorter = std::min(a.size(), b.size());
  if (shorter <= 12 || a.size() * b.size() <= 400) return mul_trunc_schoolbook(a, b, n);

  const std::size_t bound_bits = max_bits(a) + max_bits(b) + bit_length(shorter) + 1;
  const std::size_t slot_limbs = (bound_bits + 1 + kLimbBits - 1) / kLimbBits;
  const mpz_class pa = pack(a, slot_limbs);
  mpz_class product;
  if (a.data() == b.data() && a.size() == b.size()) {
    mpz_mul(product.get_mpz_t(), pa.get_mpz_t(), pa.get_mpz_t());
  } else {
    const mpz_class pb = pack(b, slot_limbs);
    mpz_mul(product.get_mpz_t(), pa.get_mpz_t(), pb.get_mpz_t());
  }
  return unpack(product, slot_limbs, std::min(n, a.size() + b.size() - 1));
}

ZVec inverse_unit(std::span<const mpz_class> a, std::size_t n) {
  if (a.empty() || (a[0] != 1 && a[0] != -1)) {
    throw InvalidArgument("inverse_unit: constant term must be +1 or -1");
  }
  ZVec b{a[0]};
  std::size_t have = 1;
  while (have < n) {
    const std::size_t next = std::min(2 * have, n);
    ZVec e = mul_trunc(a, b, next);
    // e = 1 - a*b vanishes below `have`.
    for (auto& x : e) x = -x;
    e[0] += 1;
    ZVec corr = mul_trunc(b, e, next);
    b.resize(next);
    for (std::size_t i = have; i < next; ++i) b[i] += corr[i];
    have = next;
  }
  b.resize(n);
  return b;
}

ZVec pow_trunc(std::span<const mpz_class> a, unsigned long e, std::size_t n) {
  ZVec result(n);
  if (n == 0) return result;
  result[0] = 1;
  if (e == 0) return result;
  ZVec base(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(std::min(a.size(), n)));
  bool first = true;
  while (true) {
    if (e & 1UL) {
      if (first) {
        result = base;
        result.resize(n);
        first = false;
      } else {
        result = mul_trunc(result, base, n);
      }
    }
    e >>= 1;
    if (e == 0) break;
    base = mul_trunc(base, base, n);
  }
  return result;
}

ZVec eta24(std::size_t n) {
  // Jacobi: prod (1 - q^m)^3 = sum_{j>=0} (-1)^j (2j+1) q^{j(j+1)/2}.
  ZVec cube(n);
  for (std::size_t j = 0;; ++j) {
    const std::size_t e = j * (j + 1) / 2;
    if (e >= n) break;
    cube[e] = (j % 2 == 0 ? 1 : -1) * static_cast<long>(2 * j + 1);
  }
  return pow_trunc(cube, 8, n);
}

}  // namespace mf::zs
