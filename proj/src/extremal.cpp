#include "modforms/extremal.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

#include "modforms/arith.hpp"
#include "modforms/errors.hpp"
#include "modforms/forms.hpp"
#include "modforms/zseries.hpp"

namespace mf {

namespace {

void require_multiple_of_four(long k, const char* who) {
  if (k < 4 || k % 4 != 0) {
    throw InvalidArgument(std::string(who) + ": weight must be a positive multiple of 4, got " +
                          std::to_string(k));
  }
}

ApproxReal dec(std::string_view s, long bits, Rounding rnd = Rounding::Nearest) {
  return ApproxReal::from_decimal(s, bits, rnd);
}

// log of 2 C(h) / ((2 pi)^k/(k-1)!) = log 2 + 28.466 + (1/2) log(ell log k) + (k/2) log(1.0242382 ell).
ApproxReal log_twice_ch_scaled(long k, long ell, long bits) {
  const ApproxReal l(ell, bits);
  return log(ApproxReal(2L, bits)) + dec("28.466", bits, Rounding::Up) +
         log(l * log(ApproxReal(k, bits))) / ApproxReal(2L, bits) +
         ApproxReal(k, bits) / ApproxReal(2L, bits) * log(dec("1.0242382", bits, Rounding::Up) * l);
}

}  // namespace

Theorem2Threshold theorem2_threshold(long k, long bits) {
  require_multiple_of_four(k, "theorem2_threshold");
  if (k < 8) throw InvalidArgument("theorem2_threshold: need k >= 8");
  Theorem2Threshold t;
  t.k = k;
  t.ell = dim_cusp(k);
  t.value = ApproxReal(bits);
  if (t.ell == 0) {
    t.trivial = true;
    return t;
  }
  const ApproxReal l(t.ell, bits);
  const ApproxReal km2(k - 2, bits);
  const ApproxReal kk(k, bits);
  const ApproxReal log_value = dec("58.366", bits, Rounding::Up) / km2 +
                               log(l * l * l * log(kk)) / km2 +
                               log(dec("1.0242382", bits, Rounding::Up) * l);
  t.value = exp(log_value);
  mpfr_t up;
  mpfr_init2(up, bits);
  mpfr_ceil(up, t.value.get());
  t.N = mpfr_get_si(up, MPFR_RNDU);
  mpfr_clear(up);
  return t;
}

mpq_class eisenstein_part_b(long k, long m) {
  require_multiple_of_four(k, "eisenstein_part_b");
  const long ell = dim_cusp(k);
  if (m < 1 || m > ell) throw InvalidArgument("eisenstein_part_b: need 1 <= m <= ell");
  return mpq_class(2 * k) / bernoulli(k) * mpq_class(sigma(k - 1, m));
}

ApproxReal ch_envelope(long k, long bits) {
  require_multiple_of_four(k, "ch_envelope");
  const long ell = dim_cusp(k);
  if (ell == 0) throw InvalidArgument("ch_envelope: S_k is zero");
  const ApproxReal two_pi = ApproxReal(2L, bits) * ApproxReal::pi(bits);
  const ApproxReal log_scale = ApproxReal(k, bits) * log(two_pi) -
                               log_factorial(static_cast<unsigned long>(k - 1), bits);
  return exp(log_scale + log_twice_ch_scaled(k, ell, bits) - log(ApproxReal(2L, bits)));
}

bool positivity_criterion(long k, long n, long bits) {
  require_multiple_of_four(k, "positivity_criterion");
  const long ell = dim_cusp(k);
  if (n < 1) return false;
  if (ell == 0) return true;
  // 0.9997 n^{k-1} > 2 C(h) (k-1)!/(2 pi)^k n^{k/2}, compared in log space.
  const ApproxReal lhs = log(dec("0.9997", bits, Rounding::Down)) +
                         ApproxReal(k - 2, bits) / ApproxReal(2L, bits) * log(ApproxReal(n, bits));
  return lhs > log_twice_ch_scaled(k, ell, bits);
}

long positivity_onset(long k, long bits) {
  require_multiple_of_four(k, "positivity_onset");
  long lo = 0;
  long hi = 1;
  while (!positivity_criterion(k, hi, bits)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    if (positivity_criterion(k, mid, bits)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

mpq_class burmann_A(long k, long n) {
  require_multiple_of_four(k, "burmann_A");
  if (n < 1) throw InvalidArgument("burmann_A: n must be >= 1");
  const auto len = static_cast<std::size_t>(n);
  // Everything is needed only through q^{n-1}.
  const zs::ZVec e4 = detail::eisenstein4_z(len + 1);
  zs::ZVec de4(len);
  for (std::size_t i = 0; i < len; ++i) de4[i] = e4[i + 1] * static_cast<unsigned long>(i + 1);
  const long e = 3 * n - k / 4 - 1;
  const std::span<const mpz_class> e4_head(e4.data(), len);
  const zs::ZVec e4_power = e >= 0 ? zs::pow_trunc(e4_head, static_cast<unsigned long>(e), len)
                                   : zs::pow_trunc(zs::inverse_unit(e4_head, len),
                                                   static_cast<unsigned long>(-e), len);
  // q/Delta = 1/prod(1-q^n)^24.
  const zs::ZVec q_over_delta = zs::inverse_unit(zs::eta24(len), len);
  const zs::ZVec qd_power = zs::pow_trunc(q_over_delta, static_cast<unsigned long>(n), len);
  const zs::ZVec prod = zs::mul_trunc(zs::mul_trunc(de4, e4_power, len), qd_power, len);
  return mpq_class(-k, 4 * n) * mpq_class(prod[len - 1]);
}

BurmannCoefficient burmann_mos(long k) {
  require_multiple_of_four(k, "burmann_mos");
  const WeightProfile p = weight_profile(k);
  BurmannCoefficient b;
  b.k = k;
  b.ell = p.ell;
  b.nu = *p.nu;
  b.A1 = burmann_A(k, p.ell + 1);
  b.A2 = burmann_A(k, p.ell + 2);
  b.a1 = -b.A1;
  b.a2 = -b.A2 + b.A1 * mpq_class(24 * p.ell - 240 * b.nu + 744);
  return b;
}

std::string_view to_string(ScanStatus s) {
  switch (s) {
    case ScanStatus::Done:
      return "done";
    case ScanStatus::Partial:
      return "partial";
    case ScanStatus::Refuted:
      return "refuted";
  }
  return "done";
}

ScanStatus scan_status_from_string(std::string_view s) {
  if (s == "done") return ScanStatus::Done;
  if (s == "partial") return ScanStatus::Partial;
  if (s == "refuted") return ScanStatus::Refuted;
  throw InvalidArgument("unknown scan status: " + std::string(s));
}

std::string tool_version_hash() {
  const std::string text = std::string("modforms-") + MODFORMS_VERSION;
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ScanRecord scan_window(long k, const ScanWindowOptions& opt) {
  require_multiple_of_four(k, "scan_window");
  if (opt.margin < 0) throw InvalidArgument("scan_window: margin must be >= 0");
  const auto start = std::chrono::steady_clock::now();
  const long ell = dim_cusp(k);
  ScanRecord r;
  r.k = k;
  r.ell = ell;
  r.mode = opt.full_scale ? "full" : "desk";
  r.tool_version = tool_version_hash();
  auto stamp = [&] {
    if (opt.record_wall_time) {
      r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };

  if (ell == 0) {
    // F_{k,0} = E_k: every coefficient past the constant is positive.
    r.siegel_positive = true;
    stamp();
    return r;
  }
  const long n_k = theorem2_threshold(k).N;
  r.window_end = opt.full_scale ? std::max(n_k, kFullScaleWindow) : n_k;
  r.tail_end = r.window_end + opt.margin;

  if (opt.full_scale) {
    const BurmannCoefficient b = burmann_mos(k);
    r.siegel_positive = sgn(b.a1) > 0;
    if (sgn(b.a2) < 0) {
      r.status = ScanStatus::Refuted;
      r.negative_indices = {ell + 2};
      r.tail_end = ell + 2;
      stamp();
      return r;
    }
  }

  const long count = std::max(r.tail_end, ell + 2) + 1;
  // Working-set estimate: log2 a(n) ~ k log2(2 pi) - log2 (k-1)! + (k-1) log2 n,
  // times the sqrt(ell) stored powers of 1/j in the evaluation.
  const double lg = static_cast<double>(k) * std::log2(2 * M_PI) - std::lgamma(static_cast<double>(k)) / std::log(2.0) +
                    static_cast<double>(k - 1) * std::log2(static_cast<double>(count));
  const double coeff_bytes = std::max(64.0, lg) / 8.0 + 16.0;
  const double estimate = coeff_bytes * static_cast<double>(count) * (std::sqrt(static_cast<double>(ell)) + 4.0);
  if (opt.size_guard_bytes > 0 && estimate > opt.size_guard_bytes) {
    r.status = ScanStatus::Partial;
    r.resume_index = ell + 1;
    stamp();
    return r;
  }

  const zs::ZVec f = extremal_form_z(k, count);
  r.siegel_positive = sgn(f[static_cast<std::size_t>(ell + 1)]) > 0;
  long min_index = ell + 1;
  for (long n = ell + 1; n <= r.tail_end; ++n) {
    const mpz_class& a = f[static_cast<std::size_t>(n)];
    if (n <= r.window_end) {
      if (sgn(a) < 0) r.negative_indices.push_back(n);
      if (a < f[static_cast<std::size_t>(min_index)]) min_index = n;
    } else if (sgn(a) < 0) {
      r.tail_negative_indices.push_back(n);
    }
  }
  r.min_value_index = min_index;
  r.status = ScanStatus::Done;
  stamp();
  return r;
}

}  // namespace mf
