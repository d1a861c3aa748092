#include "modforms/bounds.hpp"

#include <string>

#include "modforms/arith.hpp"
#include "modforms/errors.hpp"
#include "modforms/forms.hpp"

namespace mf {

namespace {

ApproxReal dec(std::string_view text, long bits, Rounding rnd = Rounding::Nearest) {
  return ApproxReal::from_decimal(text, bits, rnd);
}

ApproxReal two_pi(long bits) { return ApproxReal(2L, bits) * ApproxReal::pi(bits); }

mpz_class power(long base, long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return out;
}

// Eulerian numbers A(s, m), 0 <= m < s.
std::vector<mpz_class> eulerian_row(long s) {
  std::vector<mpz_class> row{1};
  for (long n = 2; n <= s; ++n) {
    std::vector<mpz_class> next(static_cast<std::size_t>(n));
    for (long m = 0; m < n; ++m) {
      mpz_class v = 0;
      if (m >= 1) v += (n - m) * row[static_cast<std::size_t>(m - 1)];
      if (m < n - 1) v += (m + 1) * row[static_cast<std::size_t>(m)];
      next[static_cast<std::size_t>(m)] = v;
    }
    row = std::move(next);
  }
  return row;
}

// sum_{n>=1} n^s x^n = x A_s(x) / (1-x)^{s+1}, 0 <= x < 1.
ApproxReal power_sum(long s, const ApproxReal& x) {
  const long bits = x.bits();
  const ApproxReal one(1L, bits);
  if (s == 0) return x / (one - x);
  const auto row = eulerian_row(s);
  ApproxReal poly(bits);
  for (auto it = row.rbegin(); it != row.rend(); ++it) poly = poly * x + ApproxReal(*it, bits);
  return x * poly / pow(one - x, s + 1);
}

// |E_k| <= 1 + (2k/|B_k|) sum 2 n^k x^n with x = e^{-2 pi height}.
ApproxReal eisenstein_upper(long k, const ApproxReal& x) {
  const long bits = x.bits();
  if (k == 0) return ApproxReal(1L, bits);
  const mpq_class factor = mpq_class(2 * k) / abs(bernoulli(k));
  return ApproxReal(1L, bits) + ApproxReal(factor, bits) * ApproxReal(2L, bits) * power_sum(k, x);
}

// |Delta| <= x + 24 x^2 + sum_{n>=3} 2 n^6 x^n.
ApproxReal delta_upper(const ApproxReal& x) {
  const long bits = x.bits();
  const ApproxReal head = x + ApproxReal(24L, bits) * x * x;
  const ApproxReal tail = ApproxReal(2L, bits) * (power_sum(6, x) - x - ApproxReal(64L, bits) * x * x);
  return head + tail;
}

ApproxReal delta_lower(const ApproxReal& x) {
  const long bits = x.bits();
  const ApproxReal head = x - ApproxReal(24L, bits) * x * x;
  const ApproxReal tail = ApproxReal(2L, bits) * (power_sum(6, x) - x - ApproxReal(64L, bits) * x * x);
  return head - tail;
}

ConstantCheck upper_check(std::string name, ApproxReal recomputed, std::string_view printed, long bits,
                          std::string note = {}) {
  ConstantCheck c;
  c.name = std::move(name);
  c.printed = dec(printed, bits, Rounding::Down);
  c.ok = recomputed <= c.printed;
  c.recomputed = std::move(recomputed);
  c.note = std::move(note);
  return c;
}

}  // namespace

ApproxReal incomplete_gamma_int(long d, const ApproxReal& x) {
  if (d < 0) throw InvalidArgument("incomplete_gamma_int: d must be >= 0");
  if (x.sign() < 0) throw InvalidArgument("incomplete_gamma_int: x must be >= 0");
  const long bits = x.bits();
  ApproxReal term = factorial(static_cast<unsigned long>(d), bits);
  ApproxReal sum = term;
  for (long i = 1; i <= d; ++i) {
    term = term * x / ApproxReal(i, bits);
    sum += term;
  }
  return sum * exp(-x);
}

ApproxReal akmn_envelope(long k, long m, long n, long bits) {
  const long ell = weight_profile(k).ell;
  if (m < 1 || m > ell) throw InvalidArgument("akmn_envelope: need 1 <= m <= ell");
  const ApproxReal tp = two_pi(bits);
  const ApproxReal scale = dec(constants::kEnvelopeScale, bits, Rounding::Up) *
                           pow(dec(constants::kDeltaRatio, bits, Rounding::Up), ell);
  return scale * exp(-(tp * ApproxReal(m, bits) * dec(constants::kV, bits))) *
         exp(tp * ApproxReal(n, bits) * dec(constants::kY, bits));
}

BoundReport theorem1_B(long k, std::span<const ApproxReal> a, long bits) {
  const long ell = weight_profile(k).ell;
  if (ell == 0) throw InvalidArgument("theorem1_B: S_k is zero for k = " + std::to_string(k));
  if (static_cast<long>(a.size()) != ell) {
    throw InvalidArgument("theorem1_B: expected " + std::to_string(ell) + " coefficients a(1..ell)");
  }
  BoundReport r;
  r.k = k;
  r.ell = ell;
  r.bits = bits;
  r.a.assign(a.begin(), a.end());

  ApproxReal norm(bits);
  ApproxReal inner(bits);
  const ApproxReal decay = dec(constants::kTheorem1Decay, bits);
  for (long m = 1; m <= ell; ++m) {
    const ApproxReal& am = a[static_cast<std::size_t>(m - 1)];
    norm += am * am / ApproxReal(power(m, k - 1), bits);
    inner += am * exp(-(decay * ApproxReal(m, bits)));
  }
  r.weighted_norm = sqrt(norm);
  r.inner_sum = inner;
  r.term1 = dec(constants::kTheorem1Term1, bits) * r.weighted_norm;

  const ApproxReal kk(k, bits);
  const ApproxReal log_factor = dec(constants::kTheorem1Exp, bits, Rounding::Up) +
                                ApproxReal(k, bits) / ApproxReal(2L, bits) *
                                    log(dec(constants::kTheorem1Base, bits, Rounding::Up)) -
                                ApproxReal(k - 1, bits) / ApproxReal(2L, bits) * log(kk);
  r.term2 = exp(log_factor) * abs(inner);
  r.B = sqrt(log(kk)) * (r.term1 + r.term2);

  const ApproxReal pi = ApproxReal::pi(bits);
  r.consolidated_factor =
      dec(constants::kConsolidated, bits) *
      sqrt(ApproxReal(32L, bits) * pi * pi * kk / (ApproxReal(3L, bits) * ApproxReal(k - 1, bits)));
  r.statement_factor = exp(dec(constants::kTheorem1Exp, bits));

  r.constants = {{"y", std::string(constants::kY)},
                 {"v", std::string(constants::kV)},
                 {"envelope_scale", std::string(constants::kEnvelopeScale)},
                 {"delta_ratio", std::string(constants::kDeltaRatio)},
                 {"term1_factor", std::string(constants::kTheorem1Term1)},
                 {"exp_exponent", std::string(constants::kTheorem1Exp)},
                 {"base", std::string(constants::kTheorem1Base)},
                 {"decay", std::string(constants::kTheorem1Decay)}};
  return r;
}

ApproxReal theorem1_bound(const BoundReport& report, long n) {
  if (n < 1) throw InvalidArgument("theorem1_bound: n must be >= 1");
  const long bits = report.bits;
  return report.B * ApproxReal(divisor_count(n), bits) * sqrt(ApproxReal(power(n, report.k - 1), bits));
}

ApproxReal j_tail_bound(std::string_view height, long first, long bits) {
  if (first < 1) throw InvalidArgument("j_tail_bound: first exponent must be >= 1");
  const ApproxReal h = dec(height, bits, Rounding::Down);
  const ApproxReal pi = ApproxReal::pi(bits);
  const ApproxReal tp = two_pi(bits);
  const ApproxReal four_pi = ApproxReal(4L, bits) * pi;
  const ApproxReal sqrt2 = sqrt(ApproxReal(2L, bits));
  const ApproxReal c55 = dec("0.055", bits, Rounding::Up);
  const ApproxReal one(1L, bits);

  auto term = [&](long n) {
    const ApproxReal nn(n, bits);
    const ApproxReal rn = sqrt(nn);
    const ApproxReal shape = one - ApproxReal(3L, bits) / (ApproxReal(32L, bits) * pi * rn) + c55 / nn;
    return exp(-(tp * nn * h) + four_pi * rn) / (sqrt2 * pow(nn, ApproxReal(0.75, bits))) * shape;
  };

  // Terms are eventually decreasing with ratio at most e^{-2 pi h + 2 pi/sqrt n}.
  ApproxReal sum(bits);
  long n = first;
  ApproxReal eps(1L, bits);
  mpfr_mul_2si(eps.get(), eps.get(), -(bits + 8), MPFR_RNDN);
  for (;; ++n) {
    const ApproxReal t = term(n);
    sum += t;
    const ApproxReal nn(n, bits);
    const ApproxReal ratio = exp(-(tp * h) + tp / sqrt(nn));
    if (ratio < ApproxReal(0.5, bits) && t < eps * sum) {
      const ApproxReal envelope = (one + c55 / nn) / (sqrt2 * pow(nn, ApproxReal(0.75, bits))) *
                                  exp(-(tp * nn * h) + four_pi * sqrt(nn));
      return sum + envelope * ratio / (one - ratio);
    }
    if (n - first > 1000000) throw InsufficientPrecision("j_tail_bound: series did not settle");
  }
}

ApproxReal j_tail_majorant(std::string_view height, long first, long bits) {
  const ApproxReal h = dec(height, bits, Rounding::Down);
  const ApproxReal slope = dec("0.2", bits, Rounding::Up);
  // Requires h sqrt(n) - 2 >= 0.2 sqrt(n) for n >= first.
  if ((h - slope) * sqrt(ApproxReal(first, bits)) < ApproxReal(2L, bits)) {
    throw InvalidArgument("j_tail_majorant: 0.2 sqrt(n) slack fails at the first exponent");
  }
  const ApproxReal rate = two_pi(bits) * slope;
  const ApproxReal one(1L, bits);
  return dec("1.055", bits, Rounding::Up) / sqrt(ApproxReal(2L, bits)) *
         exp(-(rate * ApproxReal(first, bits))) / (one - exp(-rate));
}

KernelConstantsReport kernel_constants_verify(std::string_view y, std::string_view v, long bits) {
  KernelConstantsReport r;
  r.bits = bits;
  r.y = std::string(y);
  r.v = std::string(v);
  r.rounding_policy =
      "series bounds at the working precision with round-to-nearest; printed constants rounded down "
      "before comparison; j-coefficient tail inequality taken as an axiom";

  const ApproxReal tp = two_pi(bits);
  const ApproxReal xz = exp(-(tp * dec(y, bits, Rounding::Down)));
  const ApproxReal xt = exp(-(tp * dec(v, bits, Rounding::Down)));

  const ApproxReal dz = delta_upper(xz);
  const ApproxReal dt = delta_lower(xt);
  r.checks.push_back(upper_check("delta_ratio", dz / dt, constants::kDeltaRatio, bits));
  const ApproxReal inv_delta = ApproxReal(1L, bits) / dt;
  r.checks.push_back(upper_check("inverse_delta", inv_delta, constants::kInverseDelta, bits));

  ApproxReal worst(bits);
  for (long kp : {0L, 4L, 6L, 8L, 10L, 14L}) {
    const ApproxReal prod = eisenstein_upper(kp, xz) * eisenstein_upper(14 - kp, xt);
    worst = max(worst, prod);
    r.checks.push_back(upper_check("eisenstein_product_k" + std::to_string(kp), prod,
                                   constants::kEisensteinProduct, bits));
  }

  const ApproxReal tail_z = j_tail_bound(y, 10, bits);
  r.checks.push_back(upper_check("j_tail_z", tail_z, constants::kJTail, bits,
                                 "exponents >= 10 at Im z; coefficient inequality for j"));
  r.checks.push_back(upper_check("j_tail_z_majorant", j_tail_majorant(y, 10, bits), constants::kJTail,
                                 bits, "geometric majorant sum e^{-0.4 pi n}"));
  const ApproxReal tail_t = j_tail_bound(v, 5, bits);
  r.checks.push_back(upper_check("j_tail_tau", tail_t, constants::kJTail, bits,
                                 "exponents >= 5 at Im tau; coefficient inequality for j"));

  const ApproxReal pi = ApproxReal::pi(bits);
  const ApproxReal gap = ApproxReal(4L, bits) * pi * dec(constants::kY, bits) -
                         tp * sqrt(ApproxReal(3L, bits));
  {
    ConstantCheck c;
    c.name = "geometric_gap";
    c.printed = -dec(constants::kGeometricGap, bits);
    c.ok = gap <= c.printed;
    c.recomputed = gap;
    c.note = "4 pi y - 2 pi sqrt3";
    r.checks.push_back(std::move(c));
  }

  // Envelope scale: (1/|Delta(tau)|) |E E| / (30 - tails).
  const ApproxReal floor_g = dec(constants::kGridFloor, bits);
  const ApproxReal scale = inv_delta * worst / (floor_g - tail_z - tail_t);
  r.checks.push_back(upper_check("envelope_scale", scale, constants::kEnvelopeScale, bits,
                                 "uses G >= 30 and the recomputed tails"));

  r.all_ok = true;
  for (const auto& c : r.checks) r.all_ok = r.all_ok && c.ok;
  return r;
}

}  // namespace mf
