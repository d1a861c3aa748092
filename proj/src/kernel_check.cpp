#include <map>
#include <string>

#include "modforms/errors.hpp"
#include "modforms/forms.hpp"

namespace mf {

namespace {

// Finite part of a two-variable expansion: p-exponent -> q-series.
using PSeries = std::map<long, QLaurent>;

QLaurent eisenstein_or_one(long weight, long prec) {
  if (weight == 0) return QLaurent::monomial(1, 0, prec);
  return eisenstein(weight, prec);
}

}  // namespace

KernelCheckReport generating_kernel_check(long k, long max_m, long q_prec) {
  const WeightProfile profile = weight_profile(k);
  const long ell = profile.ell;
  if (max_m < 0 || max_m > ell) {
    throw InvalidArgument("generating_kernel_check: M must lie in 0.." + std::to_string(ell));
  }
  if (q_prec < ell + 2) {
    throw InvalidArgument("generating_kernel_check: q_prec must be >= ell + 2");
  }

  // p-side: W_r(p) = E_{14-k'}(p) / (Delta(p)^{ell+1} j(p)^{r+1}), valuation r - ell.
  // 1/(j(tau) - j(z)) = sum_r j(z)^r / j(tau)^{r+1} is a formal expansion in p
  // because 1/j(tau) = p + O(p^2).
  const long p_work = 2 * ell + 6;
  const QLaurent p_head =
      eisenstein_or_one(14 - profile.k_prime, p_work) * pow(invert(delta(p_work)), ell + 1);
  const QLaurent inv_j = invert(jfun(p_work));

  // q-side.
  const long q_work = q_prec + ell + 1;
  const QLaurent base = pow(delta(q_work), ell) * eisenstein_or_one(profile.k_prime, q_work);
  const QLaurent jz = jfun(q_work);

  std::vector<QLaurent> w;
  std::vector<QLaurent> jz_powers;
  QLaurent inv_j_power = inv_j;
  QLaurent jz_power = QLaurent::monomial(1, 0, q_work);
  for (long r = 0; r <= ell; ++r) {
    w.push_back(p_head * inv_j_power);
    jz_powers.push_back(jz_power);
    inv_j_power = inv_j_power * inv_j;
    jz_power = jz_power * jz;
  }

  PSeries kernel;
  for (long s = -(ell + 1); s <= 0; ++s) {
    QLaurent sum(q_work);
    for (long r = 0; r <= ell; ++r) {
      const QLaurent& wr = w[static_cast<std::size_t>(r)];
      if (s >= wr.prec()) {
        throw InsufficientPrecision("generating_kernel_check: p-expansion too short for p^" + std::to_string(s));
      }
      const mpq_class c = wr.coeff(s);
      if (sgn(c) == 0) continue;
      sum += jz_powers[static_cast<std::size_t>(r)] * c;
    }
    kernel.emplace(s, base * sum);
  }

  const MillerBasis basis = miller_basis(k, q_prec);
  KernelCheckReport report;
  report.k = k;
  report.ell = ell;
  report.max_m = max_m;
  report.q_prec = q_prec;
  report.all_match = true;
  for (long m = 0; m <= max_m; ++m) {
    const QLaurent& extracted = kernel.at(-m);
    if (extracted.prec() < q_prec) {
      throw InsufficientPrecision("generating_kernel_check: q-expansion of the p^-" + std::to_string(m) +
                                  " coefficient is only known modulo q^" + std::to_string(extracted.prec()));
    }
    KernelCheckEntry entry;
    entry.m = m;
    entry.compared_through = q_prec;
    entry.matches = extracted.agrees_with(basis.rows[static_cast<std::size_t>(m)], q_prec);
    report.all_match = report.all_match && entry.matches;
    report.entries.push_back(entry);
  }
  return report;
}

}  // namespace mf
