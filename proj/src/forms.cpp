#include "modforms/forms.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "modforms/arith.hpp"
#include "modforms/errors.hpp"

namespace mf {

namespace {

void require_even_weight(long k, const char* who) {
  if (k < 4 || k % 2 != 0) {
    throw InvalidArgument(std::string(who) + ": weight must be even and >= 4, got " + std::to_string(k));
  }
}

zs::ZVec times_e(const zs::ZVec& a, const zs::ZVec& b, std::size_t n) { return zs::mul_trunc(a, b, n); }

}  // namespace

long dim_cusp(long k) {
  require_even_weight(k, "dim_cusp");
  return k % 12 == 2 ? k / 12 - 1 : k / 12;
}

WeightProfile weight_profile(long k) {
  WeightProfile p;
  p.k = k;
  p.ell = dim_cusp(k);
  p.k_prime = k - 12 * p.ell;
  if (k % 4 == 0) p.nu = p.k_prime / 4;
  return p;
}

namespace detail {

zs::ZVec eisenstein4_z(std::size_t n) {
  zs::ZVec out = sigma_table(3, static_cast<long>(n));
  if (n > 0) out[0] = 1;
  for (std::size_t i = 1; i < n; ++i) out[i] *= 240;
  return out;
}

zs::ZVec eisenstein6_z(std::size_t n) {
  zs::ZVec out = sigma_table(5, static_cast<long>(n));
  if (n > 0) out[0] = 1;
  for (std::size_t i = 1; i < n; ++i) out[i] *= -504;
  return out;
}

zs::ZVec inverse_j_z(std::size_t n) {
  zs::ZVec out(n);
  if (n < 2) return out;
  const zs::ZVec e4 = eisenstein4_z(n - 1);
  const zs::ZVec e4_cubed = zs::pow_trunc(e4, 3, n - 1);
  const zs::ZVec unit = zs::mul_trunc(zs::eta24(n - 1), zs::inverse_unit(e4_cubed, n - 1), n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) out[i + 1] = unit[i];
  return out;
}

}  // namespace detail

QLaurent eisenstein(long k, long prec) {
  require_even_weight(k, "eisenstein");
  if (prec < 1) throw InvalidArgument("eisenstein: prec must be >= 1");
  const mpq_class factor = mpq_class(-2 * k) / bernoulli(k);
  const zs::ZVec sig = sigma_table(k - 1, prec);
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(prec));
  coeffs[0] = 1;
  for (long n = 1; n < prec; ++n) coeffs[static_cast<std::size_t>(n)] = factor * sig[static_cast<std::size_t>(n)];
  return QLaurent(0, std::move(coeffs), prec);
}

QLaurent delta(long prec) {
  if (prec < 2) throw InvalidArgument("delta: prec must be >= 2");
  const zs::ZVec unit = zs::eta24(static_cast<std::size_t>(prec - 1));
  return QLaurent::from_integers(1, unit, prec);
}

QLaurent delta_from_eisenstein(long prec) {
  if (prec < 2) throw InvalidArgument("delta: prec must be >= 2");
  const QLaurent e4 = eisenstein(4, prec);
  const QLaurent e6 = eisenstein(6, prec);
  return (pow(e4, 3) - pow(e6, 2)) * mpq_class(1, 1728);
}

QLaurent jfun(long prec) {
  if (prec < 1) throw InvalidArgument("jfun: prec must be >= 1");
  const QLaurent e4_cubed = pow(eisenstein(4, prec + 1), 3);
  return (e4_cubed * invert(delta(prec + 2))).truncate(prec);
}

MillerBasis miller_basis(long k, long prec) {
  const WeightProfile profile = weight_profile(k);
  const long ell = profile.ell;
  if (prec < ell + 2) {
    throw InvalidArgument("miller_basis: prec must be >= ell + 2 = " + std::to_string(ell + 2));
  }
  const auto n = static_cast<std::size_t>(prec);
  // g_m = E_4^{a-3m} E_6^b Delta^m, built from the generators so every
  // coefficient stays polynomial in n (Delta/E_4^3 grows like 232^n).
  const long b = (k % 4 == 2) ? 1 : 0;
  const long a = (k - 6 * b) / 4;
  std::vector<zs::ZVec> rows;
  rows.reserve(static_cast<std::size_t>(ell) + 1);
  const zs::ZVec e4 = detail::eisenstein4_z(n);
  zs::ZVec base = zs::pow_trunc(e4, static_cast<unsigned long>(a - 3 * ell), n);
  if (b == 1) base = times_e(base, detail::eisenstein6_z(n), n);
  base.resize(n);
  const zs::ZVec x = zs::pow_trunc(e4, 3, n);
  std::vector<zs::ZVec> lifted{base};
  for (long j = 1; j <= ell; ++j) {
    lifted.push_back(times_e(lifted.back(), x, n));
    lifted.back().resize(n);
  }
  zs::ZVec y(n);
  const zs::ZVec eta = zs::eta24(n);
  for (std::size_t i = 1; i < n; ++i) y[i] = eta[i - 1];
  zs::ZVec y_power(n);
  y_power[0] = 1;
  for (long m = 0; m <= ell; ++m) {
    if (m > 0) {
      y_power = times_e(y_power, y, n);
      y_power.resize(n);
    }
    rows.push_back(m == 0 ? lifted[static_cast<std::size_t>(ell)]
                          : times_e(lifted[static_cast<std::size_t>(ell - m)], y_power, n));
    rows.back().resize(n);
  }

  // Echelon reduction, lowest exponent first: clear positions m+1..ell of row m.
  for (long m = ell - 1; m >= 0; --m) {
    auto& row = rows[static_cast<std::size_t>(m)];
    for (long i = m + 1; i <= ell; ++i) {
      const mpz_class c = row[static_cast<std::size_t>(i)];
      if (sgn(c) == 0) continue;
      const auto& pivot = rows[static_cast<std::size_t>(i)];
      for (std::size_t j = static_cast<std::size_t>(i); j < n; ++j) {
        mpz_submul(row[j].get_mpz_t(), c.get_mpz_t(), pivot[j].get_mpz_t());
      }
    }
  }

  MillerBasis basis;
  basis.profile = profile;
  basis.prec = prec;
  for (const auto& row : rows) basis.rows.push_back(QLaurent::from_integers(0, row, prec));
  return basis;
}

mpq_class akm_coefficient(const MillerBasis& basis, long m, long n) {
  const long ell = basis.profile.ell;
  if (m < 1 || m > ell) {
    throw InvalidArgument("akm_coefficient: m must lie in 1.." + std::to_string(ell));
  }
  if (n >= basis.prec) {
    throw InsufficientPrecision("akm_coefficient: n = " + std::to_string(n) +
                                " but the basis is known modulo q^" + std::to_string(basis.prec));
  }
  if (n <= ell) return n == m ? 1 : 0;
  return basis.rows[static_cast<std::size_t>(m)].coeff(n);
}

namespace {

// Paterson-Stockmeyer evaluation of E_4^{3 ell} sum_i c_i t^i: blocks of `step` terms
// combine the powers t^0..t^{step-1} by scalar products, then Horner runs in
// T = t^step. About 2*sqrt(ell) full series products instead of ell, but the
// coefficients of t = 1/j grow like 232^n, so this only pays off while prec
// stays close to ell.
zs::ZVec paterson_stockmeyer(const std::vector<mpz_class>& c, const zs::ZVec& t, const zs::ZVec& e4, long ell,
                             std::size_t n) {
  const std::size_t head = c.size();
  std::size_t step = 1;
  while (step * step < head) ++step;
  std::vector<zs::ZVec> powers{zs::ZVec(n)};
  powers[0][0] = 1;
  for (std::size_t i = 1; i <= step; ++i) {
    powers.push_back(i == 1 ? t : zs::mul_trunc(powers.back(), t, n));
    powers.back().resize(n);
  }
  const auto block = [&](std::size_t first) {
    zs::ZVec q(n);
    for (std::size_t i = 0; i < step && first + i < head; ++i) {
      const mpz_class& ci = c[first + i];
      if (sgn(ci) == 0) continue;
      const auto& tp = powers[i];
      for (std::size_t j = i; j < n; ++j) mpz_addmul(q[j].get_mpz_t(), ci.get_mpz_t(), tp[j].get_mpz_t());
    }
    return q;
  };
  const std::size_t blocks = (head + step - 1) / step;
  zs::ZVec s = block((blocks - 1) * step);
  for (std::size_t j = blocks - 1; j-- > 0;) {
    s = zs::mul_trunc(powers[step], s, n);
    s.resize(n);
    const zs::ZVec q = block(j * step);
    for (std::size_t i = 0; i < n; ++i) s[i] += q[i];
  }
  s = zs::mul_trunc(zs::pow_trunc(e4, static_cast<unsigned long>(3 * ell), n), s, n);
  s.resize(n);
  return s;
}

// sum_i c_i (E_4^3)^{ell-i} Delta^i by Horner in the two generators; 2 ell
// products, but every coefficient grows only polynomially in n.
zs::ZVec homogeneous_sum(const std::vector<mpz_class>& c, const zs::ZVec& e4, std::size_t n) {
  zs::ZVec x = zs::pow_trunc(e4, 3, n);
  x.resize(n);
  zs::ZVec y(n);
  const zs::ZVec eta = zs::eta24(n);
  for (std::size_t i = 1; i < n; ++i) y[i] = eta[i - 1];
  zs::ZVec y_power(n);
  y_power[0] = 1;
  zs::ZVec s(n);
  s[0] = c[0];
  for (std::size_t i = 1; i < c.size(); ++i) {
    s = zs::mul_trunc(s, x, n);
    s.resize(n);
    y_power = zs::mul_trunc(y_power, y, n);
    y_power.resize(n);
    if (sgn(c[i]) == 0) continue;
    for (std::size_t j = i; j < n; ++j) mpz_addmul(s[j].get_mpz_t(), c[i].get_mpz_t(), y_power[j].get_mpz_t());
  }
  return s;
}

// Measured crossover: the Horner route wins once prec outgrows ell^{3/2}.
bool homogeneous_cheaper(long ell, long prec) {
  const double l = static_cast<double>(ell);
  return 3.0 * l * std::sqrt(l) < 4.0 * static_cast<double>(prec);
}

}  // namespace

zs::ZVec extremal_form_z(long k, long prec) {
  if (k < 4 || k % 4 != 0) {
    throw InvalidArgument("extremal_form: weight must be a positive multiple of 4, got " + std::to_string(k));
  }
  const long ell = dim_cusp(k);
  if (prec < ell + 2) {
    throw InvalidArgument("extremal_form: prec must be >= ell + 2 = " + std::to_string(ell + 2));
  }
  const auto n = static_cast<std::size_t>(prec);
  const auto head = static_cast<std::size_t>(ell) + 1;
  const zs::ZVec e4 = detail::eisenstein4_z(n);
  const zs::ZVec t = detail::inverse_j_z(head);

  // sum_i c_i E_4^{k/4} t^i = 1 + O(q^{ell+1})  <=>  sum_i c_i t^i = E_4^{-k/4} mod q^{ell+1}.
  // t = q + O(q^2) makes the system unitriangular over the integers.
  zs::ZVec residual =
      zs::pow_trunc(zs::inverse_unit(std::span(e4).first(head), head), static_cast<unsigned long>(k / 4), head);
  std::vector<mpz_class> c(head);
  zs::ZVec t_power(head);
  t_power[0] = 1;
  for (std::size_t i = 0; i < head; ++i) {
    c[i] = residual[i];
    for (std::size_t j = i; j < head; ++j) mpz_submul(residual[j].get_mpz_t(), c[i].get_mpz_t(), t_power[j].get_mpz_t());
    if (i + 1 < head) t_power = zs::mul_trunc(t_power, t, head);
  }

  zs::ZVec s;
  if (homogeneous_cheaper(ell, prec)) {
    s = homogeneous_sum(c, e4, n);
  } else {
    s = paterson_stockmeyer(c, detail::inverse_j_z(n), e4, ell, n);
  }
  zs::ZVec f = zs::mul_trunc(zs::pow_trunc(e4, static_cast<unsigned long>(k / 4 - 3 * ell), n), s, n);
  f.resize(n);

  if (f[0] != 1) throw std::logic_error("extremal_form: constant term is not 1");
  for (std::size_t i = 1; i < head; ++i) {
    if (sgn(f[i]) != 0) throw std::logic_error("extremal_form: coefficient below ell+1 is nonzero");
  }
  return f;
}

QLaurent extremal_form(long k, long prec) {
  const zs::ZVec f = extremal_form_z(k, prec);
  return QLaurent::from_integers(0, f, prec);
}

}  // namespace mf
