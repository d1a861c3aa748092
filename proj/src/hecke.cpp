#include "modforms/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "modforms/arith.hpp"
#include "modforms/bounds.hpp"
#include "modforms/errors.hpp"

namespace mf {

namespace {

using RealMatrix = std::vector<std::vector<ApproxReal>>;

ApproxReal rounded(const ApproxReal& x, long bits) {
  ApproxReal out(bits);
  mpfr_set(out.get(), x.get(), MPFR_RNDN);
  return out;
}

ApproxReal pow2(long e, long bits) {
  ApproxReal out(1L, bits);
  mpfr_mul_2si(out.get(), out.get(), e, MPFR_RNDN);
  return out;
}

mpz_class power(long base, long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return out;
}

// ---- exact polynomials ----------------------------------------------------

void trim(RationalPoly& f) {
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

RationalPoly derivative(const RationalPoly& f) {
  RationalPoly out;
  for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * static_cast<long>(i));
  trim(out);
  return out;
}

RationalPoly remainder(RationalPoly a, const RationalPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const mpq_class c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

RationalPoly poly_gcd(RationalPoly a, RationalPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RationalPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const mpq_class lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

int sign_at(const RationalPoly& f, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return sgn(acc);
}

std::vector<RationalPoly> sturm_sequence(const RationalPoly& f) {
  std::vector<RationalPoly> seq{f, derivative(f)};
  while (!seq.back().empty() && seq.back().size() > 1) {
    RationalPoly r = remainder(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  return seq;
}

int sign_changes(const std::vector<RationalPoly>& seq, const mpq_class& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Bisects (lo, hi], known to hold exactly one root, until the bracket is
// below 2^-bits relative (or 2^-(bits+64) absolute near zero).
mpq_class refine_root(const RationalPoly& f, mpq_class lo, mpq_class hi, long bits) {
  const int s_hi = sign_at(f, hi);
  if (s_hi == 0) return hi;
  mpq_class rel_eps, abs_eps;
  mpq_set_ui(rel_eps.get_mpq_t(), 1, 1);
  mpq_div_2exp(rel_eps.get_mpq_t(), rel_eps.get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
  mpq_set_ui(abs_eps.get_mpq_t(), 1, 1);
  mpq_div_2exp(abs_eps.get_mpq_t(), abs_eps.get_mpq_t(), static_cast<mp_bitcnt_t>(bits + 64));
  for (;;) {
    const mpq_class width = hi - lo;
    const mpq_class scale = std::max(abs(lo), abs(hi));
    if (width <= rel_eps * scale || width <= abs_eps) break;
    mpq_class mid = (lo + hi) / 2;
    const int s = sign_at(f, mid);
    if (s == 0) return mid;
    if (s == s_hi) {
      hi = std::move(mid);
    } else {
      lo = std::move(mid);
    }
  }
  return (lo + hi) / 2;
}

// Solves for x with x[0] = 1 and (A - lambda I) x = 0, A = H^T.
std::vector<ApproxReal> kernel_vector(const RationalMatrix& h, const ApproxReal& lambda, long wp) {
  const std::size_t n = h.size();
  std::vector<ApproxReal> x(n, ApproxReal(wp));
  x[0] = ApproxReal(1L, wp);
  if (n == 1) return x;
  // Rows: equations i = 0..n-1; columns 1..n-1 unknown, last column rhs.
  RealMatrix m(n, std::vector<ApproxReal>(n, ApproxReal(wp)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      m[i][j - 1] = ApproxReal(h[j][i], wp);
      if (i == j) m[i][j - 1] -= lambda;
    }
    ApproxReal rhs(h[0][i], wp);
    if (i == 0) rhs -= lambda;
    m[i][n - 1] = -rhs;
  }
  const std::size_t cols = n - 1;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (abs(m[r][c]) > abs(m[piv][c])) piv = r;
    }
    if (m[piv][c].is_zero()) throw DegenerateSpectrum("eigenvector system is singular");
    std::swap(m[c], m[piv]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      const ApproxReal f = m[r][c] / m[c][c];
      for (std::size_t j = c; j <= cols; ++j) m[r][j] -= f * m[c][j];
    }
  }
  for (std::size_t c = cols; c-- > 0;) {
    ApproxReal acc = m[c][cols];
    for (std::size_t j = c + 1; j < cols; ++j) acc -= m[c][j] * x[j + 1];
    x[c + 1] = acc / m[c][c];
  }
  return x;
}

// Gaussian elimination with partial pivoting on [a | b]; b has any number
// of columns. Returns false if a pivot vanishes.
bool solve_in_place(RealMatrix& a, RealMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t nb = b.empty() ? 0 : b[0].size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (abs(a[r][c]) > abs(a[piv][c])) piv = r;
    }
    if (a[piv][c].is_zero()) return false;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      const ApproxReal f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      for (std::size_t j = 0; j < nb; ++j) b[r][j] -= f * b[c][j];
    }
  }
  for (std::size_t c = n; c-- > 0;) {
    for (std::size_t j = 0; j < nb; ++j) {
      ApproxReal acc = b[c][j];
      for (std::size_t i = c + 1; i < n; ++i) acc -= a[c][i] * b[i][j];
      b[c][j] = acc / a[c][c];
    }
  }
  return true;
}

ApproxReal inf_norm(const RealMatrix& m, long bits) {
  ApproxReal best(bits);
  for (const auto& row : m) {
    ApproxReal s(bits);
    for (const auto& v : row) s += abs(v);
    best = max(best, s);
  }
  return best;
}

long working_bits(long bits) { return bits + 128; }

}  // namespace

// ---- Hecke operators ------------------------------------------------------

QLaurent hecke_tp(const QLaurent& f, long k, long p) {
  if (!is_prime(p)) throw InvalidArgument("hecke_tp: p = " + std::to_string(p) + " is not prime");
  if (k < 0 || k % 2 != 0) throw InvalidArgument("hecke_tp: weight must be even and nonnegative");
  if (!f.is_zero() && f.valuation() < 0) {
    throw InvalidArgument("hecke_tp: series must be holomorphic at the cusp");
  }
  const long out_prec = f.prec() / p;
  const mpz_class pk = power(p, k - 1);
  std::vector<mpq_class> out(static_cast<std::size_t>(std::max(out_prec, 0L)));
  for (long n = 0; n < out_prec; ++n) {
    mpq_class c = f.coeff(p * n);
    if (n % p == 0) c += mpq_class(pk) * f.coeff(n / p);
    out[static_cast<std::size_t>(n)] = c;
  }
  return QLaurent(0, std::move(out), out_prec);
}

RationalMatrix hecke_matrix(const MillerBasis& basis, long p) {
  const long ell = basis.profile.ell;
  if (ell == 0) return {};
  if (basis.prec < p * (ell + 1)) {
    throw InsufficientPrecision("hecke_matrix: basis precision " + std::to_string(basis.prec) +
                                " below p*(ell+1) = " + std::to_string(p * (ell + 1)));
  }
  RationalMatrix h(static_cast<std::size_t>(ell), std::vector<mpq_class>(static_cast<std::size_t>(ell)));
  for (long m = 1; m <= ell; ++m) {
    const QLaurent image = hecke_tp(basis.rows[static_cast<std::size_t>(m)], basis.profile.k, p);
    for (long n = 1; n <= ell; ++n) {
      h[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(n - 1)] = image.coeff(n);
    }
  }
  return h;
}

RationalMatrix hecke_matrix(long k, long p) {
  if (!is_prime(p)) throw InvalidArgument("hecke_matrix: p = " + std::to_string(p) + " is not prime");
  const long ell = weight_profile(k).ell;
  if (ell == 0) return {};
  return hecke_matrix(miller_basis(k, p * (ell + 1) + 1), p);
}

RationalPoly characteristic_polynomial(const RationalMatrix& a) {
  // Faddeev-LeVerrier: M_1 = I, c_{n-i} = -tr(A M_i)/i, M_{i+1} = A M_i + c_{n-i} I.
  const std::size_t n = a.size();
  RationalPoly c(n + 1);
  c[n] = 1;
  RationalMatrix m(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  for (std::size_t step = 1; step <= n; ++step) {
    RationalMatrix am(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        mpq_class s = 0;
        for (std::size_t t = 0; t < n; ++t) s += a[i][t] * m[t][j];
        am[i][j] = s;
      }
    }
    mpq_class tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    c[n - step] = -tr / static_cast<long>(step);
    m = std::move(am);
    for (std::size_t i = 0; i < n; ++i) m[i][i] += c[n - step];
  }
  return c;
}

bool is_squarefree(const RationalPoly& f) {
  RationalPoly g = f;
  trim(g);
  if (g.size() <= 2) return true;
  return poly_gcd(g, derivative(g)).size() == 1;
}

std::vector<ApproxReal> real_roots(const RationalPoly& f_in, long bits) {
  RationalPoly f = f_in;
  trim(f);
  if (f.empty()) throw InvalidArgument("real_roots: zero polynomial");
  if (!is_squarefree(f)) throw DegenerateSpectrum("real_roots: repeated root");
  std::vector<ApproxReal> out;
  if (f.size() == 1) return out;

  // Cauchy bound rounded up to a power of two.
  mpq_class bound = 0;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) bound = std::max(bound, mpq_class(abs(f[i] / f.back())));
  bound += 1;
  mpq_class r = 1;
  while (r < bound) r *= 2;

  const auto seq = sturm_sequence(f);
  std::vector<std::pair<mpq_class, mpq_class>> stack{{-r, r}};
  std::vector<std::pair<mpq_class, mpq_class>> isolated;
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    const int count = sign_changes(seq, lo) - sign_changes(seq, hi);
    if (count == 0) continue;
    if (count == 1) {
      isolated.emplace_back(lo, hi);
      continue;
    }
    const mpq_class mid = (lo + hi) / 2;
    stack.emplace_back(lo, mid);
    stack.emplace_back(mid, hi);
  }
  std::sort(isolated.begin(), isolated.end(),
            [](const auto& x, const auto& y) { return x.first > y.first; });
  for (const auto& [lo, hi] : isolated) out.emplace_back(refine_root(f, lo, hi, bits + 8), bits);
  return out;
}

Tolerance::Tolerance(long bits) : relative(pow2(-(bits / 2), bits)), absolute(pow2(-64, bits)) {}

bool Tolerance::close(const ApproxReal& a, const ApproxReal& b, const ApproxReal& scale) const {
  return abs(a - b) <= relative * abs(scale) + absolute;
}

// ---- eigenforms -----------------------------------------------------------

namespace {

std::vector<Eigenform> split_with(const MillerBasis& basis, long p, long bits) {
  const long ell = basis.profile.ell;
  const long wp = working_bits(bits);
  const RationalMatrix h = hecke_matrix(basis, p);
  const RationalPoly chi = characteristic_polynomial(h);
  if (!is_squarefree(chi)) return {};
  const std::vector<ApproxReal> lambdas = real_roots(chi, wp);
  if (static_cast<long>(lambdas.size()) != ell) {
    throw DegenerateSpectrum("characteristic polynomial of T_" + std::to_string(p) +
                             " has non-real roots");
  }
  const Tolerance tol(bits);
  for (std::size_t i = 1; i < lambdas.size(); ++i) {
    if (tol.close(lambdas[i - 1], lambdas[i], max(abs(lambdas[i - 1]), abs(lambdas[i])))) return {};
  }

  std::vector<Eigenform> out;
  for (const auto& lambda : lambdas) {
    const std::vector<ApproxReal> x = kernel_vector(h, lambda, wp);
    Eigenform g;
    g.k = basis.profile.k;
    g.bits = bits;
    g.q_prec = basis.prec;
    g.hecke_prime = p;
    g.eigenvalue = rounded(lambda, bits);
    g.coeffs.assign(static_cast<std::size_t>(basis.prec), ApproxReal(bits));
    for (long n = 1; n < basis.prec; ++n) {
      ApproxReal acc(wp);
      for (long m = 1; m <= ell; ++m) {
        const mpq_class c = basis.rows[static_cast<std::size_t>(m)].coeff(n);
        if (sgn(c) == 0) continue;
        acc += x[static_cast<std::size_t>(m - 1)] * ApproxReal(c, wp);
      }
      g.coeffs[static_cast<std::size_t>(n)] = rounded(acc, bits);
    }
    g.coeffs[1] = ApproxReal(1L, bits);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::vector<Eigenform> eigenforms(const MillerBasis& basis, long bits) {
  const long ell = basis.profile.ell;
  if (ell == 0) throw InvalidArgument("eigenforms: S_k is zero for k = " + std::to_string(basis.profile.k));
  for (long p : {2L, 3L}) {
    if (basis.prec < p * (ell + 1)) {
      throw InsufficientPrecision("eigenforms: basis precision too small for T_" + std::to_string(p));
    }
    std::vector<Eigenform> forms = split_with(basis, p, bits);
    if (!forms.empty()) return forms;
  }
  throw DegenerateSpectrum("T_2 and T_3 both have repeated eigenvalues on S_" +
                           std::to_string(basis.profile.k));
}

std::vector<Eigenform> eigenforms(long k, long bits, long q_prec) {
  const long ell = weight_profile(k).ell;
  if (ell == 0) throw InvalidArgument("eigenforms: S_k is zero for k = " + std::to_string(k));
  return eigenforms(miller_basis(k, std::max(q_prec, 3 * (ell + 1) + 1)), bits);
}

EigenDecomposition decompose(const QLaurent& g, const std::vector<Eigenform>& forms, long bits) {
  if (forms.empty()) throw InvalidArgument("decompose: no eigenforms");
  const long k = forms.front().k;
  const long ell = static_cast<long>(forms.size());
  if (g.prec() < ell + 1) throw InsufficientPrecision("decompose: need coefficients through q^ell");
  if (sgn(g.coeff(0)) != 0) throw InvalidArgument("decompose: not a cusp form");
  const long wp = working_bits(bits);
  const auto n = static_cast<std::size_t>(ell);

  RealMatrix x(n, std::vector<ApproxReal>(n, ApproxReal(wp)));
  RealMatrix rhs(n, std::vector<ApproxReal>(n + 1, ApproxReal(wp)));
  std::vector<ApproxReal> y(n, ApproxReal(wp));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) x[r][i] = rounded(forms[i].coeffs.at(r + 1), wp);
    y[r] = ApproxReal(g.coeff(static_cast<long>(r) + 1), wp);
    rhs[r][0] = y[r];
    rhs[r][r + 1] = ApproxReal(1L, wp);
  }
  RealMatrix a = x;
  EigenDecomposition dec;
  dec.k = k;
  dec.bits = bits;
  dec.forms = forms;
  dec.total = ApproxReal(bits);
  dec.residual = ApproxReal(bits);
  dec.condition = ApproxReal(bits);
  if (!solve_in_place(a, rhs)) {
    dec.ok = false;
    dec.c.assign(n, ApproxReal(bits));
    mpfr_set_inf(dec.condition.get(), 1);
    return dec;
  }
  std::vector<ApproxReal> c(n, ApproxReal(wp));
  RealMatrix inverse(n, std::vector<ApproxReal>(n, ApproxReal(wp)));
  for (std::size_t r = 0; r < n; ++r) {
    c[r] = rhs[r][0];
    for (std::size_t j = 0; j < n; ++j) inverse[r][j] = rhs[r][j + 1];
  }

  ApproxReal residual(wp);
  ApproxReal scale(wp);
  for (std::size_t r = 0; r < n; ++r) {
    ApproxReal acc(wp);
    ApproxReal mag(wp);
    for (std::size_t i = 0; i < n; ++i) {
      acc += x[r][i] * c[i];
      mag += abs(x[r][i] * c[i]);
    }
    residual = max(residual, abs(acc - y[r]));
    scale = max(scale, max(mag, abs(y[r])));
  }
  const Tolerance tol(bits);
  dec.residual = rounded(residual, bits);
  dec.condition = rounded(inf_norm(x, wp) * inf_norm(inverse, wp), bits);
  ApproxReal total(wp);
  for (const auto& ci : c) {
    dec.c.push_back(rounded(ci, bits));
    total += abs(ci);
  }
  dec.total = rounded(total, bits);
  dec.ok = residual <= tol.relative * scale + tol.absolute;
  return dec;
}

EigenDecomposition decompose(const QLaurent& g, long k, long bits) {
  const long ell = weight_profile(k).ell;
  if (ell == 0) throw InvalidArgument("decompose: S_k is zero for k = " + std::to_string(k));
  const long q_prec = std::max(ell + 2, std::min(g.prec(), 2 * ell + 2));
  return decompose(g, eigenforms(k, bits, q_prec), bits);
}

DeligneReport deligne_check(const Eigenform& g, long nmax) {
  if (nmax >= static_cast<long>(g.coeffs.size())) {
    throw InsufficientPrecision("deligne_check: coefficients known below q^" +
                                std::to_string(g.coeffs.size()));
  }
  const long bits = g.bits;
  const Tolerance tol(bits);
  const ApproxReal limit = ApproxReal(1L, bits) + tol.relative;
  DeligneReport rep;
  rep.nmax = nmax;
  rep.max_prime_ratio = ApproxReal(bits);
  rep.max_general_ratio = ApproxReal(bits);
  for (long n = 1; n <= nmax; ++n) {
    const ApproxReal root = sqrt(ApproxReal(power(n, g.k - 1), bits));
    const ApproxReal value = abs(g.coeffs[static_cast<std::size_t>(n)]);
    const ApproxReal general = value / (ApproxReal(divisor_count(n), bits) * root);
    if (general > rep.max_general_ratio) {
      rep.max_general_ratio = general;
      rep.worst_n = n;
    }
    if (general > limit) rep.general_bound_ok = false;
    if (is_prime(n)) {
      const ApproxReal prime = value / (ApproxReal(2L, bits) * root);
      rep.max_prime_ratio = max(rep.max_prime_ratio, prime);
      if (prime > limit) rep.prime_bound_ok = false;
    }
  }
  return rep;
}

MultiplicativityReport multiplicativity_check(const Eigenform& g, long limit) {
  const long bits = g.bits;
  const Tolerance tol(bits);
  const long top = std::min(limit, static_cast<long>(g.coeffs.size()) - 1);
  MultiplicativityReport rep;
  rep.max_relative_error = ApproxReal(bits);
  for (long m = 2; m * (m + 1) <= top; ++m) {
    for (long n = m + 1; m * n <= top; ++n) {
      if (std::gcd(m, n) != 1) continue;
      const ApproxReal prod = g.coeffs[static_cast<std::size_t>(m)] * g.coeffs[static_cast<std::size_t>(n)];
      const ApproxReal diff = abs(g.coeffs[static_cast<std::size_t>(m * n)] - prod);
      ++rep.checked_pairs;
      if (diff > tol.relative * abs(prod) + tol.absolute) ++rep.failures;
      const ApproxReal rel = diff / max(abs(prod), tol.absolute);
      rep.max_relative_error = max(rep.max_relative_error, rel);
    }
  }
  return rep;
}

// ---- Petersson bounds -----------------------------------------------------

ApproxReal petersson_upper_ff(std::span<const ApproxReal> a, long k, long n_tail, long bits) {
  const long ell = weight_profile(k).ell;
  if (ell == 0) throw InvalidArgument("petersson_upper_ff: S_k is zero");
  if (n_tail < ell) throw InvalidArgument("petersson_upper_ff: n_tail must be >= ell");
  if (static_cast<long>(a.size()) <= n_tail) {
    throw InsufficientPrecision("petersson_upper_ff: coefficients needed through n_tail");
  }
  const ApproxReal pi = ApproxReal::pi(bits);
  const ApproxReal two_pi_sqrt3 = ApproxReal(2L, bits) * pi * sqrt(ApproxReal(3L, bits));
  const ApproxReal prefactor = ApproxReal(12L, bits) / pow(ApproxReal(4L, bits) * pi, k);

  ApproxReal sum(bits);
  for (long n = 1; n <= n_tail; ++n) {
    const ApproxReal& an = a[static_cast<std::size_t>(n)];
    if (an.is_zero()) continue;
    const ApproxReal x = two_pi_sqrt3 * ApproxReal(n, bits);
    sum += an * an / ApproxReal(power(n, k - 1), bits) * incomplete_gamma_int(k - 2, x);
  }

  // Beyond n_tail: |a(n)| <= E e^{2 pi 0.865 n} with
  // E = 2003.34 * 7.358^ell * sum_{m<=ell} |a(m)| e^{-2 pi 1.16 m}, and
  // e^{x} Gamma(k-1, x)/n^{k-1} (x = 2 pi sqrt3 n) is decreasing in n.
  const ApproxReal v = ApproxReal::from_decimal(constants::kV, bits, Rounding::Down);
  ApproxReal inner(bits);
  for (long m = 1; m <= ell; ++m) {
    inner += abs(a[static_cast<std::size_t>(m)]) *
             exp(-(ApproxReal(2L, bits) * pi * v * ApproxReal(m, bits)));
  }
  const ApproxReal envelope =
      ApproxReal::from_decimal(constants::kEnvelopeScale, bits, Rounding::Up) *
      pow(ApproxReal::from_decimal(constants::kDeltaRatio, bits, Rounding::Up), ell) * inner;
  const long first = n_tail + 1;
  const ApproxReal x1 = two_pi_sqrt3 * ApproxReal(first, bits);
  const ApproxReal piece = incomplete_gamma_int(k - 2, x1) * exp(x1) / ApproxReal(power(first, k - 1), bits);
  const ApproxReal gap = ApproxReal::from_decimal(constants::kGeometricGap, bits, Rounding::Down);
  const ApproxReal geometric =
      exp(-(gap * ApproxReal(first, bits))) / (ApproxReal(1L, bits) - exp(-gap));
  const ApproxReal tail = envelope * envelope * piece * geometric;
  return prefactor * (sum + tail);
}

ApproxReal petersson_upper_ff(const QLaurent& g, long k, long n_tail, long bits) {
  std::vector<ApproxReal> a;
  a.reserve(static_cast<std::size_t>(n_tail) + 1);
  for (long n = 0; n <= n_tail; ++n) a.emplace_back(g.coeff(n), bits);
  return petersson_upper_ff(a, k, n_tail, bits);
}

ApproxReal petersson_lower(const EigenDecomposition& dec) {
  if (!dec.ok) throw InvalidArgument("petersson_lower: decomposition residual above tolerance");
  const long bits = dec.bits;
  const long k = dec.k;
  ApproxReal sq(bits);
  for (const auto& c : dec.c) sq += c * c;
  if (sq.is_zero()) return sq;
  const ApproxReal pi = ApproxReal::pi(bits);
  const ApproxReal denom = ApproxReal(32L, bits) * pi * pi *
                           pow(ApproxReal(4L, bits) * pi, k) * log(ApproxReal(k, bits));
  return sq * ApproxReal(3L, bits) * factorial(static_cast<unsigned long>(k - 1), bits) / denom;
}

ApproxReal symsq_lower(long k, long bits) {
  if (k < 2) throw InvalidArgument("symsq_lower: k must be >= 2");
  return ApproxReal(1L, bits) / (ApproxReal(64L, bits) * log(ApproxReal(k, bits)));
}

}  // namespace mf
