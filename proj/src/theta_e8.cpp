#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>
#include <cmath>
#include <string>

#include "modforms/errors.hpp"
#include "modforms/forms.hpp"

namespace mf {

namespace {

constexpr int kDim = 8;
// Off-diagonal monomials -x_i x_j of the form (0-based indices).
constexpr std::array<std::array<int, 2>, 7> kCross = {{{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}}};

long exact_form(const std::array<long, kDim>& x) {
  long v = 0;
  for (int i = 0; i < kDim; ++i) v += x[i] * x[i];
  for (const auto& [i, j] : kCross) v -= x[i] * x[j];
  return v;
}

// Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2, from the exact LDL^T of the
// symmetric matrix of Q, computed in rationals and rounded once.
struct Decomposition {
  std::array<double, kDim> d{};
  std::array<std::array<double, kDim>, kDim> mu{};
};

Decomposition decompose_form() {
  std::array<std::array<mpq_class, kDim>, kDim> s;
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) s[i][j] = (i == j) ? 1 : 0;
  }
  for (const auto& [i, j] : kCross) {
    s[i][j] = mpq_class(-1, 2);
    s[j][i] = mpq_class(-1, 2);
  }
  // Symmetric Gaussian elimination eliminating x_0 first.
  Decomposition out;
  for (int i = 0; i < kDim; ++i) {
    const mpq_class pivot = s[i][i];
    if (sgn(pivot) <= 0) throw std::logic_error("theta_e8: form is not positive definite");
    out.d[i] = pivot.get_d();
    for (int j = i + 1; j < kDim; ++j) {
      const mpq_class mu = s[i][j] / pivot;
      out.mu[i][j] = mu.get_d();
      for (int l = i + 1; l < kDim; ++l) s[j][l] -= mu * s[i][l];
    }
  }
  return out;
}

struct Enumerator {
  const Decomposition& dec;
  long bound;
  std::vector<mpz_class>& counts;
  std::array<long, kDim> x{};

  // Coordinates are fixed from the last index down; the pruning bound is
  // widened by `slack` so rounding can only add candidates, and each leaf is
  // decided by the exact integer value of Q.
  static constexpr double slack = 1e-9;

  void run(int i, double remaining) {
    double center = 0;
    for (int j = i + 1; j < kDim; ++j) center -= dec.mu[i][j] * static_cast<double>(x[j]);
    const double radius = std::sqrt(std::max(0.0, remaining + slack) / dec.d[i]) + slack;
    const auto lo = static_cast<long>(std::ceil(center - radius));
    const auto hi = static_cast<long>(std::floor(center + radius));
    for (long v = lo; v <= hi; ++v) {
      x[i] = v;
      const double diff = static_cast<double>(v) - center;
      const double left = remaining - dec.d[i] * diff * diff;
      if (left < -slack) continue;
      if (i == 0) {
        const long q = exact_form(x);
        if (q <= bound) counts[static_cast<std::size_t>(q)] += 1;
      } else {
        run(i - 1, left);
      }
    }
    x[i] = 0;
  }
};

}  // namespace

QLaurent theta_e8(long prec) {
  if (prec < 1 || prec > 12) {
    throw InvalidArgument("theta_e8: prec must lie in 1..12, got " + std::to_string(prec));
  }
  const Decomposition dec = decompose_form();
  std::vector<mpz_class> counts(static_cast<std::size_t>(prec), mpz_class(0));
  Enumerator e{dec, prec - 1, counts, {}};
  e.run(kDim - 1, static_cast<double>(prec - 1));
  return QLaurent::from_integers(0, counts, prec);
}

}  // namespace mf
