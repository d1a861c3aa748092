#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modforms/approx_real.hpp"

namespace mf {

/// Stated constants of the coefficient bounds, kept as decimal literals and
/// converted to binary in the direction that keeps each use conservative.
namespace constants {
inline constexpr std::string_view kY = "0.865";
inline constexpr std::string_view kV = "1.16";
inline constexpr std::string_view kEnvelopeScale = "2003.34";
inline constexpr std::string_view kDeltaRatio = "7.358";
inline constexpr std::string_view kInverseDelta = "1488.802";
inline constexpr std::string_view kEisensteinProduct = "40.368";
inline constexpr std::string_view kJTail = "0.000003636545";
inline constexpr std::string_view kGridFloor = "30";
inline constexpr std::string_view kTheorem1Term1 = "11";
inline constexpr std::string_view kTheorem1Exp = "18.72";
inline constexpr std::string_view kTheorem1Base = "41.41";
inline constexpr std::string_view kTheorem1Decay = "7.288";
inline constexpr std::string_view kGeometricGap = "0.01288";
inline constexpr std::string_view kConsolidated = "12168805";
}  // namespace constants

/// e^{-x} sum_{i=0}^{d} d!/i! x^i = int_x^inf u^d e^{-u} du, x >= 0.
ApproxReal incomplete_gamma_int(long d, const ApproxReal& x);

/// 2003.34 * 7.358^ell * e^{-2 pi 1.16 m} * e^{2 pi 0.865 n}.
ApproxReal akmn_envelope(long k, long m, long n, long bits);

/// Evaluated bound |a(n)| <= B d(n) n^{(k-1)/2} for a cusp form with first
/// coefficients a(1..ell).
struct BoundReport {
  long k = 0;
  long ell = 0;
  long bits = 0;
  std::vector<ApproxReal> a;
  ApproxReal weighted_norm;  // sqrt(sum |a(m)|^2 / m^{k-1})
  ApproxReal inner_sum;      // sum a(m) e^{-7.288 m}, signed
  ApproxReal term1;          // 11 * weighted_norm
  ApproxReal term2;          // e^{18.72} 41.41^{k/2} / k^{(k-1)/2} * |inner_sum|
  ApproxReal B;              // sqrt(log k) (term1 + term2)
  // The unconsolidated factor 12168805 sqrt(32 pi^2 k / (3 (k-1)))
  // next to the e^{18.72} used in B.
  ApproxReal consolidated_factor;
  ApproxReal statement_factor;
  std::map<std::string, std::string> constants;
};

BoundReport theorem1_B(long k, std::span<const ApproxReal> a, long bits);
/// B * d(n) * n^{(k-1)/2}.
ApproxReal theorem1_bound(const BoundReport& report, long n);

struct ConstantCheck {
  std::string name;
  ApproxReal recomputed;
  ApproxReal printed;
  bool ok = false;
  std::string note;
};

struct KernelConstantsReport {
  long bits = 0;
  std::string y;
  std::string v;
  std::vector<ConstantCheck> checks;
  bool all_ok = false;
  std::string rounding_policy;
};

/// Recomputes the Delta, 1/Delta, Eisenstein-product and j-tail bounds at
/// Im z = y, Im tau = v, using d(n) <= 2 sqrt(n), sigma_{k-1}(n) <= 2 n^k
/// and the external tail inequality for the coefficients of j.
KernelConstantsReport kernel_constants_verify(std::string_view y, std::string_view v, long bits);

/// Tail bound of j at height `height`, over exponents n >= first, from the
/// coefficient inequality (taken as given)
///   c(n) <= e^{4 pi sqrt n} / (sqrt2 n^{3/4}) (1 - 3/(32 pi sqrt n) + 0.055/n).
ApproxReal j_tail_bound(std::string_view height, long first, long bits);
/// Closed-form majorant (1.055/sqrt2) sum_{n >= first} e^{-0.4 pi n}; valid
/// once height*sqrt(n) - 2 >= 0.2 sqrt(n) for all n >= first.
ApproxReal j_tail_majorant(std::string_view height, long first, long bits);

struct GridCertificate {
  double step = 0;
  long nodes_x = 0;
  long nodes_u = 0;
  long evaluations = 0;
  long bits = 0;
  double min_sampled_g2 = 0;
  double argmin_x = 0;
  double argmin_u = 0;
  // Second-derivative bounds of G^2 and the sup-norm bound of G.
  double sup_g = 0;
  double bound_xx = 0;
  double bound_uu = 0;
  double bound_xu = 0;
  double rounding_slack = 0;
  double certified_g2_lower = 0;
  double certified_g_lower = 0;
  double symmetry_max_deviation = 0;
  ApproxReal tail_z;
  ApproxReal tail_tau;
  ApproxReal printed_tail;
  bool tail_z_ok = false;
  bool tail_tau_ok = false;
  double j_difference_lower = 0;  // certified G minus both tails
  bool certified = false;         // certified G lower bound >= 30
  std::string rounding_policy;
  std::string diagnostic;
};

/// Certifies G(x,u) = |p^-1 + sum_{i<=4} c(i) p^i - q^-1 - sum_{i<=9} c(i) q^i| >= 30
/// on |x|,|u| <= 1/2, p = e^{2 pi i (u + 1.16 i)}, q = e^{2 pi i (x + 0.865 i)},
/// from grid samples of G^2 and its gradient plus second-derivative bounds.
/// `threads` splits the grid by rows; the result does not depend on it.
GridCertificate grid_min_G(double step, long bits, int threads = 1);

}  // namespace mf
