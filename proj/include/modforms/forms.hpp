#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "modforms/qlaurent.hpp"
#include "modforms/zseries.hpp"

namespace mf {

/// k = 12*ell + k_prime with k_prime in {0,4,6,8,10,14}; nu = k_prime/4
/// exists only when 4 | k.
struct WeightProfile {
  long k = 0;
  long ell = 0;
  long k_prime = 0;
  std::optional<long> nu;
};

/// dim S_k for even k >= 4.
long dim_cusp(long k);
WeightProfile weight_profile(long k);

/// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n + O(q^prec).
QLaurent eisenstein(long k, long prec);
/// Delta = q prod (1-q^n)^24, through the Jacobi triple product.
QLaurent delta(long prec);
/// Delta = (E_4^3 - E_6^2)/1728; the second, independent route.
QLaurent delta_from_eisenstein(long prec);
/// j = E_4^3/Delta = q^-1 + 744 + 196884 q + ... + O(q^prec).
QLaurent jfun(long prec);

namespace detail {
// Integer coefficient vectors (index = exponent) used by the hot paths.
zs::ZVec eisenstein4_z(std::size_t n);
zs::ZVec eisenstein6_z(std::size_t n);
/// 1/j = Delta/E_4^3 = q - 744 q^2 + ..., to n terms (index 0 is 0).
zs::ZVec inverse_j_z(std::size_t n);
}  // namespace detail

/// Echelon basis F_{k,0}, F_{k,1}, ..., F_{k,ell} of M_k with
/// F_{k,m} = q^m + O(q^{ell+1}) and F_{k,0} = 1 + O(q^{ell+1}).
struct MillerBasis {
  WeightProfile profile;
  long prec = 0;
  std::vector<QLaurent> rows;  // rows[m] = F_{k,m}
};

MillerBasis miller_basis(long k, long prec);

/// A_k(m, n): coefficient of q^n in F_{k,m}; delta_{mn} for n <= ell.
mpq_class akm_coefficient(const MillerBasis& basis, long m, long n);

/// The unique F_{k,0} = 1 + O(q^{ell+1}) for 4 | k, from the triangular
/// system in {E_4^{k/4-3i} Delta^i : 0 <= i <= ell}.
QLaurent extremal_form(long k, long prec);
/// Integer coefficients a(0..prec-1) of the same form.
zs::ZVec extremal_form_z(long k, long prec);

/// Theta series of the E_8 form
///   Q = sum x_i^2 - x1x3 - x2x4 - x3x4 - x4x5 - x5x6 - x6x7 - x7x8
/// by exhaustive lattice-point enumeration; prec <= 12.
QLaurent theta_e8(long prec);

struct KernelCheckEntry {
  long m = 0;
  bool matches = false;
  long compared_through = 0;
};

struct KernelCheckReport {
  long k = 0;
  long ell = 0;
  long max_m = 0;
  long q_prec = 0;
  std::vector<KernelCheckEntry> entries;  // m = 0..max_m
  bool all_match = false;
};

/// Expands Delta^ell(z) E_{k'}(z) E_{14-k'}(tau) / (Delta^{1+ell}(tau)(j(tau)-j(z)))
/// formally in p = e^{2 pi i tau}, extracts the p^{-m} coefficient for
/// 0 <= m <= max_m, and compares each with the Miller row F_{k,m}.
KernelCheckReport generating_kernel_check(long k, long max_m, long q_prec);

}  // namespace mf
