#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

#include "modforms/approx_real.hpp"
#include "modforms/forms.hpp"
#include "modforms/qlaurent.hpp"

namespace mf {

using RationalMatrix = std::vector<std::vector<mpq_class>>;
/// Dense polynomial, coefficient i multiplies x^i.
using RationalPoly = std::vector<mpq_class>;

/// f | T_p, with a(n/p) read as 0 when p does not divide n. Output is known
/// modulo q^{floor(prec(f)/p)}.
QLaurent hecke_tp(const QLaurent& f, long k, long p);

/// Matrix of T_p on S_k in the Miller basis F_{k,1..ell}: row m holds the
/// first ell coefficients of F_{k,m} | T_p. Empty when ell = 0.
RationalMatrix hecke_matrix(long k, long p);
RationalMatrix hecke_matrix(const MillerBasis& basis, long p);

/// det(x I - A), monic, exact.
RationalPoly characteristic_polynomial(const RationalMatrix& a);
/// True when the polynomial has no repeated root.
bool is_squarefree(const RationalPoly& f);
/// All roots of a polynomial with only real, simple roots, in descending
/// order, isolated with a Sturm sequence and refined by exact bisection
/// until the bracket is below 2^-bits relative.
std::vector<ApproxReal> real_roots(const RationalPoly& f, long bits);

/// Tolerance policy shared by every numeric assertion in this module:
/// relative 2^-(bits/2) with an absolute floor of 2^-64.
struct Tolerance {
  explicit Tolerance(long bits);
  ApproxReal relative;
  ApproxReal absolute;
  bool close(const ApproxReal& a, const ApproxReal& b, const ApproxReal& scale) const;
};

/// Normalized Hecke eigenform, a(1) = 1.
struct Eigenform {
  long k = 0;
  long bits = 0;
  long q_prec = 0;
  long hecke_prime = 2;           // operator used to split the space
  ApproxReal eigenvalue;          // eigenvalue of T_{hecke_prime}
  std::vector<ApproxReal> coeffs; // coeffs[n] = a(n), 0 <= n < q_prec
};

/// Hecke eigenbasis of S_k, sorted by eigenvalue (descending, ties by index).
/// T_2 is tried first, T_3 if T_2 has a repeated eigenvalue; throws
/// DegenerateSpectrum when neither separates the space.
std::vector<Eigenform> eigenforms(long k, long bits, long q_prec);
std::vector<Eigenform> eigenforms(const MillerBasis& basis, long bits);

struct EigenDecomposition {
  long k = 0;
  long bits = 0;
  std::vector<Eigenform> forms;
  std::vector<ApproxReal> c;      // G = sum c_i g_i
  ApproxReal total;               // C(G) = sum |c_i|
  ApproxReal residual;            // max_n |sum_i c_i a_i(n) - a_G(n)|, n = 1..ell
  ApproxReal condition;           // ||X||_inf ||X^-1||_inf estimate
  bool ok = false;
};

/// Solves G = sum c_i g_i from the first ell coefficients.
EigenDecomposition decompose(const QLaurent& g, long k, long bits);
EigenDecomposition decompose(const QLaurent& g, const std::vector<Eigenform>& forms, long bits);

struct DeligneReport {
  long nmax = 0;
  bool prime_bound_ok = true;   // |a(p)| <= 2 p^{(k-1)/2}
  bool general_bound_ok = true; // |a(n)| <= d(n) n^{(k-1)/2}
  ApproxReal max_prime_ratio;
  ApproxReal max_general_ratio;
  long worst_n = 1;
};

DeligneReport deligne_check(const Eigenform& g, long nmax);

struct MultiplicativityReport {
  long checked_pairs = 0;
  long failures = 0;
  ApproxReal max_relative_error;
};

/// |a(mn) - a(m)a(n)| within tolerance for coprime m, n with mn <= limit.
MultiplicativityReport multiplicativity_check(const Eigenform& g, long limit);

/// Right side of the Petersson-norm bound
///   12/(4pi)^k sum_n |a(n)|^2/n^{k-1} int_{2 pi sqrt3 n}^inf u^{k-2} e^{-u} du
/// with the finite sum for n <= n_tail and, beyond it, the geometric tail
/// driven by the A_k(m,n) envelope and the first ell coefficients.
ApproxReal petersson_upper_ff(std::span<const ApproxReal> a, long k, long n_tail, long bits);
ApproxReal petersson_upper_ff(const QLaurent& g, long k, long n_tail, long bits);

/// sum |c_i|^2 * 3 (k-1)! / (32 pi^2 (4pi)^k log k).
ApproxReal petersson_lower(const EigenDecomposition& dec);
/// 1 / (64 log k), the lower bound for L(Sym^2 g, 1).
ApproxReal symsq_lower(long k, long bits);

}  // namespace mf
