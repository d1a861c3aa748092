#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

#include "modforms/zseries.hpp"

namespace mf {

/// Truncated Laurent series in q with exact rational coefficients, known
/// modulo q^prec. Storage is dense from the (exact) valuation upward; the
/// zero series has valuation == prec and no stored coefficients.
class QLaurent {
 public:
  /// The zero series known modulo q^prec.
  explicit QLaurent(long prec = 0);
  /// Builds sum_i coeffs[i] q^{valuation+i} + O(q^prec). Coefficients past
  /// prec are dropped; leading zeros are stripped so the valuation is exact.
  QLaurent(long valuation, std::vector<mpq_class> coeffs, long prec);

  static QLaurent from_integers(long valuation, std::span<const mpz_class> coeffs, long prec);
  /// The monomial c*q^e + O(q^prec).
  static QLaurent monomial(const mpq_class& c, long e, long prec);

  long valuation() const { return valuation_; }
  long prec() const { return prec_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const mpq_class> coeffs() const { return coeffs_; }

  /// Coefficient of q^n; zero below the valuation. Throws
  /// InsufficientPrecision for n >= prec.
  mpq_class coeff(long n) const;
  bool is_integral() const;
  /// Integer coefficients for exponents [from, prec). Requires integrality.
  std::vector<mpz_class> integer_coeffs(long from) const;

  QLaurent truncate(long prec) const;
  /// Multiplication by q^s.
  QLaurent shift(long s) const;

  QLaurent& operator+=(const QLaurent& rhs);
  QLaurent& operator-=(const QLaurent& rhs);
  QLaurent& operator*=(const QLaurent& rhs);
  QLaurent& operator*=(const mpq_class& scalar);
  QLaurent operator-() const;

  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(QLaurent a, const QLaurent& b) { return a *= b; }
  friend QLaurent operator*(QLaurent a, const mpq_class& c) { return a *= c; }
  friend QLaurent operator*(const mpq_class& c, QLaurent a) { return a *= c; }

  /// Structural equality: same valuation, precision, and coefficients.
  friend bool operator==(const QLaurent& a, const QLaurent& b);

  /// True when a and b agree on every exponent below `through` (both must
  /// be known there).
  bool agrees_with(const QLaurent& other, long through) const;

 private:
  void normalize();

  long valuation_;
  long prec_;
  std::vector<mpq_class> coeffs_;
};

/// a^e for e >= 0 by repeated squaring; precision follows the product rule.
QLaurent pow(const QLaurent& a, long e);
/// Multiplicative inverse; DivisionByZero for the zero series.
QLaurent invert(const QLaurent& a);
/// theta(sum a_n q^n) = sum n a_n q^n.
QLaurent theta(const QLaurent& a);

std::string to_string(const mpq_class& q);
mpq_class parse_rational(const std::string& text);

}  // namespace mf
