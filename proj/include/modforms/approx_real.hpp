#pragma once

#include <mpfr.h>

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace mf {

enum class Rounding { Nearest, Up, Down };

mpfr_rnd_t to_mpfr(Rounding r);

/// Binary floating-point value with an explicit mantissa length, backed by
/// MPFR. Every operation is correctly rounded; binary operations produce a
/// result at the larger of the two operand precisions.
class ApproxReal {
 public:
  static constexpr long kDefaultBits = 256;
  static constexpr long kMinBits = 64;

  explicit ApproxReal(long bits = kDefaultBits);
  ApproxReal(long value, long bits);
  ApproxReal(double value, long bits);
  ApproxReal(const mpz_class& value, long bits, Rounding rnd = Rounding::Nearest);
  ApproxReal(const mpq_class& value, long bits, Rounding rnd = Rounding::Nearest);

  /// Parses a decimal literal such as "2003.34". `rnd` picks the direction
  /// when the literal is not exactly representable.
  static ApproxReal from_decimal(std::string_view text, long bits,
                                 Rounding rnd = Rounding::Nearest);
  static ApproxReal pi(long bits);

  ApproxReal(const ApproxReal& other);
  ApproxReal(ApproxReal&& other) noexcept;
  ApproxReal& operator=(const ApproxReal& other);
  ApproxReal& operator=(ApproxReal&& other) noexcept;
  ~ApproxReal();

  long bits() const { return static_cast<long>(mpfr_get_prec(value_)); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  /// Scientific decimal string carrying every significant digit of the
  /// mantissa (enough digits to round-trip).
  std::string to_string() const;
  /// Short scientific rendering for tables and diagnostics.
  std::string to_string(int digits) const;

  ApproxReal& operator+=(const ApproxReal& rhs);
  ApproxReal& operator-=(const ApproxReal& rhs);
  ApproxReal& operator*=(const ApproxReal& rhs);
  ApproxReal& operator/=(const ApproxReal& rhs);
  ApproxReal operator-() const;

  friend ApproxReal operator+(ApproxReal lhs, const ApproxReal& rhs);
  friend ApproxReal operator-(ApproxReal lhs, const ApproxReal& rhs);
  friend ApproxReal operator*(ApproxReal lhs, const ApproxReal& rhs);
  friend ApproxReal operator/(ApproxReal lhs, const ApproxReal& rhs);

  friend bool operator==(const ApproxReal& a, const ApproxReal& b);
  friend std::partial_ordering operator<=>(const ApproxReal& a, const ApproxReal& b);

  /// Exact comparison against an integer: <0, 0, >0.
  int compare(const mpz_class& z) const { return mpfr_cmp_z(value_, z.get_mpz_t()); }

 private:
  mpfr_t value_;
};

ApproxReal abs(const ApproxReal& x);
ApproxReal sqrt(const ApproxReal& x);
ApproxReal exp(const ApproxReal& x);
ApproxReal log(const ApproxReal& x);
ApproxReal pow(const ApproxReal& base, const ApproxReal& exponent);
ApproxReal pow(const ApproxReal& base, long exponent);
ApproxReal max(const ApproxReal& a, const ApproxReal& b);
ApproxReal min(const ApproxReal& a, const ApproxReal& b);
/// n! rounded in the given direction.
ApproxReal factorial(unsigned long n, long bits, Rounding rnd = Rounding::Nearest);
/// log(n!) via lgamma.
ApproxReal log_factorial(unsigned long n, long bits);
/// Value rounded to a double in the requested direction.
double to_double(const ApproxReal& x, Rounding rnd);

}  // namespace mf
