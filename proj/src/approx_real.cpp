#include "modforms/approx_real.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "modforms/errors.hpp"

namespace mf {

mpfr_rnd_t to_mpfr(Rounding r) {
  switch (r) {
    case Rounding::Up:
      return MPFR_RNDU;
    case Rounding::Down:
      return MPFR_RNDD;
    case Rounding::Nearest:
      break;
  }
  return MPFR_RNDN;
}

namespace {

long checked_bits(long bits) {
  if (bits < ApproxReal::kMinBits) {
    throw InvalidArgument("mantissa precision must be at least 64 bits, got " +
                          std::to_string(bits));
  }
  return bits;
}

long common_bits(const ApproxReal& a, const ApproxReal& b) {
  return a.bits() > b.bits() ? a.bits() : b.bits();
}

// Re-rounds `x` in place to at least `bits` mantissa bits.
void widen(mpfr_ptr x, long bits) {
  if (mpfr_get_prec(x) < bits) mpfr_prec_round(x, bits, MPFR_RNDN);
}

}  // namespace

ApproxReal::ApproxReal(long bits) {
  mpfr_init2(value_, checked_bits(bits));
  mpfr_set_zero(value_, 1);
}

ApproxReal::ApproxReal(long value, long bits) {
  mpfr_init2(value_, checked_bits(bits));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

ApproxReal::ApproxReal(double value, long bits) {
  mpfr_init2(value_, checked_bits(bits));
  mpfr_set_d(value_, value, MPFR_RNDN);
}

ApproxReal::ApproxReal(const mpz_class& value, long bits, Rounding rnd) {
  mpfr_init2(value_, checked_bits(bits));
  mpfr_set_z(value_, value.get_mpz_t(), to_mpfr(rnd));
}

ApproxReal::ApproxReal(const mpq_class& value, long bits, Rounding rnd) {
  mpfr_init2(value_, checked_bits(bits));
  mpfr_set_q(value_, value.get_mpq_t(), to_mpfr(rnd));
}

ApproxReal ApproxReal::from_decimal(std::string_view text, long bits, Rounding rnd) {
  ApproxReal out(bits);
  std::string s(text);
  if (mpfr_set_str(out.value_, s.c_str(), 10, to_mpfr(rnd)) != 0) {
    throw InvalidArgument("not a decimal literal: " + s);
  }
  return out;
}

ApproxReal ApproxReal::pi(long bits) {
  ApproxReal out(bits);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

ApproxReal::ApproxReal(const ApproxReal& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

ApproxReal::ApproxReal(ApproxReal&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

ApproxReal& ApproxReal::operator=(const ApproxReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

ApproxReal& ApproxReal::operator=(ApproxReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

ApproxReal::~ApproxReal() { mpfr_clear(value_); }

std::string ApproxReal::to_string() const {
  const int digits = static_cast<int>(std::ceil(static_cast<double>(bits()) * 0.30102999566398120)) + 1;
  return to_string(digits);
}

std::string ApproxReal::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits > 1 ? digits - 1 : 0, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

ApproxReal& ApproxReal::operator+=(const ApproxReal& rhs) {
  widen(value_, rhs.bits());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

ApproxReal& ApproxReal::operator-=(const ApproxReal& rhs) {
  widen(value_, rhs.bits());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

ApproxReal& ApproxReal::operator*=(const ApproxReal& rhs) {
  widen(value_, rhs.bits());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

ApproxReal& ApproxReal::operator/=(const ApproxReal& rhs) {
  widen(value_, rhs.bits());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

ApproxReal ApproxReal::operator-() const {
  ApproxReal out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

ApproxReal operator+(ApproxReal lhs, const ApproxReal& rhs) { return lhs += rhs; }
ApproxReal operator-(ApproxReal lhs, const ApproxReal& rhs) { return lhs -= rhs; }
ApproxReal operator*(ApproxReal lhs, const ApproxReal& rhs) { return lhs *= rhs; }
ApproxReal operator/(ApproxReal lhs, const ApproxReal& rhs) { return lhs /= rhs; }

bool operator==(const ApproxReal& a, const ApproxReal& b) {
  return mpfr_equal_p(a.value_, b.value_) != 0;
}

std::partial_ordering operator<=>(const ApproxReal& a, const ApproxReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

ApproxReal abs(const ApproxReal& x) {
  ApproxReal out(x);
  mpfr_abs(out.get(), out.get(), MPFR_RNDN);
  return out;
}

ApproxReal sqrt(const ApproxReal& x) {
  ApproxReal out(x.bits());
  mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
  return out;
}

ApproxReal exp(const ApproxReal& x) {
  ApproxReal out(x.bits());
  mpfr_exp(out.get(), x.get(), MPFR_RNDN);
  return out;
}

ApproxReal log(const ApproxReal& x) {
  ApproxReal out(x.bits());
  mpfr_log(out.get(), x.get(), MPFR_RNDN);
  return out;
}

ApproxReal pow(const ApproxReal& base, const ApproxReal& exponent) {
  ApproxReal out(common_bits(base, exponent));
  mpfr_pow(out.get(), base.get(), exponent.get(), MPFR_RNDN);
  return out;
}

ApproxReal pow(const ApproxReal& base, long exponent) {
  ApproxReal out(base.bits());
  mpfr_pow_si(out.get(), base.get(), exponent, MPFR_RNDN);
  return out;
}

ApproxReal max(const ApproxReal& a, const ApproxReal& b) { return a < b ? b : a; }
ApproxReal min(const ApproxReal& a, const ApproxReal& b) { return b < a ? b : a; }

ApproxReal factorial(unsigned long n, long bits, Rounding rnd) {
  ApproxReal out(bits);
  mpfr_fac_ui(out.get(), n, to_mpfr(rnd));
  return out;
}

ApproxReal log_factorial(unsigned long n, long bits) {
  ApproxReal out(bits);
  ApproxReal arg(static_cast<long>(n) + 1, bits);
  int sign = 0;
  mpfr_lgamma(out.get(), &sign, arg.get(), MPFR_RNDN);
  return out;
}

double to_double(const ApproxReal& x, Rounding rnd) { return mpfr_get_d(x.get(), to_mpfr(rnd)); }

}  // namespace mf
