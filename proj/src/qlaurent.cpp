#include "modforms/qlaurent.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "modforms/errors.hpp"

namespace mf {

namespace {

using QVec = std::vector<mpq_class>;

mpz_class common_denominator(std::span<const mpq_class> v) {
  mpz_class l = 1;
  for (const auto& x : v) {
    if (x.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  return l;
}

zs::ZVec scaled_integers(std::span<const mpq_class> v, const mpz_class& den) {
  zs::ZVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (den == 1) {
      out[i] = v[i].get_num();
    } else {
      mpz_divexact(out[i].get_mpz_t(), den.get_mpz_t(), v[i].get_den_mpz_t());
      out[i] *= v[i].get_num();
    }
  }
  return out;
}

// Truncated product of two dense rational coefficient vectors.
QVec qmul_trunc(std::span<const mpq_class> a, std::span<const mpq_class> b, std::size_t n) {
  const mpz_class da = common_denominator(a);
  const mpz_class db = common_denominator(b);
  const zs::ZVec za = scaled_integers(a, da);
  const zs::ZVec zb = scaled_integers(b, db);
  const zs::ZVec prod = zs::mul_trunc(za, zb, n);
  const mpz_class den = da * db;
  QVec out(n);
  for (std::size_t i = 0; i < prod.size() && i < n; ++i) {
    if (den == 1) {
      out[i] = prod[i];
    } else {
      out[i] = mpq_class(prod[i], den);
      out[i].canonicalize();
    }
  }
  return out;
}

QVec qinverse(std::span<const mpq_class> u, std::size_t n) {
  if (n == 0) return {};
  bool unit_integral = (u[0] == 1 || u[0] == -1);
  for (std::size_t i = 0; unit_integral && i < std::min(u.size(), n); ++i) {
    unit_integral = u[i].get_den() == 1;
  }
  if (unit_integral) {
    const zs::ZVec zu = scaled_integers(u.first(std::min(u.size(), n)), mpz_class(1));
    const zs::ZVec inv = zs::inverse_unit(zu, n);
    return QVec(inv.begin(), inv.end());
  }
  QVec b{mpq_class(1) / u[0]};
  std::size_t have = 1;
  while (have < n) {
    const std::size_t next = std::min(2 * have, n);
    QVec e = qmul_trunc(u.first(std::min(u.size(), next)), b, next);
    for (auto& x : e) x = -x;
    e[0] += 1;
    QVec corr = qmul_trunc(b, e, next);
    b.resize(next);
    for (std::size_t i = have; i < next; ++i) b[i] += corr[i];
    have = next;
  }
  return b;
}

}  // namespace

QLaurent::QLaurent(long prec) : valuation_(prec), prec_(prec) {}

QLaurent::QLaurent(long valuation, std::vector<mpq_class> coeffs, long prec)
    : valuation_(valuation), prec_(prec), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

QLaurent QLaurent::from_integers(long valuation, std::span<const mpz_class> coeffs, long prec) {
  std::vector<mpq_class> q(coeffs.begin(), coeffs.end());
  return QLaurent(valuation, std::move(q), prec);
}

QLaurent QLaurent::monomial(const mpq_class& c, long e, long prec) {
  return QLaurent(e, std::vector<mpq_class>{c}, prec);
}

void QLaurent::normalize() {
  const long keep = prec_ - valuation_;
  if (keep <= 0) {
    coeffs_.clear();
  } else if (static_cast<long>(coeffs_.size()) > keep) {
    coeffs_.resize(static_cast<std::size_t>(keep));
  }
  std::size_t lead = 0;
  while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    valuation_ = prec_;
    return;
  }
  if (lead > 0) coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  valuation_ += static_cast<long>(lead);
  coeffs_.resize(static_cast<std::size_t>(prec_ - valuation_), mpq_class(0));
}

mpq_class QLaurent::coeff(long n) const {
  if (n >= prec_) {
    throw InsufficientPrecision("coefficient of q^" + std::to_string(n) +
                                " requested from a series known modulo q^" + std::to_string(prec_));
  }
  if (n < valuation_) return 0;
  return coeffs_[static_cast<std::size_t>(n - valuation_)];
}

bool QLaurent::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return c.get_den() == 1; });
}

std::vector<mpz_class> QLaurent::integer_coeffs(long from) const {
  if (!is_integral()) throw InvalidArgument("integer_coeffs: series has non-integral coefficients");
  std::vector<mpz_class> out;
  for (long n = from; n < prec_; ++n) {
    out.push_back(n < valuation_ ? mpz_class(0) : coeffs_[static_cast<std::size_t>(n - valuation_)].get_num());
  }
  return out;
}

QLaurent QLaurent::truncate(long prec) const {
  if (prec >= prec_) return *this;
  QLaurent out(*this);
  out.prec_ = prec;
  if (out.valuation_ > prec) out.valuation_ = prec;
  out.normalize();
  return out;
}

QLaurent QLaurent::shift(long s) const {
  QLaurent out(*this);
  out.valuation_ += s;
  out.prec_ += s;
  return out;
}

QLaurent& QLaurent::operator+=(const QLaurent& rhs) {
  const long prec = std::min(prec_, rhs.prec_);
  const long val = std::min({valuation_, rhs.valuation_, prec});
  std::vector<mpq_class> out(static_cast<std::size_t>(prec - val));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const long e = valuation_ + static_cast<long>(i);
    if (e >= prec) break;
    out[static_cast<std::size_t>(e - val)] += coeffs_[i];
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    const long e = rhs.valuation_ + static_cast<long>(i);
    if (e >= prec) break;
    out[static_cast<std::size_t>(e - val)] += rhs.coeffs_[i];
  }
  *this = QLaurent(val, std::move(out), prec);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& rhs) { return *this += -rhs; }

QLaurent& QLaurent::operator*=(const QLaurent& rhs) {
  const long prec = std::min(valuation_ + rhs.prec_, rhs.valuation_ + prec_);
  if (is_zero() || rhs.is_zero()) {
    *this = QLaurent(prec);
    return *this;
  }
  const long val = valuation_ + rhs.valuation_;
  if (prec <= val) {
    *this = QLaurent(prec);
    return *this;
  }
  QVec prod = qmul_trunc(coeffs_, rhs.coeffs_, static_cast<std::size_t>(prec - val));
  *this = QLaurent(val, std::move(prod), prec);
  return *this;
}

QLaurent& QLaurent::operator*=(const mpq_class& scalar) {
  if (sgn(scalar) == 0) {
    *this = QLaurent(prec_);
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

QLaurent QLaurent::operator-() const {
  QLaurent out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const QLaurent& a, const QLaurent& b) {
  return a.valuation_ == b.valuation_ && a.prec_ == b.prec_ && a.coeffs_ == b.coeffs_;
}

bool QLaurent::agrees_with(const QLaurent& other, long through) const {
  if (through > prec_ || through > other.prec_) {
    throw InsufficientPrecision("agrees_with: comparison order exceeds known precision");
  }
  const long lo = std::min(valuation_, other.valuation_);
  for (long n = lo; n < through; ++n) {
    if (coeff(n) != other.coeff(n)) return false;
  }
  return true;
}

QLaurent pow(const QLaurent& a, long e) {
  if (e < 0) throw InvalidArgument("pow: negative exponent (use invert)");
  if (e == 0) return QLaurent::monomial(1, 0, std::max(a.prec() - a.valuation(), 1L));
  QLaurent result;
  QLaurent base = a;
  bool first = true;
  while (true) {
    if (e & 1L) {
      result = first ? base : result * base;
      first = false;
    }
    e >>= 1;
    if (e == 0) break;
    base = base * base;
  }
  return result;
}

QLaurent invert(const QLaurent& a) {
  if (a.is_zero()) throw DivisionByZero("invert: series is zero to its known precision");
  const long v = a.valuation();
  const long n = a.prec() - v;
  QVec inv = qinverse(a.coeffs(), static_cast<std::size_t>(n));
  return QLaurent(-v, std::move(inv), a.prec() - 2 * v);
}

QLaurent theta(const QLaurent& a) {
  std::vector<mpq_class> out(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= a.valuation() + static_cast<long>(i);
  return QLaurent(a.valuation(), std::move(out), a.prec());
}

std::string to_string(const mpq_class& q) { return q.get_str(10); }

mpq_class parse_rational(const std::string& text) {
  mpq_class out;
  if (text.empty() || out.set_str(text, 10) != 0 || out.get_den() == 0) {
    throw InvalidArgument("not a rational literal: \"" + text + "\"");
  }
  out.canonicalize();
  return out;
}

}  // namespace mf
