#include <doctest.h>

#include "modforms/approx_real.hpp"
#include "modforms/arith.hpp"
#include "modforms/errors.hpp"
#include "modforms/json_io.hpp"
#include "modforms/qlaurent.hpp"
#include "modforms/zseries.hpp"
#include "oracles.hpp"

using namespace mf;

namespace {

QLaurent from_vec(long valuation, const oracle::Vec& v, long prec) { return QLaurent(valuation, v, prec); }

// Deterministic pseudo-random integers for series fixtures.
zs::ZVec sample_series(std::size_t n, unsigned long seed, int digits) {
  zs::ZVec out(n);
  mpz_class state = seed;
  for (std::size_t i = 0; i < n; ++i) {
    state = (state * 6364136223846793005UL + 1442695040888963407UL) % (mpz_class(1) << 64);
    mpz_class v = state;
    for (int d = 1; d < digits; ++d) v = v * state + i;
    out[i] = (state % 2 == 0) ? v : mpz_class(-v);
  }
  return out;
}

}  // namespace

TEST_SUITE("series_core") {

TEST_CASE("bernoulli numbers match the binomial recurrence") {
  const auto table = oracle::bernoulli_table(100);
  for (long k = 2; k <= 100; k += 2) CHECK(bernoulli(k) == table[static_cast<std::size_t>(k)]);
  CHECK(bernoulli(12) == mpq_class(-691, 2730));
  CHECK_THROWS_AS(bernoulli(3), InvalidArgument);
}

TEST_CASE("divisor functions against brute force") {
  for (long n = 1; n <= 10000; n += (n < 500 ? 1 : 37)) {
    CHECK(sigma(3, n) == oracle::sigma_brute(3, n));
    long d = 0;
    for (long t = 1; t <= n; ++t) d += (n % t == 0);
    CHECK(divisor_count(n) == d);
  }
  const auto table = sigma_table(11, 2001);
  for (long n = 1; n <= 2000; ++n) REQUIRE(table[static_cast<std::size_t>(n)] == oracle::sigma_brute(11, n));
  CHECK(is_prime(2));
  CHECK(is_prime(9973));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9971));
}

TEST_CASE("kronecker product equals schoolbook") {
  for (std::size_t n : {1UL, 7UL, 64UL, 300UL, 1200UL}) {
    const auto a = sample_series(n, 11 + n, 3);
    const auto b = sample_series(n + 5, 17 + n, 2);
    CHECK(zs::mul_trunc(a, b, n) == zs::mul_trunc_schoolbook(a, b, n));
  }
}

TEST_CASE("eta24 and its inverse") {
  const std::size_t n = 400;
  const auto e = zs::eta24(n);
  const auto d = oracle::delta_product(n + 1);
  for (std::size_t i = 0; i < n; ++i) REQUIRE(mpq_class(e[i]) == d[i + 1]);
  const auto inv = zs::inverse_unit(e, n);
  const auto one = zs::mul_trunc(e, inv, n);
  CHECK(one[0] == 1);
  for (std::size_t i = 1; i < n; ++i) REQUIRE(one[i] == 0);
  const auto cube = zs::pow_trunc(e, 3, 50);
  CHECK(cube == zs::mul_trunc_schoolbook(zs::mul_trunc_schoolbook(e, e, 50), e, 50));
}

TEST_CASE("ring axioms on truncated series") {
  const QLaurent a(-1, {mpq_class(1), mpq_class(3, 2), mpq_class(-7), mpq_class(2, 9)}, 3);
  const QLaurent b(0, {mpq_class(5), mpq_class(0), mpq_class(-1, 4), mpq_class(8)}, 4);
  const QLaurent c(2, {mpq_class(1, 3), mpq_class(11)}, 4);
  CHECK((a + b) + c == a + (b + c));
  CHECK(a + b == b + a);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * b == b * a);
  CHECK(a * (b + c) == a * b + a * c);
  CHECK((a - a).is_zero());
  // Precision rules: sum takes the minimum, product loses the partner's valuation.
  CHECK((a + b).prec() == 3);
  CHECK((a * b).prec() == 3);
  CHECK((a * c).prec() == std::min(a.prec() + c.valuation(), c.prec() + a.valuation()));
  CHECK_THROWS_AS(a.coeff(3), InsufficientPrecision);
  CHECK(a.coeff(-5) == 0);
}

TEST_CASE("invert, pow and theta") {
  const auto e4 = oracle::eisenstein(4, 30);
  const QLaurent f = from_vec(0, e4, 30);
  const QLaurent inv = invert(f);
  const auto expect = oracle::inverse(e4, 30);
  for (long n = 0; n < 30; ++n) CHECK(inv.coeff(n) == expect[static_cast<std::size_t>(n)]);
  const QLaurent g = QLaurent(1, {mpq_class(2), mpq_class(-3)}, 10);
  const QLaurent gi = invert(g);
  CHECK(gi.valuation() == -1);
  CHECK((g * gi).agrees_with(QLaurent::monomial(1, 0, gi.prec()), gi.prec() - 1));
  CHECK_THROWS_AS(invert(QLaurent(5)), DivisionByZero);
  CHECK(pow(f, 3) == f * f * f);
  CHECK(pow(f, 0) == QLaurent::monomial(1, 0, 30));
  const QLaurent t = theta(g);
  CHECK(t.coeff(1) == 2);
  CHECK(t.coeff(2) == -6);
}

TEST_CASE("approx real conversions") {
  const ApproxReal up = ApproxReal::from_decimal("0.1", 64, Rounding::Up);
  const ApproxReal dn = ApproxReal::from_decimal("0.1", 64, Rounding::Down);
  CHECK(dn < up);
  CHECK(up.bits() == 64);
  const ApproxReal x = ApproxReal::from_decimal("2003.34", 256);
  CHECK(ApproxReal::from_decimal(x.to_string(), 256) == x);
  CHECK(factorial(10, 64).to_double() == doctest::Approx(3628800.0));
  CHECK(log_factorial(10, 64).to_double() == doctest::Approx(std::log(3628800.0)));
}

TEST_CASE("qlaurent json round trip") {
  const QLaurent f(-1, {mpq_class(1), mpq_class(744), mpq_class(-3, 7), mpq_class(0), mpq_class(5)}, 4);
  CHECK(qlaurent_from_json(to_json(f)) == f);
  const json bad = json::parse(R"({"valuation":0,"prec":3,"coeffs":["1","2"]})");
  CHECK_THROWS_AS(qlaurent_from_json(bad), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK(to_string(mpq_class(-65520, 691)) == "-65520/691");
}

}
