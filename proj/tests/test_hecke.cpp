#include <doctest.h>

#include "modforms/errors.hpp"
#include "modforms/forms.hpp"
#include "modforms/hecke.hpp"
#include "oracles.hpp"

using namespace mf;

namespace {

constexpr long kBits = 256;

ApproxReal eval(const RationalPoly& f, const ApproxReal& x) {
  ApproxReal acc(x.bits());
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + ApproxReal(f[i], x.bits());
  return acc;
}

// Characteristic polynomial by expanding det(xI - A) for 2x2 and 3x3 blocks.
RationalPoly charpoly_small(const RationalMatrix& a) {
  if (a.size() == 1) return {-a[0][0], 1};
  if (a.size() == 2) return {a[0][0] * a[1][1] - a[0][1] * a[1][0], -(a[0][0] + a[1][1]), 1};
  const mpq_class tr = a[0][0] + a[1][1] + a[2][2];
  const mpq_class m2 = a[0][0] * a[1][1] - a[0][1] * a[1][0] + a[0][0] * a[2][2] - a[0][2] * a[2][0] +
                       a[1][1] * a[2][2] - a[1][2] * a[2][1];
  const mpq_class det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                        a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                        a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  return {-det, m2, -tr, 1};
}

}  // namespace

TEST_SUITE("hecke_eigen") {

TEST_CASE("T_p on delta gives tau(p) delta") {
  const QLaurent d = delta(200);
  const auto t2 = hecke_tp(d, 12, 2);
  CHECK(t2.prec() == 100);
  CHECK(t2.agrees_with(d.truncate(100) * mpq_class(-24), 100));
  const auto t3 = hecke_tp(d, 12, 3);
  CHECK(t3.agrees_with(d.truncate(t3.prec()) * mpq_class(252), t3.prec()));
  const auto t5 = hecke_tp(d, 12, 5);
  CHECK(t5.agrees_with(d.truncate(t5.prec()) * mpq_class(4830), t5.prec()));
  CHECK_THROWS_AS(hecke_tp(d, 12, 4), InvalidArgument);
}

TEST_CASE("T_2 on E_4 is sigma_3(2) E_4") {
  const QLaurent e = eisenstein(4, 60);
  const auto t = hecke_tp(e, 4, 2);
  CHECK(t.agrees_with(e.truncate(30) * mpq_class(9), 30));
}

TEST_CASE("hecke matrices and characteristic polynomials") {
  CHECK(hecke_matrix(14, 2).empty());
  const auto m12 = hecke_matrix(12, 2);
  REQUIRE(m12.size() == 1);
  CHECK(m12[0][0] == -24);
  const auto m24 = hecke_matrix(24, 2);
  const auto f = characteristic_polynomial(m24);
  CHECK(f == RationalPoly{mpq_class(-20468736), mpq_class(-1080), mpq_class(1)});
  CHECK(f == charpoly_small(m24));
  CHECK(is_squarefree(f));
  CHECK_FALSE(is_squarefree(RationalPoly{mpq_class(1), mpq_class(-2), mpq_class(1)}));
  for (long k : {36L, 40L}) {
    const auto m = hecke_matrix(k, 2);
    REQUIRE(m.size() == 3);
    CHECK(characteristic_polynomial(m) == charpoly_small(m));
  }
  const auto b = miller_basis(24, 5);
  CHECK_THROWS_AS(hecke_matrix(b, 2), InsufficientPrecision);
}

TEST_CASE("weight 24 eigenvalues are 540 +- 12 sqrt 144169") {
  const auto roots = real_roots(characteristic_polynomial(hecke_matrix(24, 2)), kBits);
  REQUIRE(roots.size() == 2);
  const ApproxReal s = ApproxReal(12L, kBits) * sqrt(ApproxReal(144169L, kBits));
  const Tolerance tol(kBits);
  CHECK(tol.close(roots[0], ApproxReal(540L, kBits) + s, ApproxReal(5000L, kBits)));
  CHECK(tol.close(roots[1], ApproxReal(540L, kBits) - s, ApproxReal(5000L, kBits)));
  CHECK_THROWS_AS(real_roots(RationalPoly{mpq_class(1), mpq_class(-2), mpq_class(1)}, kBits), DegenerateSpectrum);
}

TEST_CASE("eigenform coefficients are eigenvalues of T_3 and T_5") {
  for (long k : {24L, 36L, 48L}) {
    const auto gs = eigenforms(k, kBits, 20);
    REQUIRE(static_cast<long>(gs.size()) == dim_cusp(k));
    for (long p : {2L, 3L, 5L}) {
      const auto f = characteristic_polynomial(hecke_matrix(k, p));
      for (const auto& g : gs) {
        const ApproxReal& ap = g.coeffs[static_cast<std::size_t>(p)];
        // Relative to the size of the leading term.
        const ApproxReal scale = pow(abs(ap) + ApproxReal(1L, kBits), static_cast<long>(f.size() - 1));
        CHECK(abs(eval(f, ap)) / scale < ApproxReal(1e-30, kBits));
      }
    }
    for (std::size_t i = 1; i < gs.size(); ++i) CHECK(gs[i - 1].eigenvalue > gs[i].eigenvalue);
  }
}

TEST_CASE("decomposition of F_{24,1}") {
  const auto b = miller_basis(24, 20);
  const auto dec = decompose(b.rows[1], eigenforms(24, kBits, 20), kBits);
  REQUIRE(dec.ok);
  REQUIRE(dec.c.size() == 2);
  CHECK(dec.c[0].to_double() == doctest::Approx(0.4407).epsilon(1e-3));
  CHECK(dec.c[1].to_double() == doctest::Approx(0.5593).epsilon(1e-3));
  CHECK(dec.total.to_double() == doctest::Approx(1.0));
  CHECK(dec.residual < ApproxReal(1e-40, kBits));
  // Recombination reproduces coefficients past the ones used to solve.
  for (long n = 3; n < 20; ++n) {
    ApproxReal s(kBits);
    for (std::size_t i = 0; i < dec.c.size(); ++i) s += dec.c[i] * dec.forms[i].coeffs[static_cast<std::size_t>(n)];
    const ApproxReal expect(b.rows[1].coeff(n), kBits);
    CHECK(abs(s - expect) <= abs(expect) * ApproxReal(1e-40, kBits) + ApproxReal(1e-40, kBits));
  }
}

TEST_CASE("distinct eigenforms are independent") {
  // Proxy for orthogonality: the eigenforms are linearly independent, so a
  // Miller row decomposes with a finite condition estimate and no residual.
  for (long k : {36L, 60L}) {
    const auto gs = eigenforms(k, kBits, 10);
    for (const auto& g : gs) CHECK(g.coeffs[1] == ApproxReal(1L, kBits));
    const auto dec = decompose(miller_basis(k, 10).rows[1], gs, kBits);
    CHECK(dec.ok);
    CHECK(dec.condition.is_finite());
    CHECK(dec.residual < ApproxReal(1e-40, kBits));
  }
}

TEST_CASE("deligne bound for delta through 10^4") {
  const auto gs = eigenforms(12, 128, 10001);
  REQUIRE(gs.size() == 1);
  const auto r = deligne_check(gs[0], 10000);
  CHECK(r.prime_bound_ok);
  CHECK(r.general_bound_ok);
  CHECK(r.max_prime_ratio < ApproxReal(1L, 128));
  const auto& a = gs[0].coeffs;
  CHECK(a[2] == ApproxReal(-24L, 128));
  CHECK(a[11] == ApproxReal(534612L, 128));
  const auto mult = multiplicativity_check(gs[0], 10000);
  CHECK(mult.checked_pairs > 0);
  CHECK(mult.failures == 0);
}

TEST_CASE("petersson sandwich") {
  for (long k : {12L, 24L, 36L}) {
    const auto b = miller_basis(k, 80);
    for (long m = 1; m <= b.profile.ell; ++m) {
      const auto& g = b.rows[static_cast<std::size_t>(m)];
      const auto dec = decompose(g, k, kBits);
      REQUIRE(dec.ok);
      const ApproxReal lower = petersson_lower(dec);
      const ApproxReal upper = petersson_upper_ff(g, k, 60, kBits);
      CHECK(lower.sign() > 0);
      CHECK(lower <= upper);
    }
  }
  CHECK(symsq_lower(12, kBits).to_double() == doctest::Approx(0.0062878).epsilon(1e-4));
  CHECK_THROWS_AS(petersson_upper_ff(delta(10), 14, 5, kBits), InvalidArgument);
}

}
