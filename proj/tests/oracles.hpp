#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's fast paths; everything is direct and quadratic.

#include <gmpxx.h>

#include <vector>

#include "modforms/approx_real.hpp"

namespace oracle {

using Vec = std::vector<mpq_class>;

inline mpz_class binom(long n, long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

// B_0..B_n from sum_{j=0}^{m} C(m+1, j) B_j = 0 (B_1 = -1/2).
inline Vec bernoulli_table(long n) {
  Vec b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (long m = 1; m <= n; ++m) {
    mpq_class s = 0;
    for (long j = 0; j < m; ++j) s += mpq_class(binom(m + 1, j)) * b[static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(m)] = -s / mpq_class(m + 1);
  }
  return b;
}

inline mpz_class sigma_brute(long s, long n) {
  mpz_class out = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d == 0) {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(s));
      out += p;
    }
  }
  return out;
}

inline Vec mul(const Vec& a, const Vec& b, std::size_t n) {
  Vec out(n);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// q prod_{n>=1} (1 - q^n)^24 through q^{len-1}, one factor at a time.
inline Vec delta_product(std::size_t len) {
  Vec p(len);
  p[0] = 1;
  for (std::size_t n = 1; n < len; ++n) {
    for (int rep = 0; rep < 24; ++rep) {
      for (std::size_t i = len; i-- > n;) p[i] -= p[i - n];
    }
  }
  Vec out(len);
  for (std::size_t i = 1; i < len; ++i) out[i] = p[i - 1];
  return out;
}

// 1 - (2k/B_k) sum sigma_{k-1}(n) q^n with B_k from the recurrence.
inline Vec eisenstein(long k, std::size_t len) {
  const Vec b = bernoulli_table(k);
  const mpq_class factor = -mpq_class(2 * k) / b[static_cast<std::size_t>(k)];
  Vec out(len);
  out[0] = 1;
  for (std::size_t n = 1; n < len; ++n) out[n] = factor * mpq_class(sigma_brute(k - 1, static_cast<long>(n)));
  return out;
}

// Power-series inverse by the defining recurrence.
inline Vec inverse(const Vec& a, std::size_t n) {
  Vec out(n);
  out[0] = 1 / a[0];
  for (std::size_t i = 1; i < n; ++i) {
    mpq_class s = 0;
    for (std::size_t j = 1; j <= i && j < a.size(); ++j) s += a[j] * out[i - j];
    out[i] = -s / a[0];
  }
  return out;
}

// int_x^inf u^d e^{-u} du by exp-sinh quadrature: u = x + e^{(pi/2) sinh t}.
inline mf::ApproxReal upper_gamma_quadrature(long d, const mf::ApproxReal& x) {
  using mf::ApproxReal;
  const long bits = x.bits();
  const ApproxReal half_pi = ApproxReal::pi(bits) / ApproxReal(2L, bits);
  const ApproxReal h(1.0 / 128, bits);
  ApproxReal sum(bits);
  for (long i = -6 * 128; i <= 6 * 128; ++i) {
    const ApproxReal t = h * ApproxReal(i, bits);
    const ApproxReal st = (mf::exp(t) - mf::exp(-t)) / ApproxReal(2L, bits);
    const ApproxReal ct = (mf::exp(t) + mf::exp(-t)) / ApproxReal(2L, bits);
    const ApproxReal w = mf::exp(half_pi * st);
    const ApproxReal u = x + w;
    const ApproxReal f = mf::pow(u, d) * mf::exp(-u);
    sum += f * half_pi * ct * w;
  }
  return sum * h;
}

}  // namespace oracle
