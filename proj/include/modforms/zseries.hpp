#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <vector>

// Dense power-series kernels over the integers. Index i holds the
// coefficient of q^i. These are the hot loops behind QLaurent and the
// extremal scan; all products truncate to the requested length.
namespace mf::zs {

using ZVec = std::vector<mpz_class>;

/// First `n` coefficients of a*b. Uses Kronecker substitution into one GMP
/// integer product once the operands are large enough to benefit.
ZVec mul_trunc(std::span<const mpz_class> a, std::span<const mpz_class> b, std::size_t n);

/// Quadratic reference product; exposed for tests and small inputs.
ZVec mul_trunc_schoolbook(std::span<const mpz_class> a, std::span<const mpz_class> b,
                          std::size_t n);

/// Inverse of a series with constant term +-1, to `n` terms (Newton iteration).
ZVec inverse_unit(std::span<const mpz_class> a, std::size_t n);

/// a^e to `n` terms by repeated squaring.
ZVec pow_trunc(std::span<const mpz_class> a, unsigned long e, std::size_t n);

/// Coefficients of prod_{n>=1} (1 - q^n)^24 to `n` terms.
ZVec eta24(std::size_t n);

}  // namespace mf::zs
