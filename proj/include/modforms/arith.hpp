#pragma once

#include <gmpxx.h>

#include <vector>

namespace mf {

/// B_k for even k >= 2 (B_2 = 1/6, B_4 = -1/30, B_12 = -691/2730).
/// Memoized behind a mutex; safe to call from several threads.
mpq_class bernoulli(long k);

/// Sum of the s-th powers of the divisors of n.
mpz_class sigma(long s, long n);
/// sigma(s, n) for all 0 <= n < count (entry 0 is 0), by a divisor sieve.
std::vector<mpz_class> sigma_table(long s, long count);
/// Number of divisors d(n).
long divisor_count(long n);
bool is_prime(long n);

}  // namespace mf
