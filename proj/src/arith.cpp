#include "modforms/arith.hpp"

#include <mutex>
#include <string>

#include "modforms/errors.hpp"

namespace mf {

namespace {

// Akiyama-Tanigawa table; row m yields B_m with the B_1 = +1/2 convention,
// which agrees with the usual one for every even index.
class BernoulliCache {
 public:
  mpq_class get(long k) {
    std::lock_guard<std::mutex> lock(mutex_);
    extend(k);
    return values_[static_cast<std::size_t>(k)];
  }

 private:
  void extend(long k) {
    if (static_cast<long>(values_.size()) > k) return;
    const long target = k < 2 * static_cast<long>(values_.size()) ? 2 * static_cast<long>(values_.size()) : k;
    // The transform is cheap enough to redo from scratch on growth.
    std::vector<mpq_class> row(static_cast<std::size_t>(target) + 1);
    values_.assign(static_cast<std::size_t>(target) + 1, mpq_class(0));
    for (long m = 0; m <= target; ++m) {
      row[static_cast<std::size_t>(m)] = mpq_class(1, m + 1);
      for (long j = m; j >= 1; --j) {
        auto& a = row[static_cast<std::size_t>(j - 1)];
        a = j * (a - row[static_cast<std::size_t>(j)]);
      }
      values_[static_cast<std::size_t>(m)] = row[0];
    }
  }

  std::mutex mutex_;
  std::vector<mpq_class> values_;
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

}  // namespace

mpq_class bernoulli(long k) {
  if (k < 2 || k % 2 != 0) {
    throw InvalidArgument("bernoulli: k must be even and >= 2, got " + std::to_string(k));
  }
  return bernoulli_cache().get(k);
}

mpz_class sigma(long s, long n) {
  if (n <= 0) throw InvalidArgument("sigma: n must be positive, got " + std::to_string(n));
  if (s < 0) throw InvalidArgument("sigma: exponent must be non-negative");
  mpz_class total = 0;
  mpz_class term;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(s));
    total += term;
    const long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(s));
      total += term;
    }
  }
  return total;
}

std::vector<mpz_class> sigma_table(long s, long count) {
  if (s < 0) throw InvalidArgument("sigma_table: exponent must be non-negative");
  std::vector<mpz_class> out(count > 0 ? static_cast<std::size_t>(count) : 0, mpz_class(0));
  mpz_class term;
  for (long d = 1; d < count; ++d) {
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(s));
    for (long n = d; n < count; n += d) out[static_cast<std::size_t>(n)] += term;
  }
  return out;
}

long divisor_count(long n) {
  if (n <= 0) throw InvalidArgument("divisor_count: n must be positive, got " + std::to_string(n));
  long count = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) count += (d * d == n) ? 1 : 2;
  }
  return count;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace mf
