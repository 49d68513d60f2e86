#pragma once

#include <gmpxx.h>

#include <filesystem>
#include <shared_mutex>
#include <vector>

namespace stieltjes {

/// Signed Stirling numbers of the first kind, s(n,k) = 0 for k > n.
mpz_class stirling1(unsigned n, unsigned k);

/// Bernoulli numbers with B_1 = -1/2.
mpq_class bernoulli(unsigned j);

/// Generalized harmonic number H_n^(r) = sum_{i<=n} i^-r.
mpq_class harmonic(unsigned n, unsigned r = 1);

/// (d/ds)^l (s)_j at s = 1, which is (-1)^(j+l) l! s(j+1, l+1).
mpz_class pochhammer_deriv_at_one(unsigned j, unsigned l);

mpz_class factorial(unsigned n);
mpz_class binomial(unsigned n, unsigned k);

/// Row-major triangle of s(n,k) for n <= n_max, k <= min(n, k_max).
///
/// Readers share the lock; growth takes it exclusively. Entries never change
/// once stored, so concurrent readers see identical values regardless of
/// interleaving.
class StirlingTable {
 public:
  static StirlingTable& global();

  mpz_class get(unsigned n, unsigned k);
  void reserve(unsigned n_max, unsigned k_max);
  unsigned n_max() const;
  unsigned k_max() const;

  /// Writes the table as text; returns false on I/O failure.
  bool save(const std::filesystem::path& file) const;
  /// Replaces the table with the file contents if the file is well formed
  /// and consistent with the recurrence; otherwise leaves it untouched and
  /// returns false.
  bool load(const std::filesystem::path& file);
  void clear();

 private:
  void grow_locked(unsigned n_max, unsigned k_max);
  mutable std::shared_mutex mu_;
  std::vector<std::vector<mpz_class>> rows_;
  unsigned k_max_ = 0;
};

/// Name of the table file inside a cache directory.
std::filesystem::path stirling_cache_file(const std::filesystem::path& dir);

}  // namespace stieltjes
