#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "ppc/rational.hpp"

namespace ppc {

/// Sieve of Eratosthenes up to `limit` with prefix tables indexed by integer x:
///   pi(x)  = number of primes <= x
///   s1(x)  = sum of 1/p over primes p <= x
///   s2(x)  = sum of 1/p^2 over primes p <= x
/// The reciprocal sums use compensated summation; each entry is within
/// kSummationBudgetPerTerm * pi(x) of the exact rational value.
///
/// Immutable after construction and safe to share between readers.
class PrimeTable {
 public:
  static constexpr double kSummationBudgetPerTerm = 1e-12;

  std::uint64_t limit() const { return limit_; }
  bool is_prime(std::uint64_t x) const;
  std::uint64_t pi(std::uint64_t x) const;
  double s1(std::uint64_t x) const;
  double s2(std::uint64_t x) const;

  /// Primes in (lo, hi] with lo, hi clamped to the table.
  std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) const;

  /// Absolute error budget of s1/s2 at x.
  double summation_budget(std::uint64_t x) const {
    return kSummationBudgetPerTerm * static_cast<double>(pi(x));
  }

  /// Binary cache: "PPCT1", limit (u64 LE), the is_prime bitset (LSB-first,
  /// ceil((limit+1)/8) bytes), then pi, s1, s2 as (limit+1) LE doubles each.
  void save(const std::filesystem::path& path) const;
  /// Loads and re-validates a cache written by save(). Throws
  /// ppc::invalid_argument on a malformed or inconsistent file.
  static PrimeTable load(const std::filesystem::path& path);

  friend PrimeTable build_sieve(std::uint64_t limit);

 private:
  std::uint64_t limit_ = 0;
  std::vector<bool> is_prime_;
  std::vector<std::uint32_t> pi_prefix_;
  std::vector<double> s1_prefix_;
  std::vector<double> s2_prefix_;

  void check_index(std::uint64_t x) const;
  void fill_prefixes();
};

/// Throws ppc::invalid_argument when limit < 2.
PrimeTable build_sieve(std::uint64_t limit);

/// Loads the cache at `path` if it exists and covers `limit`, otherwise builds
/// a fresh table and (best effort) writes it to `path`.
PrimeTable build_or_load_sieve(std::uint64_t limit, const std::filesystem::path& path);

/// Sum of 1/p over primes a < p <= b. Real bounds are floored before lookup.
/// Throws ppc::out_of_range if b exceeds the table, ppc::invalid_argument if
/// a < 0 or a > b.
double sum_recip(const PrimeTable& table, double a, double b);

/// Sum of 1/p^2 over primes a < p <= b; same contract as sum_recip.
double sum_recip_sq(const PrimeTable& table, double a, double b);

/// Exact rational counterparts over integer bounds, for near-margin
/// re-evaluation and cross-checks.
Rational exact_sum_recip(const PrimeTable& table, std::uint64_t a, std::uint64_t b);
Rational exact_sum_recip_sq(const PrimeTable& table, std::uint64_t a, std::uint64_t b);

/// x/log x <= pi(x) <= (x/log x)(1 + 3/(2 log x)), evaluated in double with
/// extended-precision re-evaluation when either side is within 1e-9.
/// Throws ppc::invalid_argument for x < 11, ppc::out_of_range past the table.
bool verify_pi_bounds(const PrimeTable& table, std::uint64_t x);

/// Deterministic trial-division primality test.
bool is_prime_trial(std::uint64_t n);

}  // namespace ppc
