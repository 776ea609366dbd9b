#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "ppc/perm.hpp"
#include "ppc/primes.hpp"
#include "ppc/rational.hpp"

namespace ppc {

/// Default ceiling on n for operations that enumerate partitions of n.
inline constexpr std::uint64_t kEnumerationBound = 60;
/// Ceiling for the O(n^2) big-integer recurrences.
inline constexpr std::uint64_t kRecurrenceBound = 5000;

/// Forbidden cycle lengths A within {1..n} and mu = sum of 1/a over A.
class ForbiddenSet {
 public:
  /// Throws ppc::invalid_argument if a member lies outside {1..n}.
  ForbiddenSet(std::uint64_t n, std::set<std::uint64_t> members);

  std::uint64_t degree() const { return n_; }
  const std::set<std::uint64_t>& members() const { return members_; }
  bool contains(std::uint64_t k) const { return members_.contains(k); }
  const Rational& mu() const { return mu_; }

 private:
  std::uint64_t n_;
  std::set<std::uint64_t> members_;
  Rational mu_;
};

/// Primes p with lo < p <= hi.
class PrimeWindow {
 public:
  PrimeWindow() = default;
  /// Complete window over (lo, hi], by trial division.
  static PrimeWindow interval(double lo, double hi);
  /// Complete window over (lo, hi], read from a sieve covering hi.
  static PrimeWindow interval(double lo, double hi, const PrimeTable& table);
  /// Explicit list; each entry must be prime. lo/hi are set to
  /// (min - 1, max], and the list is not required to be every prime there.
  static PrimeWindow from_primes(std::vector<std::uint64_t> primes);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }
  bool empty() const { return primes_.empty(); }
  bool contains(std::uint64_t p) const;

 private:
  double lo_ = 0;
  double hi_ = 0;
  std::vector<std::uint64_t> primes_;
};

BigInt centralizer_order(const CycleType& t);

/// Proportion of the group with no cycle length in A. Computed by the
/// exponential-generating-function recurrence n q_n = sum p_{n-k} q_k, scaled to
/// integers c_n = n! q_n; A_n uses the signed companion recurrence where a
/// k-cycle carries (-1)^{k-1}, so that rho(A_n) = q_n + q~_n.
/// Throws ppc::invalid_argument for alt with n < 2, ppc::capacity_error past
/// kRecurrenceBound.
ExactProb avoid_proportion(const ForbiddenSet& forbidden, Group group);

/// Same quantity by summing 1/C(lambda) over partitions avoiding A.
ExactProb avoid_proportion_by_sweep(const ForbiddenSet& forbidden, Group group,
                                    std::uint64_t bound = kEnumerationBound);

/// sigma_m = prod_{i=1}^{floor(m/p)} (1 - 1/(ip)), the density of p'-elements in S_m.
ExactProb sigma_pprime(std::uint64_t m, std::uint64_t p);

/// Density (1/p) sigma_{n-p} of pre-p-cycles in S_n.
ExactProb pre_p_density(std::uint64_t n, std::uint64_t p);

/// Proportion of the group that is a pre-p-cycle for at least one p in the
/// window, by partition sweep. Throws ppc::capacity_error for n > bound.
ExactProb window_proportion(std::uint64_t n, const PrimeWindow& window, Group group,
                            std::uint64_t bound = kEnumerationBound);

struct TUProportions {
  ExactProb t;  ///< some window prime p has m_p >= 1
  ExactProb u;  ///< some window prime p has m_p >= 1 and sum_k m_{kp} >= 2
};

TUProportions exact_TU(std::uint64_t n, const PrimeWindow& window, Group group,
                       std::uint64_t bound = kEnumerationBound);

/// Proportion of k-cycles (2 <= k <= n) in S_n: sum 1/(k (n-k)!).
ExactProb cycle_proportion(std::uint64_t n);

/// Sum of 1/C(lambda) over all partitions of n (equals 1).
Rational partition_weight_total(std::uint64_t n, std::uint64_t bound = kEnumerationBound);

}  // namespace ppc
