#pragma once

// Brute-force reference computations. Nothing here calls into the library's
// cycle-type, partition, or recurrence code; results come from direct
// enumeration and composition of permutations.

#include <cstdint>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace ppc::oracle {

using Perm = std::vector<std::uint32_t>;

Perm compose(const Perm& first, const Perm& then);
/// g^e by square-and-multiply composition.
Perm power(const Perm& g, std::uint64_t e);
bool is_identity(const Perm& g);

/// Sorted cycle lengths, found by walking orbits.
std::vector<std::uint64_t> cycle_lengths(const Perm& g);
/// Sign from the inversion count.
int sign_by_inversions(const Perm& g);
/// Points moved by g, if g is a single cycle on them; 0 otherwise.
std::uint64_t single_cycle_length(const Perm& g);

/// One element of S_n with everything the brute-force checks need.
struct Element {
  Perm perm;
  std::vector<std::uint64_t> lengths;
  int sign;
  /// k such that some power g^m (m >= 1, up to the order) is a k-cycle.
  std::set<std::uint64_t> powers_to;
};

/// All n! elements via std::next_permutation.
std::vector<Element> enumerate_symmetric(std::uint32_t n);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);
/// pi(limit) by a segmented sieve with 2^15-wide blocks.
std::uint64_t segmented_prime_count(std::uint64_t limit);

/// sum_{k=0}^n (-1)^k / k!
mpq_class derangement_series(std::uint64_t n);
/// sum of 1/p over primes p with lo < p <= hi, by trial division.
mpq_class prime_reciprocal_sum(std::uint64_t lo, std::uint64_t hi);

}  // namespace ppc::oracle
