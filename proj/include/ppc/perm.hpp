#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ppc/rational.hpp"
#include "ppc/rng.hpp"

namespace ppc {

enum class Group { sym, alt };
enum class Parity { any, even };

std::string_view to_string(Group g);
/// Accepts "sym"/"S" and "alt"/"A". Throws ppc::invalid_argument otherwise.
Group parse_group(std::string_view text);

/// Dense permutation of {0..n-1}; text forms are 1-based.
class Permutation {
 public:
  static constexpr std::size_t kMaxDegree = 10'000'000;

  Permutation() = default;
  static Permutation identity(std::size_t n);
  /// Throws ppc::invalid_argument unless `images` is a bijection on {0..n-1}.
  static Permutation from_zero_based(std::vector<std::uint32_t> images);
  /// Same, for images over {1..n}.
  static Permutation from_one_based(std::span<const std::uint64_t> images);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator[](std::size_t i) const { return images_[i]; }
  std::span<const std::uint32_t> images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {}
  std::vector<std::uint32_t> images_;
};

/// Partition of n by cycle lengths, stored as part -> multiplicity (>= 1).
class CycleType {
 public:
  using Parts = std::map<std::uint64_t, std::uint64_t>;

  CycleType() = default;
  /// Throws ppc::invalid_argument if the parts do not sum to n or a
  /// multiplicity is zero.
  CycleType(std::uint64_t n, Parts parts);
  /// From an unordered list of cycle lengths.
  static CycleType from_lengths(std::span<const std::uint64_t> lengths);

  std::uint64_t degree() const { return n_; }
  const Parts& parts() const { return parts_; }
  std::uint64_t multiplicity(std::uint64_t k) const;
  /// (-1)^(sum (k-1) m_k).
  int sign() const;
  /// Text form like "<1^2 3^1>".
  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  std::uint64_t n_ = 0;
  Parts parts_;
};

// Predicates over any range of (part, multiplicity) pairs with multiplicity
// >= 1. Shared by CycleType queries and partition sweeps.

/// k is a pre-cycle target: m_k = 1 and every other part is coprime to k.
template <typename PartRange>
bool is_pre_cycle_target(const PartRange& parts, std::uint64_t k) {
  if (k < 2) return false;
  bool seen = false;
  for (const auto& [part, mult] : parts) {
    if (part == k) {
      if (mult != 1) return false;
      seen = true;
    } else if (std::gcd(part, k) != 1) {
      return false;
    }
  }
  return seen;
}

/// Prime-specialised form: m_p = 1 and no other part divisible by p.
template <typename PartRange>
bool is_pre_prime_cycle(const PartRange& parts, std::uint64_t p) {
  std::uint64_t mp = 0;
  for (const auto& [part, mult] : parts) {
    if (part == p)
      mp = mult;
    else if (part % p == 0)
      return false;
  }
  return mp == 1;
}

template <typename PartRange>
std::uint64_t multiplicity_of(const PartRange& parts, std::uint64_t k) {
  for (const auto& [part, mult] : parts)
    if (part == k) return mult;
  return 0;
}

/// Sum over j >= 1 of m_{jp}.
template <typename PartRange>
std::uint64_t multiples_count(const PartRange& parts, std::uint64_t p) {
  std::uint64_t total = 0;
  for (const auto& [part, mult] : parts)
    if (part % p == 0) total += mult;
  return total;
}

/// Fisher-Yates over S_n. For Parity::even, an odd draw has the images at
/// positions 0 and 1 swapped, which is a bijection from odd to even
/// permutations and so yields the uniform distribution on A_n.
/// Throws ppc::invalid_argument for n = 0, n > kMaxDegree, or even with n < 3.
Permutation sample_uniform(std::size_t n, Parity parity, Rng& rng);

/// Sign computed from the cycle count: (-1)^(n - cycles).
int sign(const Permutation& g);

CycleType cycle_type(const Permutation& g);

/// All k > 1 for which some power of a permutation of this type is a k-cycle.
std::set<std::uint64_t> pre_cycle_targets(const CycleType& t);

/// g^e for a nonnegative exponent, via the cycle decomposition in O(n).
Permutation power(const Permutation& g, const BigInt& exponent);

struct CyclePower {
  BigInt exponent;
  Permutation witness;
};

/// exponent = lcm of the distinct cycle lengths other than k; g^exponent is the
/// single k-cycle of g. Throws ppc::invalid_argument naming the failed
/// condition when k is not a pre-cycle target of g.
CyclePower extract_cycle_power(const Permutation& g, std::uint64_t k);

/// Disjoint-cycle notation over {1..n}, e.g. "(1,2,3)(4,5)"; fixed points may
/// be omitted or written as singletons. "()" is the identity.
Permutation parse_cycles(std::string_view text, std::size_t n);
/// Whitespace-separated images of 1..n, e.g. "2 3 1 5 4".
Permutation parse_one_line(std::string_view text);

/// Cycle notation with fixed points omitted; "()" for the identity.
std::string to_cycle_string(const Permutation& g);
std::string to_one_line_string(const Permutation& g);

}  // namespace ppc
