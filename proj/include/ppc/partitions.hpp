#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>

#include "ppc/rational.hpp"

namespace ppc {

/// One partition of n as visited by for_each_partition.
struct PartitionTerm {
  /// (part, multiplicity) pairs, largest part first.
  std::span<const std::pair<std::uint64_t, std::uint64_t>> parts;
  /// C(lambda) = prod k^{m_k} m_k!.
  const BigInt& centralizer;
  /// n!/C(lambda), the size of the conjugacy class in S_n.
  const BigInt& class_size;
  /// Sign of any permutation of this cycle type.
  int sign;
};

/// Visits every partition of n in reverse-lexicographic order (largest part
/// descending, then its multiplicity descending). C(lambda) is carried down
/// the recursion so each leaf costs one multiplication and one exact division.
void for_each_partition(std::uint64_t n, const std::function<void(const PartitionTerm&)>& visit);

/// Number of partitions of n, by Euler's pentagonal recurrence.
BigInt partition_count(std::uint64_t n);

}  // namespace ppc
