#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ppc/perm.hpp"
#include "ppc/rational.hpp"
#include "ppc/rng.hpp"

namespace ppc {

/// Source of random group elements for the recognizer. Every drawn
/// permutation has degree() points.
class ElementSource {
 public:
  virtual ~ElementSource() = default;
  virtual std::size_t degree() const = 0;
  /// Throws ppc::source_error when no further element can be produced.
  virtual Permutation draw() = 0;
  virtual std::string description() const = 0;
};

/// Uniform elements of S_n or A_n.
class UniformGroupSource final : public ElementSource {
 public:
  UniformGroupSource(std::size_t n, Group group, std::uint64_t seed);
  std::size_t degree() const override { return n_; }
  Permutation draw() override;
  std::string description() const override;

 private:
  std::size_t n_;
  Group group_;
  Rng rng_;
};

/// Uniform choice from a fixed, nonempty list of same-degree permutations.
class ListSource final : public ElementSource {
 public:
  ListSource(std::vector<Permutation> elements, std::uint64_t seed);
  std::size_t degree() const override { return elements_.front().degree(); }
  Permutation draw() override;
  std::string description() const override;

 private:
  std::vector<Permutation> elements_;
  Rng rng_;
};

/// Replays a recorded sequence in order; fails once exhausted.
class ReplaySource final : public ElementSource {
 public:
  explicit ReplaySource(std::vector<Permutation> sequence);
  static ReplaySource from_file(const std::filesystem::path& path);
  std::size_t degree() const override { return sequence_.front().degree(); }
  Permutation draw() override;
  std::string description() const override;

 private:
  std::vector<Permutation> sequence_;
  std::size_t next_ = 0;
};

/// One permutation per line in one-line image notation; blank lines and lines
/// starting with '#' are skipped. All lines must share a degree.
std::vector<Permutation> read_permutation_file(const std::filesystem::path& path);

/// Inclusive range of admissible primes.
struct PrimeRange {
  std::uint64_t lo = 2;
  std::uint64_t hi = 0;
};

struct RecognitionOutcome {
  enum class Status { found, not_found };

  Status status = Status::not_found;
  std::uint64_t draws_used = 0;
  std::uint64_t budget = 0;
  double epsilon = 0;
  double c0 = 0;
  PrimeRange range;

  // Populated when found: g = element, g^exponent = witness, a prime-cycle.
  std::uint64_t prime = 0;
  std::optional<Permutation> element;
  BigInt exponent = 0;
  std::optional<Permutation> witness;

  bool found() const { return status == Status::found; }
  /// Human-readable one-sided statement of the result.
  std::string statement() const;
};

/// Draws up to sample_count(epsilon, c0) elements and stops at the first
/// pre-p-cycle with p prime in the range (default and upper clamp [2, n-3]).
/// The returned witness is re-verified to be a single p-cycle. A not_found
/// outcome makes no claim about the group; it records only that no pre-p-cycle
/// turned up in the budget.
/// Throws ppc::invalid_argument for n < 7, epsilon or c0 outside (0, 1).
RecognitionOutcome run_recognizer(ElementSource& source, double epsilon, double c0 = 1.0 / 19.0,
                                  std::optional<PrimeRange> range = std::nullopt);

}  // namespace ppc
