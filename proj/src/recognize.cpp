#include "ppc/recognize.hpp"

#include <fstream>
#include <stdexcept>

#include "ppc/bounds.hpp"
#include "ppc/errors.hpp"
#include "ppc/primes.hpp"

namespace ppc {

UniformGroupSource::UniformGroupSource(std::size_t n, Group group, std::uint64_t seed)
    : n_(n), group_(group), rng_(derive_seed(seed, 0)) {
  if (n == 0) throw invalid_argument("degree must be >= 1");
  if (group == Group::alt && n < 3) throw invalid_argument("A_n source requires n >= 3");
}

Permutation UniformGroupSource::draw() {
  return sample_uniform(n_, group_ == Group::alt ? Parity::even : Parity::any, rng_);
}

std::string UniformGroupSource::description() const {
  return std::string("uniform ") + (group_ == Group::sym ? "S_" : "A_") + std::to_string(n_);
}

ListSource::ListSource(std::vector<Permutation> elements, std::uint64_t seed)
    : elements_(std::move(elements)), rng_(derive_seed(seed, 0)) {
  if (elements_.empty()) throw invalid_argument("element list is empty");
  for (const auto& g : elements_)
    if (g.degree() != elements_.front().degree())
      throw invalid_argument("element list mixes degrees");
}

Permutation ListSource::draw() { return elements_[uniform_below(rng_, elements_.size())]; }

std::string ListSource::description() const {
  return "uniform over " + std::to_string(elements_.size()) + " listed elements";
}

ReplaySource::ReplaySource(std::vector<Permutation> sequence) : sequence_(std::move(sequence)) {
  if (sequence_.empty()) throw invalid_argument("replay sequence is empty");
  for (const auto& g : sequence_)
    if (g.degree() != sequence_.front().degree())
      throw invalid_argument("replay sequence mixes degrees");
}

ReplaySource ReplaySource::from_file(const std::filesystem::path& path) {
  return ReplaySource(read_permutation_file(path));
}

Permutation ReplaySource::draw() {
  if (next_ >= sequence_.size())
    throw source_error("replay source exhausted after " + std::to_string(sequence_.size()) +
                       " elements");
  return sequence_[next_++];
}

std::string ReplaySource::description() const {
  return "replay of " + std::to_string(sequence_.size()) + " elements";
}

std::vector<Permutation> read_permutation_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw invalid_argument("cannot open permutation file " + path.string());
  std::vector<Permutation> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_one_line(line));
    } catch (const invalid_argument& e) {
      throw invalid_argument(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (out.back().degree() != out.front().degree())
      throw invalid_argument(path.string() + ":" + std::to_string(line_no) +
                             ": degree differs from the first line");
  }
  if (out.empty()) throw invalid_argument("permutation file has no elements: " + path.string());
  return out;
}

std::string RecognitionOutcome::statement() const {
  if (found())
    return "found a pre-" + std::to_string(prime) + "-cycle after " + std::to_string(draws_used) +
           " draws";
  return "no pre-p-cycle found in " + std::to_string(draws_used) + " draws";
}

RecognitionOutcome run_recognizer(ElementSource& source, double epsilon, double c0,
                                  std::optional<PrimeRange> range) {
  const std::size_t n = source.degree();
  if (n < 7) throw invalid_argument("recognition requires n >= 7");
  if (!(epsilon > 0 && epsilon < 1)) throw invalid_argument("epsilon must lie in (0, 1)");
  if (!(c0 > 0 && c0 < 1)) throw invalid_argument("c0 must lie in (0, 1)");

  PrimeRange admissible{2, n - 3};
  if (range) {
    admissible.lo = std::max<std::uint64_t>(admissible.lo, range->lo);
    admissible.hi = std::min<std::uint64_t>(admissible.hi, range->hi);
  }

  RecognitionOutcome out;
  out.budget = sample_count(epsilon, c0);
  out.epsilon = epsilon;
  out.c0 = c0;
  out.range = admissible;

  for (std::uint64_t draw = 1; draw <= out.budget; ++draw) {
    Permutation g = source.draw();
    if (g.degree() != n) throw source_error("source produced a permutation of the wrong degree");
    out.draws_used = draw;
    const auto targets = pre_cycle_targets(cycle_type(g));
    for (std::uint64_t k : targets) {
      if (k < admissible.lo || k > admissible.hi || !is_prime_trial(k)) continue;
      CyclePower cp = extract_cycle_power(g, k);
      CycleType::Parts expected{{k, 1}};
      if (n > k) expected[1] = n - k;
      if (cycle_type(cp.witness) != CycleType(n, expected))
        throw std::logic_error("witness failed re-verification as a " + std::to_string(k) + "-cycle");
      out.status = RecognitionOutcome::Status::found;
      out.prime = k;
      out.element = std::move(g);
      out.exponent = cp.exponent;
      out.witness = std::move(cp.witness);
      return out;
    }
  }
  return out;
}

}  // namespace ppc
