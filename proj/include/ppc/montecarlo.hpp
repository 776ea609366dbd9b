#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "ppc/exact.hpp"
#include "ppc/perm.hpp"

namespace ppc {

namespace event {
/// Pre-p-cycle for some p in the window.
struct PreCycleInWindow {
  PrimeWindow window;
};
/// No cycle length in the forbidden set.
struct Avoids {
  ForbiddenSet forbidden;
};
/// m_p >= 1 for some p in the window.
struct InT {
  PrimeWindow window;
};
/// m_p >= 1 and sum_k m_{kp} >= 2 for some p in the window.
struct InU {
  PrimeWindow window;
};
}  // namespace event

using Event = std::variant<event::PreCycleInWindow, event::Avoids, event::InT, event::InU>;

std::string describe(const Event& e);

/// Whether a permutation of this cycle type lies in the event.
bool occurs(const Event& e, const CycleType& t);

struct Estimate {
  double p_hat = 0;
  /// Half the width of the Wilson score interval at `level`.
  double half_width = 0;
  /// Wilson interval end points.
  double lo = 0;
  double hi = 0;
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double level = 0.99;

  friend bool operator==(const Estimate&, const Estimate&) = default;
};

/// Wilson score interval for `successes` out of `trials` at two-sided
/// confidence `level`.
Estimate wilson_estimate(std::uint64_t successes, std::uint64_t trials, double level);

struct EstimateOptions {
  double level = 0.99;
  unsigned threads = 1;
  /// Trials per block; block b draws from the stream derive_seed(seed, b).
  std::uint64_t block_size = 4096;
};

/// Fraction of `trials` independent uniform draws from the group lying in the
/// event. Results depend only on (n, event, group, trials, seed, block_size),
/// never on the thread count. Throws ppc::invalid_argument for trials = 0 or
/// event parameters that do not fit degree n.
Estimate estimate_event(std::uint64_t n, const Event& event, Group group, std::uint64_t trials,
                        std::uint64_t seed, const EstimateOptions& options = {});

}  // namespace ppc
