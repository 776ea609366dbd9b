#include "ppc/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include <boost/math/distributions/normal.hpp>

#include "ppc/errors.hpp"
#include "ppc/rng.hpp"

namespace ppc {

namespace {

std::string window_text(const PrimeWindow& w) {
  std::string s = "{";
  for (std::size_t i = 0; i < w.primes().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.primes()[i]);
  }
  return s + "}";
}

void check_window(const PrimeWindow& w, std::uint64_t n) {
  for (std::uint64_t p : w.primes())
    if (p > n) throw invalid_argument("window prime " + std::to_string(p) + " exceeds n");
}

template <typename... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

std::string describe(const Event& e) {
  return std::visit(
      Overloaded{
          [](const event::PreCycleInWindow& ev) { return "pre_cycle_in_window" + window_text(ev.window); },
          [](const event::Avoids& ev) {
            std::string s = "avoids{";
            bool first = true;
            for (auto a : ev.forbidden.members()) {
              if (!first) s += ",";
              first = false;
              s += std::to_string(a);
            }
            return s + "}";
          },
          [](const event::InT& ev) { return "in_T" + window_text(ev.window); },
          [](const event::InU& ev) { return "in_U" + window_text(ev.window); },
      },
      e);
}

bool occurs(const Event& e, const CycleType& t) {
  const auto& parts = t.parts();
  return std::visit(
      Overloaded{
          [&](const event::PreCycleInWindow& ev) {
            return std::any_of(ev.window.primes().begin(), ev.window.primes().end(),
                               [&](std::uint64_t p) { return is_pre_prime_cycle(parts, p); });
          },
          [&](const event::Avoids& ev) {
            return std::none_of(parts.begin(), parts.end(),
                                [&](const auto& pm) { return ev.forbidden.contains(pm.first); });
          },
          [&](const event::InT& ev) {
            return std::any_of(ev.window.primes().begin(), ev.window.primes().end(),
                               [&](std::uint64_t p) { return t.multiplicity(p) >= 1; });
          },
          [&](const event::InU& ev) {
            return std::any_of(ev.window.primes().begin(), ev.window.primes().end(), [&](std::uint64_t p) {
              return t.multiplicity(p) >= 1 && multiples_count(parts, p) >= 2;
            });
          },
      },
      e);
}

Estimate wilson_estimate(std::uint64_t successes, std::uint64_t trials, double level) {
  if (trials == 0) throw invalid_argument("trials must be >= 1");
  if (successes > trials) throw invalid_argument("successes exceed trials");
  if (!(level > 0 && level < 1)) throw invalid_argument("confidence level must lie in (0, 1)");
  const boost::math::normal_distribution<double> normal;
  const double z = boost::math::quantile(normal, 0.5 + level / 2);
  const double nt = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / nt;
  const double z2 = z * z;
  const double denom = 1 + z2 / nt;
  const double center = (p + z2 / (2 * nt)) / denom;
  const double half = z / denom * std::sqrt(p * (1 - p) / nt + z2 / (4 * nt * nt));
  Estimate e;
  e.p_hat = p;
  e.half_width = half;
  e.lo = std::max(0.0, center - half);
  e.hi = std::min(1.0, center + half);
  e.successes = successes;
  e.trials = trials;
  e.level = level;
  return e;
}

Estimate estimate_event(std::uint64_t n, const Event& event, Group group, std::uint64_t trials,
                        std::uint64_t seed, const EstimateOptions& options) {
  if (trials == 0) throw invalid_argument("trials must be >= 1");
  if (options.block_size == 0) throw invalid_argument("block size must be >= 1");
  if (n == 0) throw invalid_argument("degree must be >= 1");
  std::visit(Overloaded{
                 [&](const event::Avoids& ev) {
                   if (ev.forbidden.degree() != n)
                     throw invalid_argument("forbidden set degree does not match n");
                 },
                 [&](const auto& ev) { check_window(ev.window, n); },
             },
             event);
  const Parity parity = group == Group::alt ? Parity::even : Parity::any;
  if (parity == Parity::even && n < 3) throw invalid_argument("sampling from A_n requires n >= 3");

  const std::uint64_t blocks = (trials + options.block_size - 1) / options.block_size;
  std::vector<std::uint64_t> block_hits(blocks, 0);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t b = next++; b < blocks; b = next++) {
      Rng rng(derive_seed(seed, b));
      const std::uint64_t begin = b * options.block_size;
      const std::uint64_t end = std::min(trials, begin + options.block_size);
      std::uint64_t hits = 0;
      for (std::uint64_t i = begin; i < end; ++i)
        if (occurs(event, cycle_type(sample_uniform(n, parity, rng)))) ++hits;
      block_hits[b] = hits;
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(std::min<std::uint64_t>(blocks, 256))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  std::uint64_t successes = 0;
  for (std::uint64_t h : block_hits) successes += h;
  Estimate e = wilson_estimate(successes, trials, options.level);
  e.seed = seed;
  return e;
}

}  // namespace ppc
