#include <doctest.h>

#include "ppc/errors.hpp"
#include "ppc/exact.hpp"
#include "ppc/montecarlo.hpp"

using namespace ppc;

TEST_CASE("wilson interval") {
  const auto zero = wilson_estimate(0, 100, 0.99);
  CHECK(zero.p_hat == 0);
  CHECK(zero.lo == 0);
  CHECK(zero.hi > 0);
  const auto half = wilson_estimate(500, 1000, 0.95);
  CHECK(half.p_hat == 0.5);
  CHECK(half.lo == doctest::Approx(0.469).epsilon(1e-3));
  CHECK(half.hi == doctest::Approx(0.531).epsilon(1e-3));
  CHECK(half.half_width == doctest::Approx((half.hi - half.lo) / 2));
  CHECK(wilson_estimate(10, 10, 0.99).hi == doctest::Approx(1.0));
  CHECK_THROWS_AS(wilson_estimate(0, 0, 0.99), ppc::invalid_argument);
  CHECK_THROWS_AS(wilson_estimate(5, 4, 0.99), ppc::invalid_argument);
  CHECK_THROWS_AS(wilson_estimate(1, 4, 1.0), ppc::invalid_argument);
}

TEST_CASE("estimate examples for n = 5") {
  const event::PreCycleInWindow two{PrimeWindow::from_primes({2})};
  const auto sym = estimate_event(5, two, Group::sym, 100'000, 42);
  CHECK(std::abs(sym.p_hat - 0.25) <= 3 * sym.half_width);
  CHECK(sym.trials == 100'000);
  const auto empty = estimate_event(5, event::PreCycleInWindow{PrimeWindow::interval(2, 2)}, Group::sym, 10'000, 42);
  CHECK(empty.p_hat == 0);
  const auto alt = estimate_event(5, two, Group::alt, 100'000, 42);
  CHECK(alt.p_hat == 0);
}

TEST_CASE("estimates of each event are near the exact values") {
  const std::uint64_t n = 12;
  const auto w = PrimeWindow::interval(2, 11);
  const ForbiddenSet f(n, {1, 2});
  const auto tu = exact_TU(n, w, Group::sym);
  struct Case {
    Event e;
    double exact;
  };
  const Case cases[] = {
      {event::PreCycleInWindow{w}, window_proportion(n, w, Group::sym).to_double()},
      {event::Avoids{f}, avoid_proportion(f, Group::sym).to_double()},
      {event::InT{w}, tu.t.to_double()},
      {event::InU{w}, tu.u.to_double()},
  };
  std::uint64_t seed = 100;
  for (const auto& c : cases) {
    const auto est = estimate_event(n, c.e, Group::sym, 200'000, ++seed);
    CHECK(std::abs(est.p_hat - c.exact) <= 4 * est.half_width);
  }
}

TEST_CASE("estimates do not depend on the thread count") {
  const event::InU u{PrimeWindow::interval(1, 13)};
  EstimateOptions opt;
  opt.block_size = 1000;
  const auto base = estimate_event(17, u, Group::alt, 50'321, 7, opt);
  for (unsigned threads : {2u, 3u, 8u}) {
    opt.threads = threads;
    CHECK(estimate_event(17, u, Group::alt, 50'321, 7, opt) == base);
  }
  CHECK(!(estimate_event(17, u, Group::alt, 50'321, 8, opt) == base));
}

TEST_CASE("occurs and describe") {
  const CycleType t(9, {{2, 1}, {3, 1}, {4, 1}});
  CHECK(occurs(event::PreCycleInWindow{PrimeWindow::from_primes({3})}, t));
  CHECK(!occurs(event::PreCycleInWindow{PrimeWindow::from_primes({2})}, t));
  CHECK(occurs(event::InT{PrimeWindow::from_primes({2})}, t));
  CHECK(occurs(event::InU{PrimeWindow::from_primes({2})}, t));
  CHECK(!occurs(event::InU{PrimeWindow::from_primes({3})}, t));
  CHECK(occurs(event::Avoids{ForbiddenSet(9, {1, 5})}, t));
  CHECK(!describe(event::InT{PrimeWindow::from_primes({2})}).empty());
}

TEST_CASE("estimate errors") {
  const event::PreCycleInWindow w{PrimeWindow::from_primes({2})};
  CHECK_THROWS_AS(estimate_event(5, w, Group::sym, 0, 1), ppc::invalid_argument);
  CHECK_THROWS_AS(estimate_event(5, event::Avoids{ForbiddenSet(6, {6})}, Group::sym, 10, 1), ppc::invalid_argument);
  CHECK_THROWS_AS(estimate_event(2, w, Group::alt, 10, 1), ppc::invalid_argument);
}
