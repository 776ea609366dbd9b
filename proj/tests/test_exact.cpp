#include <doctest.h>

#include <cmath>

#include "ppc/errors.hpp"
#include "ppc/exact.hpp"
#include "ppc/partitions.hpp"
#include "ppc/primes.hpp"
#include "ppc/rng.hpp"

using namespace ppc;

namespace {

Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

std::set<std::uint64_t> random_set(Rng& rng, std::uint64_t n) {
  std::set<std::uint64_t> s;
  const double density = uniform_unit(rng);
  for (std::uint64_t k = 1; k <= n; ++k)
    if (uniform_unit(rng) < density) s.insert(k);
  return s;
}

PrimeWindow window_of(std::initializer_list<std::uint64_t> primes) { return PrimeWindow::from_primes(primes); }

}  // namespace

TEST_CASE("centralizer_order examples") {
  CHECK(centralizer_order(CycleType(6, {{1, 6}})) == 720);
  CHECK(centralizer_order(CycleType(5, {{2, 1}, {3, 1}})) == 6);
  CHECK(centralizer_order(CycleType(5, {{2, 2}, {1, 1}})) == 8);
}

TEST_CASE("avoid_proportion examples") {
  CHECK(avoid_proportion(ForbiddenSet(4, {1}), Group::sym).value() == q(3, 8));
  for (std::uint64_t n : {1, 2, 7, 30})
    CHECK(avoid_proportion(ForbiddenSet(n, {}), Group::sym).value() == 1);
  CHECK(avoid_proportion(ForbiddenSet(3, {2}), Group::alt).value() == 1);
  CHECK(avoid_proportion(ForbiddenSet(5, {1, 2, 3, 4, 5}), Group::sym).value() == 0);
  CHECK(ForbiddenSet(6, {1, 2, 3}).mu() == q(11, 6));
  CHECK_THROWS_AS(ForbiddenSet(4, {5}), ppc::invalid_argument);
  CHECK_THROWS_AS(ForbiddenSet(4, {0}), ppc::invalid_argument);
}

TEST_CASE("recurrence agrees with the partition sweep for n <= 20") {
  Rng rng(derive_seed(3, 3));
  for (std::uint64_t n = 1; n <= 20; ++n) {
    for (int i = 0; i < 10; ++i) {
      const ForbiddenSet f(n, random_set(rng, n));
      CHECK(avoid_proportion(f, Group::sym) == avoid_proportion_by_sweep(f, Group::sym));
      if (n >= 2) CHECK(avoid_proportion(f, Group::alt) == avoid_proportion_by_sweep(f, Group::alt));
    }
  }
}

TEST_CASE("alternating counts are whole and consistent with S_n") {
  Rng rng(derive_seed(3, 4));
  for (std::uint64_t n = 2; n <= 25; ++n) {
    const BigInt half = factorial(n) / 2;
    const ForbiddenSet f(n, random_set(rng, n));
    const Rational alt = avoid_proportion(f, Group::alt).value();
    const Rational sym = avoid_proportion(f, Group::sym).value();
    const Rational even_count = alt * half;
    CHECK(even_count.get_den() == 1);
    const Rational odd_count = sym * factorial(n) - even_count;
    CHECK(odd_count.get_den() == 1);
    CHECK(odd_count >= 0);
    CHECK(odd_count <= half);
  }
}

TEST_CASE("sigma_pprime examples") {
  CHECK(sigma_pprime(3, 2).value() == q(1, 2));
  CHECK(sigma_pprime(1, 2).value() == 1);
  CHECK(sigma_pprime(0, 5).value() == 1);
  CHECK(sigma_pprime(4, 2).value() == q(3, 8));
  CHECK(sigma_pprime(6, 3).value() == q(5, 9));
  CHECK_THROWS_AS(sigma_pprime(5, 4), ppc::invalid_argument);
}

TEST_CASE("pre_p_density examples") {
  CHECK(pre_p_density(5, 2).value() == q(1, 4));
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) CHECK(pre_p_density(p, p).value() == q(1, long(p)));
  CHECK(pre_p_density(9, 3).value() == q(5, 27));
  CHECK_THROWS_AS(pre_p_density(9, 4), ppc::invalid_argument);
  CHECK_THROWS_AS(pre_p_density(3, 5), ppc::invalid_argument);
}

TEST_CASE("pre_p_density agrees with one-prime windows for n <= 40") {
  for (std::uint64_t n = 2; n <= 40; ++n)
    for (std::uint64_t p = 2; p <= n; ++p)
      if (is_prime_trial(p)) REQUIRE(pre_p_density(n, p) == window_proportion(n, window_of({p}), Group::sym));
}

TEST_CASE("window_proportion examples") {
  CHECK(window_proportion(5, window_of({2}), Group::sym).value() == q(1, 4));
  CHECK(window_proportion(5, PrimeWindow::interval(2, 2), Group::sym).value() == 0);
  CHECK(window_proportion(5, window_of({2}), Group::alt).value() == 0);
  const auto w = PrimeWindow::interval(4, 13);
  CHECK(w.primes() == std::vector<std::uint64_t>{5, 7, 11, 13});
  CHECK(w.contains(7));
  CHECK(!w.contains(3));
  CHECK_THROWS_AS(PrimeWindow::from_primes({4}), ppc::invalid_argument);
  CHECK_THROWS_AS(window_proportion(kEnumerationBound + 1, w, Group::sym), ppc::capacity_error);
}

TEST_CASE("exact_TU examples") {
  const auto tu5 = exact_TU(5, window_of({2}), Group::sym);
  CHECK(tu5.t.value() == q(3, 8));
  CHECK(tu5.u.value() == q(1, 8));
  const auto tu4 = exact_TU(4, window_of({2}), Group::sym);
  CHECK(tu4.t.value() == q(3, 8));
  CHECK(tu4.u.value() == q(1, 8));
  CHECK(tu4.t.value() - tu4.u.value() == window_proportion(4, window_of({2}), Group::sym).value());
  const auto empty = exact_TU(9, PrimeWindow::interval(7, 10), Group::sym);
  CHECK(empty.t.value() == 0);
  CHECK(empty.u.value() == 0);
}

TEST_CASE("window proportion is sandwiched by T and U") {
  Rng rng(derive_seed(3, 5));
  for (int i = 0; i < 150; ++i) {
    const std::uint64_t n = 2 + uniform_below(rng, 29);
    const double lo = static_cast<double>(uniform_below(rng, n));
    const double hi = lo + static_cast<double>(uniform_below(rng, n - static_cast<std::uint64_t>(lo) + 1));
    const auto w = PrimeWindow::interval(lo, hi);
    for (Group g : {Group::sym, Group::alt}) {
      const auto rho = window_proportion(n, w, g).value();
      const auto tu = exact_TU(n, w, g);
      CHECK(rho >= tu.t.value() - tu.u.value());
      CHECK(rho <= tu.t.value());
      CHECK(tu.u.value() <= tu.t.value());
    }
  }
}

TEST_CASE("cycle_proportion examples") {
  CHECK(cycle_proportion(3).value() == q(5, 6));
  CHECK(cycle_proportion(2).value() == q(1, 2));
  CHECK_THROWS_AS(cycle_proportion(1), ppc::invalid_argument);
  CHECK(std::abs(20 * cycle_proportion(20).to_double() - std::exp(1.0)) < 0.5);
  CHECK(std::abs(200 * cycle_proportion(200).to_double() - std::exp(1.0)) < 0.05);
}

TEST_CASE("partition sweep is complete for n <= 60") {
  for (std::uint64_t n : {0, 1, 2, 5, 10, 17, 25, 33, 40, 48, 60}) {
    std::uint64_t visited = 0;
    BigInt total_class = 0;
    Rational weight = 0;
    const bool small = n <= 25;
    for_each_partition(n, [&](const PartitionTerm& t) {
      ++visited;
      total_class += t.class_size;
      if (small) weight += Rational(1, t.centralizer);
    });
    CHECK(BigInt(visited) == partition_count(n));
    CHECK(total_class == factorial(n));
    if (small) CHECK(weight == 1);
  }
  CHECK(partition_count(60) == 966467);
  CHECK(partition_count(100) == BigInt("190569292"));
  CHECK(partition_weight_total(30) == 1);
}

TEST_CASE("partition sweep visits reverse-lexicographic order") {
  std::vector<std::string> seen;
  for_each_partition(4, [&](const PartitionTerm& t) {
    std::string s;
    for (const auto& [k, m] : t.parts) s += std::to_string(k) + "^" + std::to_string(m) + " ";
    seen.push_back(s);
  });
  CHECK(seen == std::vector<std::string>{"4^1 ", "3^1 1^1 ", "2^2 ", "2^1 1^2 ", "1^4 "});
}

TEST_CASE("recurrence range") {
  CHECK(avoid_proportion(ForbiddenSet(1000, {1}), Group::sym).to_double() == doctest::Approx(std::exp(-1.0)));
  CHECK(pre_p_density(1000, 997).value() == q(1, 997));
  CHECK_THROWS_AS(avoid_proportion(ForbiddenSet(kRecurrenceBound + 1, {}), Group::sym), ppc::capacity_error);
}
