#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include <boost/math/distributions/chi_squared.hpp>

#include "ppc/errors.hpp"
#include "ppc/oracle.hpp"
#include "ppc/perm.hpp"
#include "ppc/rng.hpp"

using namespace ppc;

namespace {

CycleType type_of(std::initializer_list<std::pair<const std::uint64_t, std::uint64_t>> parts) {
  std::uint64_t n = 0;
  for (const auto& [k, m] : parts) n += k * m;
  return CycleType(n, CycleType::Parts(parts));
}

oracle::Perm as_oracle(const Permutation& g) { return {g.images().begin(), g.images().end()}; }

}  // namespace

TEST_CASE("cycle types of the standard examples") {
  CHECK(cycle_type(Permutation::identity(5)) == type_of({{1, 5}}));
  const auto g = parse_cycles("(1,2,3,4)(5,6)(7,8,9)", 9);
  CHECK(cycle_type(g) == type_of({{2, 1}, {3, 1}, {4, 1}}));
  CHECK(cycle_type(g).to_string() == "<2^1 3^1 4^1>");
  const auto c = parse_cycles("(1,2,3,4,5,6,7)", 7);
  CHECK(cycle_type(c) == type_of({{7, 1}}));
  CHECK(cycle_type(parse_cycles("()", 4)).multiplicity(1) == 4);
}

TEST_CASE("CycleType validation") {
  CHECK_THROWS_AS(CycleType(5, {{2, 1}}), ppc::invalid_argument);
  CHECK_THROWS_AS(CycleType(2, {{2, 1}, {3, 0}}), ppc::invalid_argument);
  const std::vector<std::uint64_t> lengths{3, 1, 3, 2};
  CHECK(CycleType::from_lengths(lengths) == type_of({{1, 1}, {2, 1}, {3, 2}}));
}

TEST_CASE("pre_cycle_targets examples") {
  CHECK(pre_cycle_targets(type_of({{2, 1}, {3, 1}, {4, 1}})) == std::set<std::uint64_t>{3});
  CHECK(pre_cycle_targets(type_of({{3, 1}, {5, 1}})) == std::set<std::uint64_t>{3, 5});
  CHECK(pre_cycle_targets(type_of({{1, 8}})).empty());
  CHECK(pre_cycle_targets(type_of({{6, 1}, {1, 2}})) == std::set<std::uint64_t>{6});
  CHECK(pre_cycle_targets(type_of({{2, 2}})).empty());
}

TEST_CASE("pre_cycle_targets matches brute-force powering for n <= 8") {
  for (std::uint32_t n = 1; n <= 8; ++n) {
    for (const auto& e : oracle::enumerate_symmetric(n)) {
      const auto g = Permutation::from_zero_based(e.perm);
      REQUIRE(pre_cycle_targets(cycle_type(g)) == e.powers_to);
    }
  }
}

TEST_CASE("extract_cycle_power examples") {
  const auto g = parse_cycles("(1,2,3,4)(5,6)(7,8,9)", 9);
  const auto cp = extract_cycle_power(g, 3);
  CHECK(cp.exponent == 4);
  CHECK(cp.witness == parse_cycles("(7,8,9)", 9));
  CHECK(to_cycle_string(cp.witness) == "(7,8,9)");

  const auto c = parse_cycles("(1,3,2,5,4)", 5);
  const auto cc = extract_cycle_power(c, 5);
  CHECK(cc.exponent == 1);
  CHECK(cc.witness == c);

  const auto h = parse_cycles("(1,2,3)(4,5,6,7,8)", 8);
  const auto hp = extract_cycle_power(h, 5);
  CHECK(hp.exponent == 3);
  CHECK(cycle_type(hp.witness) == type_of({{1, 3}, {5, 1}}));
  CHECK(hp.witness == power(h, 3));
}

TEST_CASE("extract_cycle_power errors name the failed condition") {
  const auto g = parse_cycles("(1,2,3,4)(5,6)(7,8,9)", 9);
  auto message = [&](std::uint64_t k) {
    try {
      extract_cycle_power(g, k);
    } catch (const ppc::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(2).find("share") != std::string::npos);
  CHECK(message(5).find("m_k = 0") != std::string::npos);
  CHECK(message(1) != "");
  const auto d = parse_cycles("(1,2)(3,4)", 4);
  CHECK_THROWS_AS(extract_cycle_power(d, 2), ppc::invalid_argument);
}

TEST_CASE("power agrees with repeated composition") {
  Rng rng(derive_seed(5, 1));
  for (int i = 0; i < 200; ++i) {
    const auto g = sample_uniform(1 + uniform_below(rng, 30), Parity::any, rng);
    const std::uint64_t e = uniform_below(rng, 5000);
    CHECK(as_oracle(power(g, e)) == oracle::power(as_oracle(g), e));
  }
  const auto g = parse_cycles("(1,2,3)(4,5)", 5);
  BigInt huge;
  mpz_ui_pow_ui(huge.get_mpz_t(), 10, 40);  // 10^40 = 4 mod 6
  CHECK(power(g, huge) == power(g, 4));
}

TEST_CASE("sign matches inversion parity") {
  Rng rng(derive_seed(5, 2));
  for (int i = 0; i < 500; ++i) {
    const auto g = sample_uniform(1 + uniform_below(rng, 12), Parity::any, rng);
    CHECK(sign(g) == oracle::sign_by_inversions(as_oracle(g)));
    CHECK(sign(g) == cycle_type(g).sign());
  }
}

TEST_CASE("sample_uniform examples") {
  Rng rng(derive_seed(5, 3));
  CHECK(sample_uniform(1, Parity::any, rng) == Permutation::identity(1));

  const int trials = 100'000;
  int derangements = 0;
  for (int i = 0; i < trials; ++i)
    if (cycle_type(sample_uniform(5, Parity::any, rng)).multiplicity(1) == 0) ++derangements;
  const double p = 44.0 / 120;
  CHECK(std::abs(derangements / double(trials) - p) <= 3 * std::sqrt(p * (1 - p) / trials));

  int double_transpositions = 0;
  bool all_even = true;
  for (int i = 0; i < trials; ++i) {
    const auto g = sample_uniform(4, Parity::even, rng);
    all_even = all_even && sign(g) == 1;
    if (cycle_type(g).multiplicity(2) == 2) ++double_transpositions;
  }
  CHECK(all_even);
  const double q = 3.0 / 12;
  CHECK(std::abs(double_transpositions / double(trials) - q) <= 3 * std::sqrt(q * (1 - q) / trials));
}

TEST_CASE("sample_uniform is uniform on S_6 and A_6 (chi-square, 10^6 draws)") {
  for (Parity parity : {Parity::any, Parity::even}) {
    Rng rng(derive_seed(6, parity == Parity::any ? 0 : 1));
    std::map<std::vector<std::uint32_t>, std::uint64_t> counts;
    const std::uint64_t draws = 1'000'000;
    for (std::uint64_t i = 0; i < draws; ++i) {
      const auto g = sample_uniform(6, parity, rng);
      ++counts[{g.images().begin(), g.images().end()}];
    }
    const std::size_t cells = parity == Parity::any ? 720 : 360;
    REQUIRE(counts.size() == cells);
    const double expected = double(draws) / cells;
    double chi2 = 0;
    for (const auto& [perm, c] : counts) chi2 += (c - expected) * (c - expected) / expected;
    boost::math::chi_squared dist(double(cells - 1));
    CHECK(chi2 < boost::math::quantile(boost::math::complement(dist, 1e-3)));
  }
}

TEST_CASE("sample_uniform errors") {
  Rng rng(1);
  CHECK_THROWS_AS(sample_uniform(0, Parity::any, rng), ppc::invalid_argument);
  CHECK_THROWS_AS(sample_uniform(2, Parity::even, rng), ppc::invalid_argument);
  CHECK_THROWS_AS(sample_uniform(Permutation::kMaxDegree + 1, Parity::any, rng), ppc::invalid_argument);
}

TEST_CASE("permutation text forms") {
  const auto g = parse_one_line("2 3 1 5 4");
  CHECK(to_cycle_string(g) == "(1,2,3)(4,5)");
  CHECK(to_one_line_string(g) == "2 3 1 5 4");
  CHECK(parse_cycles(to_cycle_string(g), 5) == g);
  CHECK(parse_cycles("(1)(2,3)", 3) == parse_cycles("(2,3)", 3));
  CHECK(to_cycle_string(Permutation::identity(3)) == "()");
  CHECK_THROWS_AS(parse_cycles("(1,2)(2,3)", 3), ppc::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(1,4)", 3), ppc::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(1,2", 3), ppc::invalid_argument);
  CHECK_THROWS_AS(parse_one_line("1 1 2"), ppc::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_zero_based({0, 2}), ppc::invalid_argument);
}

TEST_CASE("groups") {
  CHECK(parse_group("sym") == Group::sym);
  CHECK(parse_group("A") == Group::alt);
  CHECK(to_string(Group::alt) == "alt");
  CHECK_THROWS_AS(parse_group("cyclic"), ppc::invalid_argument);
}
