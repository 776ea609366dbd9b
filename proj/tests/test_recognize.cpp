#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "ppc/errors.hpp"
#include "ppc/oracle.hpp"
#include "ppc/recognize.hpp"

using namespace ppc;

namespace {

std::vector<Permutation> powers_of_cycle(std::uint32_t n) {
  std::vector<std::uint32_t> c(n);
  for (std::uint32_t i = 0; i < n; ++i) c[i] = (i + 1) % n;
  std::vector<Permutation> out;
  for (std::uint64_t e = 0; e < n; ++e) out.push_back(Permutation::from_zero_based(oracle::power(c, e)));
  return out;
}

}  // namespace

TEST_CASE("uniform S_20 finds a verified witness") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    UniformGroupSource source(20, Group::sym, seed);
    const auto out = run_recognizer(source, 0.01, 1.0 / 19);
    CHECK(out.budget == 86);
    CHECK(out.range.lo == 2);
    CHECK(out.range.hi == 17);
    if (!out.found()) continue;
    oracle::Perm g(out.element->images().begin(), out.element->images().end());
    const auto w = oracle::power(g, out.exponent.get_ui());
    CHECK(oracle::single_cycle_length(w) == out.prime);
    CHECK(oracle::is_prime(out.prime));
    CHECK(out.statement().find("found a pre-" + std::to_string(out.prime) + "-cycle") == 0);
  }
}

TEST_CASE("powers of a 20-cycle never yield a witness") {
  const auto powers = powers_of_cycle(20);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    ListSource source(powers, seed);
    const auto out = run_recognizer(source, 0.01, 1.0 / 19);
    CHECK(!out.found());
    CHECK(out.draws_used == 86);
    CHECK(out.statement() == "no pre-p-cycle found in 86 draws");
  }
}

TEST_CASE("identity source") {
  ListSource source({Permutation::identity(9)}, 3);
  const auto out = run_recognizer(source, 0.01);
  CHECK(!out.found());
  CHECK(out.draws_used == out.budget);
}

TEST_CASE("prime range is clamped to [2, n - 3]") {
  UniformGroupSource source(12, Group::alt, 5);
  const auto out = run_recognizer(source, 0.05, 0.1, PrimeRange{5, 100});
  CHECK(out.range.lo == 5);
  CHECK(out.range.hi == 9);
  if (out.found()) CHECK((out.prime == 5 || out.prime == 7));
}

TEST_CASE("replay sources") {
  const auto path = std::filesystem::temp_directory_path() / "ppc_test_replay.txt";
  {
    std::ofstream f(path);
    f << "# two elements of S_7\n\n1 2 3 4 5 6 7\n2 1 4 5 3 6 7\n";
  }
  const auto perms = read_permutation_file(path);
  REQUIRE(perms.size() == 2);
  auto source = ReplaySource::from_file(path);
  const auto out = run_recognizer(source, 0.25, 0.5);
  CHECK(out.found());
  CHECK(out.draws_used == 2);
  CHECK(out.prime == 2);
  CHECK(out.exponent == 3);
  CHECK(out.witness == parse_cycles("(1,2)", 7));

  ReplaySource short_source({Permutation::identity(7)});
  CHECK_THROWS_AS(run_recognizer(short_source, 0.01), ppc::source_error);

  {
    std::ofstream f(path);
    f << "1 2 3\n1 2\n";
  }
  CHECK_THROWS_AS(read_permutation_file(path), ppc::invalid_argument);
  std::filesystem::remove(path);
}

TEST_CASE("recognizer preconditions") {
  UniformGroupSource small(6, Group::sym, 1);
  CHECK_THROWS_AS(run_recognizer(small, 0.01), ppc::invalid_argument);
  UniformGroupSource ok(9, Group::sym, 1);
  CHECK_THROWS_AS(run_recognizer(ok, 0.0), ppc::invalid_argument);
  CHECK_THROWS_AS(run_recognizer(ok, 1.0), ppc::invalid_argument);
  CHECK_THROWS_AS(run_recognizer(ok, 0.1, 0.0), ppc::invalid_argument);
  CHECK_THROWS_AS(ListSource({}, 1), ppc::invalid_argument);
}
