#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <vector>

#include "ppc/errors.hpp"
#include "ppc/oracle.hpp"
#include "ppc/primes.hpp"
#include "ppc/rng.hpp"

using namespace ppc;

namespace {

const PrimeTable& table_1e6() {
  static const PrimeTable t = build_sieve(1'000'000);
  return t;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("ppc_test_" + name);
}

std::vector<char> slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void spit(const std::filesystem::path& p, const std::vector<char>& bytes) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace

TEST_CASE("small sieves") {
  const auto t10 = build_sieve(10);
  CHECK(t10.primes_in(0, 10) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(t10.pi(10) == 4);
  const auto t2 = build_sieve(2);
  CHECK(t2.primes_in(0, 2) == std::vector<std::uint64_t>{2});
  CHECK(t2.pi(2) == 1);
  CHECK(t2.pi(1) == 0);
  CHECK_THROWS_AS(build_sieve(1), ppc::invalid_argument);
  CHECK_THROWS_AS(t10.pi(11), ppc::out_of_range);
}

TEST_CASE("pi(10^6) against a segmented sieve") {
  CHECK(table_1e6().pi(1'000'000) == 78498);
  CHECK(oracle::segmented_prime_count(1'000'000) == 78498);
  for (std::uint64_t x : {1ULL, 2ULL, 97ULL, 7919ULL, 65536ULL, 999983ULL})
    CHECK(table_1e6().pi(x) == oracle::segmented_prime_count(x));
}

TEST_CASE("is_prime agrees with trial division") {
  const auto t = build_sieve(20'000);
  for (std::uint64_t x = 0; x <= 20'000; ++x) CHECK(t.is_prime(x) == is_prime_trial(x));
}

TEST_CASE("sum_recip examples") {
  const auto& t = table_1e6();
  CHECK(sum_recip(t, 2, 10) == doctest::Approx(1.0 / 3 + 1.0 / 5 + 1.0 / 7).epsilon(1e-15));
  CHECK(sum_recip(t, 5, 5) == 0.0);
  CHECK(sum_recip(t, 1, 2) == 0.5);
  // real end points act through their floors
  CHECK(sum_recip(t, 2.9, 10.99) == sum_recip(t, 2, 10));
  CHECK(sum_recip(t, 0, 1) == 0.0);
}

TEST_CASE("sum_recip_sq examples") {
  const auto& t = table_1e6();
  CHECK(sum_recip_sq(t, 2, 3) == doctest::Approx(1.0 / 9).epsilon(1e-15));
  CHECK(sum_recip_sq(t, 12, 12) == 0.0);
  CHECK(t.primes_in(12, 100).size() == 20);
  CHECK(sum_recip_sq(t, 12, 100) == doctest::Approx(0.02064505107741786).epsilon(1e-13));
}

TEST_CASE("sum range errors") {
  const auto t = build_sieve(100);
  CHECK_THROWS_AS(sum_recip(t, 10, 101), ppc::out_of_range);
  CHECK_THROWS_AS(sum_recip(t, 10, 5), ppc::invalid_argument);
  CHECK_THROWS_AS(sum_recip_sq(t, -1, 5), ppc::invalid_argument);
}

TEST_CASE("pi bounds examples") {
  const auto& t = table_1e6();
  CHECK(verify_pi_bounds(t, 11));
  CHECK(verify_pi_bounds(t, 100));
  CHECK(t.pi(100) == 25);
  CHECK_THROWS_AS(verify_pi_bounds(t, 10), ppc::invalid_argument);
  CHECK_THROWS_AS(verify_pi_bounds(t, 1'000'001), ppc::out_of_range);
}

TEST_CASE("prefix sums stay within their budget of the exact sums") {
  const auto& t = table_1e6();
  Rng rng(derive_seed(11, 0));
  for (int i = 0; i < 50; ++i) {
    std::uint64_t a = uniform_below(rng, 200'000);
    std::uint64_t b = uniform_below(rng, 200'000);
    if (a > b) std::swap(a, b);
    const double exact1 = to_double(exact_sum_recip(t, a, b));
    const double exact2 = to_double(exact_sum_recip_sq(t, a, b));
    const double budget = t.summation_budget(b) + t.summation_budget(a) + 1e-16;
    CHECK(std::abs(sum_recip(t, double(a), double(b)) - exact1) <= budget);
    CHECK(std::abs(sum_recip_sq(t, double(a), double(b)) - exact2) <= budget);
  }
}

TEST_CASE("exact and float reciprocal sums agree for n <= 10^4") {
  const auto t = build_sieve(10'000);
  Rational running = 0;
  double worst = 0;
  for (std::uint64_t n = 2; n <= 10'000; ++n) {
    if (t.is_prime(n)) running += Rational(1, n);
    if (n % 97 == 0 || n == 10'000) {
      CHECK(exact_sum_recip(t, 0, n) == running);
      worst = std::max(worst, std::abs(t.s1(n) - to_double(running)));
    }
  }
  CHECK(worst < 1e-10);
  CHECK(exact_sum_recip(t, 0, 10'000) == oracle::prime_reciprocal_sum(0, 10'000));
}

TEST_CASE("sieve cache round-trips") {
  const auto path = temp_file("roundtrip.bin");
  const auto t = build_sieve(5000);
  t.save(path);
  const auto u = PrimeTable::load(path);
  CHECK(u.limit() == 5000);
  for (std::uint64_t x = 0; x <= 5000; ++x) {
    CHECK(u.pi(x) == t.pi(x));
    CHECK(u.s1(x) == t.s1(x));
    CHECK(u.s2(x) == t.s2(x));
  }
  const auto v = build_or_load_sieve(4000, path);
  CHECK(v.limit() == 5000);
  const auto w = build_or_load_sieve(6000, path);
  CHECK(w.limit() == 6000);
  CHECK(PrimeTable::load(path).limit() == 6000);
  std::filesystem::remove(path);
}

TEST_CASE("corrupted sieve caches are rejected") {
  const auto path = temp_file("corrupt.bin");
  build_sieve(5000).save(path);
  const auto good = slurp(path);

  SUBCASE("bad magic") {
    auto bytes = good;
    bytes[0] = 'X';
    spit(path, bytes);
  }
  SUBCASE("flipped bitset bit") {
    auto bytes = good;
    bytes[5 + 8 + 3] ^= 0x04;
    spit(path, bytes);
  }
  SUBCASE("truncated") {
    auto bytes = good;
    bytes.resize(bytes.size() - 3);
    spit(path, bytes);
  }
  SUBCASE("trailing garbage") {
    auto bytes = good;
    bytes.push_back(0);
    spit(path, bytes);
  }
  SUBCASE("perturbed prefix sum") {
    auto bytes = good;
    bytes[bytes.size() - 1] ^= 0x40;
    spit(path, bytes);
  }
  CHECK_THROWS_AS(PrimeTable::load(path), ppc::invalid_argument);
  // build_or_load recovers by rebuilding
  CHECK(build_or_load_sieve(5000, path).pi(5000) == 669);
  std::filesystem::remove(path);
}
