#include "ppc/partitions.hpp"

#include <vector>

#include "ppc/errors.hpp"

namespace ppc {

namespace {

struct Sweep {
  std::uint64_t n;
  const std::function<void(const PartitionTerm&)>& visit;
  BigInt n_factorial;
  // factor[k][m] = k^m * m!
  std::vector<std::vector<BigInt>> factor;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> parts;
  BigInt class_size;

  void run(std::uint64_t remaining, std::uint64_t max_part, const BigInt& centralizer,
           std::uint64_t transpositions) {
    if (remaining == 0) {
      mpz_divexact(class_size.get_mpz_t(), n_factorial.get_mpz_t(), centralizer.get_mpz_t());
      visit(PartitionTerm{parts, centralizer, class_size, transpositions % 2 == 0 ? 1 : -1});
      return;
    }
    for (std::uint64_t k = std::min(max_part, remaining); k >= 1; --k) {
      const std::uint64_t max_mult = remaining / k;
      // Part 1 must absorb everything that is left.
      const std::uint64_t min_mult = k == 1 ? max_mult : 1;
      for (std::uint64_t m = max_mult; m >= min_mult; --m) {
        parts.emplace_back(k, m);
        run(remaining - k * m, k - 1, centralizer * factor[k][m], transpositions + (k - 1) * m);
        parts.pop_back();
      }
    }
  }
};

}  // namespace

void for_each_partition(std::uint64_t n, const std::function<void(const PartitionTerm&)>& visit) {
  if (n > 10'000) throw capacity_error("partition enumeration beyond n = 10000 is not supported");
  Sweep sweep{n, visit, factorial(n), {}, {}, {}};
  sweep.factor.resize(n + 1);
  for (std::uint64_t k = 1; k <= n; ++k) {
    auto& row = sweep.factor[k];
    row.resize(n / k + 1);
    row[0] = 1;
    for (std::uint64_t m = 1; m <= n / k; ++m) row[m] = row[m - 1] * k * m;
  }
  if (n == 0) {
    const BigInt one = 1;
    visit(PartitionTerm{{}, one, one, 1});
    return;
  }
  sweep.run(n, n, BigInt(1), 0);
}

BigInt partition_count(std::uint64_t n) {
  std::vector<BigInt> p(n + 1);
  p[0] = 1;
  for (std::uint64_t m = 1; m <= n; ++m) {
    BigInt total = 0;
    for (std::int64_t j = 1;; ++j) {
      const std::int64_t g1 = j * (3 * j - 1) / 2;
      if (g1 > static_cast<std::int64_t>(m)) break;
      const std::int64_t g2 = j * (3 * j + 1) / 2;
      const BigInt term = p[m - g1] + (g2 <= static_cast<std::int64_t>(m) ? p[m - g2] : BigInt(0));
      if (j % 2 == 1)
        total += term;
      else
        total -= term;
    }
    p[m] = total;
  }
  return p[n];
}

}  // namespace ppc
