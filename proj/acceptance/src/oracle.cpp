#include "ppc/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace ppc::oracle {

Perm compose(const Perm& first, const Perm& then) {
  Perm out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = then[first[i]];
  return out;
}

Perm power(const Perm& g, std::uint64_t e) {
  Perm result(g.size());
  std::iota(result.begin(), result.end(), 0u);
  Perm base = g;
  while (e > 0) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

bool is_identity(const Perm& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] != i) return false;
  return true;
}

std::vector<std::uint64_t> cycle_lengths(const Perm& g) {
  std::vector<bool> seen(g.size(), false);
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    std::size_t j = i;
    do {
      seen[j] = true;
      j = g[j];
      ++len;
    } while (j != i);
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int sign_by_inversions(const Perm& g) {
  std::uint64_t inversions = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g[i] > g[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::uint64_t single_cycle_length(const Perm& g) {
  std::uint64_t moved = 0;
  std::size_t start = g.size();
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] != i) {
      ++moved;
      if (start == g.size()) start = i;
    }
  if (moved < 2) return 0;
  std::uint64_t len = 0;
  std::size_t j = start;
  do {
    j = g[j];
    ++len;
  } while (j != start);
  return len == moved ? len : 0;
}

std::vector<Element> enumerate_symmetric(std::uint32_t n) {
  std::vector<Element> out;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  do {
    Element e;
    e.perm = p;
    e.lengths = cycle_lengths(p);
    e.sign = sign_by_inversions(p);
    Perm q = p;
    while (!is_identity(q)) {
      if (const auto k = single_cycle_length(q)) e.powers_to.insert(k);
      q = compose(q, p);
    }
    out.push_back(std::move(e));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k <= n; ++k)
    if (is_prime(k)) out.push_back(k);
  return out;
}

std::uint64_t segmented_prime_count(std::uint64_t limit) {
  if (limit < 2) return 0;
  std::uint64_t root = 1;
  while ((root + 1) * (root + 1) <= limit) ++root;
  const std::vector<std::uint64_t> base = primes_up_to(root);
  constexpr std::uint64_t kBlock = 1 << 15;
  std::uint64_t count = 0;
  std::vector<char> composite(kBlock);
  for (std::uint64_t lo = 2; lo <= limit; lo += kBlock) {
    const std::uint64_t hi = std::min(limit, lo + kBlock - 1);
    std::fill(composite.begin(), composite.end(), 0);
    for (std::uint64_t p : base) {
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::uint64_t m = start; m <= hi; m += p) composite[m - lo] = 1;
    }
    for (std::uint64_t x = lo; x <= hi; ++x)
      if (!composite[x - lo]) ++count;
  }
  return count;
}

mpq_class derangement_series(std::uint64_t n) {
  mpq_class total = 0;
  mpz_class fact = 1;
  for (std::uint64_t k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    mpq_class term(1, 1);
    term /= fact;
    if (k % 2 == 1) total -= term;
    else total += term;
  }
  total.canonicalize();
  return total;
}

mpq_class prime_reciprocal_sum(std::uint64_t lo, std::uint64_t hi) {
  mpq_class total = 0;
  for (std::uint64_t p = lo + 1; p <= hi; ++p)
    if (is_prime(p)) total += mpq_class(1, p);
  total.canonicalize();
  return total;
}

}  // namespace ppc::oracle
