#include "ppc/exact.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ppc/errors.hpp"
#include "ppc/partitions.hpp"

namespace ppc {

namespace {

void check_group_degree(std::uint64_t n, Group group) {
  if (group == Group::alt && n < 2)
    throw invalid_argument("alternating-group proportions require n >= 2");
}

void check_enumeration(std::uint64_t n, std::uint64_t bound) {
  if (n > bound)
    throw capacity_error("n = " + std::to_string(n) + " exceeds the exact enumeration bound " +
                         std::to_string(bound) + "; use the Monte Carlo estimator instead");
}

void require_prime(std::uint64_t p) {
  if (!is_prime_trial(p)) throw invalid_argument(std::to_string(p) + " is not prime");
}

/// count / |G|, where count is a number of elements of G.
ExactProb proportion(const BigInt& count, std::uint64_t n, Group group) {
  BigInt order = factorial(n);
  if (group == Group::alt) order /= 2;
  Rational r(count, order);
  r.canonicalize();
  return ExactProb(r);
}

}  // namespace

ForbiddenSet::ForbiddenSet(std::uint64_t n, std::set<std::uint64_t> members)
    : n_(n), members_(std::move(members)), mu_(0) {
  for (std::uint64_t a : members_) {
    if (a < 1 || a > n_)
      throw invalid_argument("forbidden length " + std::to_string(a) + " outside {1.." +
                             std::to_string(n_) + "}");
    mu_ += Rational(1, a);
  }
  mu_.canonicalize();
}

PrimeWindow PrimeWindow::interval(double lo, double hi) {
  if (!(lo <= hi)) throw invalid_argument("prime window requires lo <= hi");
  PrimeWindow w;
  w.lo_ = lo;
  w.hi_ = hi;
  const double first = std::max(0.0, std::floor(lo) + 1);
  for (double x = first; x <= hi; x += 1) {
    const auto k = static_cast<std::uint64_t>(x);
    if (static_cast<double>(k) > lo && is_prime_trial(k)) w.primes_.push_back(k);
  }
  return w;
}

PrimeWindow PrimeWindow::interval(double lo, double hi, const PrimeTable& table) {
  if (!(lo <= hi)) throw invalid_argument("prime window requires lo <= hi");
  if (hi < 0 || std::floor(hi) > static_cast<double>(table.limit()))
    throw out_of_range("prime window upper end exceeds sieve limit");
  PrimeWindow w;
  w.lo_ = lo;
  w.hi_ = hi;
  const auto lo_index = static_cast<std::uint64_t>(std::max(0.0, std::floor(lo)));
  w.primes_ = table.primes_in(lo_index, static_cast<std::uint64_t>(std::floor(hi)));
  return w;
}

PrimeWindow PrimeWindow::from_primes(std::vector<std::uint64_t> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (std::uint64_t p : primes) require_prime(p);
  PrimeWindow w;
  if (!primes.empty()) {
    w.lo_ = static_cast<double>(primes.front()) - 1;
    w.hi_ = static_cast<double>(primes.back());
  }
  w.primes_ = std::move(primes);
  return w;
}

bool PrimeWindow::contains(std::uint64_t p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

BigInt centralizer_order(const CycleType& t) {
  BigInt c = 1;
  for (const auto& [part, mult] : t.parts()) {
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), part, mult);
    c *= pw * factorial(mult);
  }
  return c;
}

ExactProb avoid_proportion(const ForbiddenSet& forbidden, Group group) {
  const std::uint64_t n = forbidden.degree();
  check_group_degree(n, group);
  if (n > kRecurrenceBound)
    throw capacity_error("avoid_proportion supports n <= " + std::to_string(kRecurrenceBound));
  // c[m] = m! q_m counts permutations of S_m avoiding A; signed[m] weights each
  // by its sign. Recurrence: c_m = sum_{j=1}^{m} p_j c_{m-j} (m-1)!/(m-j)!.
  std::vector<BigInt> c(n + 1);
  std::vector<BigInt> signed_c(n + 1);
  c[0] = 1;
  signed_c[0] = 1;
  BigInt falling;
  for (std::uint64_t m = 1; m <= n; ++m) {
    BigInt total = 0;
    BigInt signed_total = 0;
    falling = 1;
    for (std::uint64_t j = 1; j <= m; ++j) {
      if (!forbidden.contains(j)) {
        total += c[m - j] * falling;
        if (j % 2 == 1)
          signed_total += signed_c[m - j] * falling;
        else
          signed_total -= signed_c[m - j] * falling;
      }
      falling *= (m - j);
    }
    c[m] = std::move(total);
    signed_c[m] = std::move(signed_total);
  }
  if (group == Group::sym) return proportion(c[n], n, Group::sym);
  // Even elements number (c + signed_c)/2; over |A_n| = n!/2.
  return proportion((c[n] + signed_c[n]) / 2, n, Group::alt);
}

ExactProb avoid_proportion_by_sweep(const ForbiddenSet& forbidden, Group group,
                                    std::uint64_t bound) {
  const std::uint64_t n = forbidden.degree();
  check_group_degree(n, group);
  check_enumeration(n, bound);
  BigInt count = 0;
  for_each_partition(n, [&](const PartitionTerm& term) {
    if (group == Group::alt && term.sign < 0) return;
    for (const auto& [part, mult] : term.parts)
      if (forbidden.contains(part)) return;
    count += term.class_size;
  });
  return proportion(count, n, group);
}

ExactProb sigma_pprime(std::uint64_t m, std::uint64_t p) {
  require_prime(p);
  Rational r = 1;
  for (std::uint64_t i = 1; i <= m / p; ++i) r *= Rational(i * p - 1, i * p);
  r.canonicalize();
  return ExactProb(r);
}

ExactProb pre_p_density(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  if (p > n) throw invalid_argument("pre-p-cycle density requires p <= n");
  Rational r = sigma_pprime(n - p, p).value() / p;
  r.canonicalize();
  return ExactProb(r);
}

namespace {

struct WindowCounts {
  BigInt pre_cycle = 0;
  BigInt in_t = 0;
  BigInt in_u = 0;
};

WindowCounts sweep_window(std::uint64_t n, const PrimeWindow& window, Group group,
                          std::uint64_t bound) {
  check_group_degree(n, group);
  check_enumeration(n, bound);
  for (std::uint64_t p : window.primes())
    if (p > n) throw invalid_argument("window prime " + std::to_string(p) + " exceeds n");
  WindowCounts counts;
  if (window.empty()) return counts;
  for_each_partition(n, [&](const PartitionTerm& term) {
    if (group == Group::alt && term.sign < 0) return;
    bool pre = false;
    bool t = false;
    bool u = false;
    for (std::uint64_t p : window.primes()) {
      if (multiplicity_of(term.parts, p) == 0) continue;
      t = true;
      if (multiples_count(term.parts, p) >= 2)
        u = true;
      else
        pre = true;  // m_p = 1 and no other multiple of p
    }
    if (pre) counts.pre_cycle += term.class_size;
    if (t) counts.in_t += term.class_size;
    if (u) counts.in_u += term.class_size;
  });
  return counts;
}

}  // namespace

ExactProb window_proportion(std::uint64_t n, const PrimeWindow& window, Group group,
                            std::uint64_t bound) {
  return proportion(sweep_window(n, window, group, bound).pre_cycle, n, group);
}

TUProportions exact_TU(std::uint64_t n, const PrimeWindow& window, Group group,
                       std::uint64_t bound) {
  const WindowCounts counts = sweep_window(n, window, group, bound);
  return {proportion(counts.in_t, n, group), proportion(counts.in_u, n, group)};
}

ExactProb cycle_proportion(std::uint64_t n) {
  if (n < 2) throw invalid_argument("cycle proportion requires n >= 2");
  if (n > kRecurrenceBound)
    throw capacity_error("cycle_proportion supports n <= " + std::to_string(kRecurrenceBound));
  // sum_{k=2}^n 1/(k (n-k)!) = (1/n!) sum_k n!/(k (n-k)!)
  const BigInt nf = factorial(n);
  BigInt count = 0;
  for (std::uint64_t k = 2; k <= n; ++k) count += nf / (factorial(n - k) * k);
  Rational r(count, nf);
  r.canonicalize();
  return ExactProb(r);
}

Rational partition_weight_total(std::uint64_t n, std::uint64_t bound) {
  check_enumeration(n, bound);
  Rational total = 0;
  for_each_partition(n, [&](const PartitionTerm& term) { total += Rational(1, term.centralizer); });
  total.canonicalize();
  return total;
}

}  // namespace ppc
