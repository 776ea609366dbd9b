#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ppc/exact.hpp"
#include "ppc/primes.hpp"
#include "ppc/rational.hpp"

namespace ppc {

namespace constants {
/// Euler-Mascheroni constant, 30 significant digits (truncated).
inline constexpr std::string_view kEulerGamma = "0.577215664901532860606512090082";
/// Meissel-Mertens constant, 30 significant digits (truncated).
inline constexpr std::string_view kMeisselMertens = "0.261497212847642783755426838608";
}  // namespace constants

/// Closed double interval [lo, hi].
struct Interval {
  double lo = 0;
  double hi = 0;
};

/// Outward-rounded enclosure of a truncated decimal constant: the true value
/// lies in [digits, digits + 10^-places], widened to the nearest doubles.
Interval decimal_constant(std::string_view digits);
Interval euler_gamma();
Interval meissel_mertens();

/// Result of checking one named inequality.
struct BoundReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> inputs;
  double lhs = 0;
  double rhs = 0;                 ///< upper side, or the lower end of a two-sided range
  std::optional<double> rhs_hi;   ///< upper end when the check is lo < lhs < hi
  bool holds = false;
  /// Distance to violation (negative when violated).
  double margin = 0;
  /// True when the double evaluation was too close to call and a higher
  /// precision re-evaluation decided the result.
  bool refined = false;
};

struct AvoidanceBounds {
  double erdos_turan;  ///< 1/mu
  double ford;         ///< e^{1-mu}
  double improved;     ///< e^{gamma-mu}
};

/// Throws ppc::invalid_argument for mu <= 0.
AvoidanceBounds avoidance_bounds(double mu);

struct LemmaSumBounds {
  /// 2.22/(fa log fa) - 1.61/(fb log fb) with fa = floor(a), fb = floor(b);
  /// absent unless 12 <= a.
  std::optional<double> l2_rhs;
  /// Two-sided bounds on sum 1/p over (a, b]; absent unless 2 <= a.
  std::optional<double> l3_lo;
  std::optional<double> l3_hi;
};

/// Throws ppc::invalid_argument if a > b.
LemmaSumBounds lemma_sum_bounds(double a, double b);

/// Lower bound on the window pre-p-cycle proportion for the window (a, a^d]:
///   1 - 2.287 delta/d - 2.22(log n - 1)/(fa log fa) - 4.4 delta log n/(a log a n).
/// May be negative. Throws ppc::invalid_argument naming the violated
/// hypothesis unless a >= 12, d > 1, a^d <= n, delta in {1, 2}.
double p9_lower_bound(std::uint64_t n, double a, double d, int delta);

struct HeadlineBounds {
  double thm1 = 0;        ///< 1 - c/log log n with c = 5 (sym) or 7 (alt)
  double thm1_sharp = 0;  ///< same with the sharper c = 4.6 or 6.9
  double thm9 = 0;        ///< 1 - (4.58 delta + 0.17) log log n / log(n - 3)
  /// n < e^12: the bounds are evaluated but not asserted.
  bool below_threshold = false;
  bool thm1_vacuous = false;
  bool thm9_vacuous = false;
};

/// Throws ppc::invalid_argument for n < 16 or delta outside {1, 2}.
HeadlineBounds headline_bounds(std::uint64_t n, int delta);
/// Same, for n given by its natural log (n may be astronomically large).
HeadlineBounds headline_bounds_from_log(double log_n, int delta);

/// Smallest m >= 0 with (1 - c0)^m <= epsilon. Throws ppc::invalid_argument
/// unless 0 < epsilon <= 1 and 0 < c0 < 1.
std::uint64_t sample_count(double epsilon, double c0);

/// E(n) = H_n - log n - gamma in extended precision.
long double harmonic_error(std::uint64_t n);

/// Checks exact avoid(group) < f e^{gamma - mu} (f = 1 for sym, 2 for alt)
/// by comparing the rational against an outward-rounded lower bound of the
/// right-hand side.
BoundReport check_avoidance_bound(const ForbiddenSet& forbidden, Group group);

/// e^{gamma-mu} < e^{1-mu}, and e^{gamma-mu} < 2/(3 mu) when mu >= 1.
BoundReport check_bound_dominance(double mu);

BoundReport check_pi_bounds(const PrimeTable& table, std::uint64_t x);
/// sum_{a<p<=b} 1/p^2 <= l2_rhs(a, b); requires 12 <= a <= b <= limit.
BoundReport check_lemma_recip_sq(const PrimeTable& table, std::uint64_t a, std::uint64_t b);
/// l3_lo < sum_{a<p<=b} 1/p < l3_hi; requires 2 <= a <= b <= limit.
BoundReport check_lemma_recip(const PrimeTable& table, std::uint64_t a, std::uint64_t b);
/// 0 < E(n) < 1/(2n).
BoundReport check_harmonic_error(std::uint64_t n);

/// Aggregate of a family of checks.
struct GridSummary {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::uint64_t refined = 0;
  std::optional<BoundReport> tightest;        ///< smallest margin seen
  std::vector<BoundReport> failing;           ///< first few failures
};

GridSummary verify_pi_bounds_range(const PrimeTable& table, std::uint64_t x_lo,
                                   std::uint64_t x_hi);
/// All integer pairs a_min <= a <= b <= grid_max, plus `random_pairs` pairs
/// drawn uniformly with a_min <= a <= b <= random_max from `seed`.
GridSummary verify_lemma_recip_sq_grid(const PrimeTable& table, std::uint64_t grid_max,
                                       std::uint64_t random_pairs, std::uint64_t random_max,
                                       std::uint64_t seed);
GridSummary verify_lemma_recip_grid(const PrimeTable& table, std::uint64_t grid_max,
                                    std::uint64_t random_pairs, std::uint64_t random_max,
                                    std::uint64_t seed);
GridSummary verify_harmonic_range(std::uint64_t n_max);

/// pi0(n) = sum of 1/p over n/2 < p <= n - 3 (empty when n - 3 < n/2).
double pi0(const PrimeTable& table, std::uint64_t n);
Rational pi0_exact(const PrimeTable& table, std::uint64_t n);

struct R2Exception {
  std::uint64_t n;
  Rational pi0;
};

struct R2Report {
  std::uint64_t n_min = 5;
  std::uint64_t n_max = 0;
  std::vector<R2Exception> exceptions;  ///< every n with pi0(n) < 1/19, ascending
  double min_pi0 = 0;
  std::uint64_t argmin = 0;
  /// Minimum over n >= 11 (the range where no exceptions are expected).
  double min_pi0_from_11 = 0;
  std::uint64_t argmin_from_11 = 0;
  std::uint64_t refined = 0;  ///< values decided by exact rational recomputation
};

/// Sweeps 5 <= n <= n_max comparing pi0(n) with 1/19. Work is split into
/// contiguous n-ranges across `threads` workers and merged in order.
/// Throws ppc::out_of_range if n_max exceeds the table.
R2Report r2_sweep(const PrimeTable& table, std::uint64_t n_max, unsigned threads = 1);

}  // namespace ppc
