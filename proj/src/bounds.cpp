#include "ppc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ppc/compensated_sum.hpp"
#include "ppc/errors.hpp"
#include "ppc/rng.hpp"

namespace ppc {

namespace {

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

constexpr double kNearMargin = 1e-9;

double down(double x, int ulps = 1) {
  for (int i = 0; i < ulps; ++i) x = std::nextafter(x, -HUGE_VAL);
  return x;
}

double up(double x, int ulps = 1) {
  for (int i = 0; i < ulps; ++i) x = std::nextafter(x, HUGE_VAL);
  return x;
}

HighPrecision to_high(const Rational& r) {
  return HighPrecision(r.get_num().get_str()) / HighPrecision(r.get_den().get_str());
}

HighPrecision high_constant(std::string_view digits) { return HighPrecision(std::string(digits)); }

/// Sum of p^-power over primes in (a, b], at 50 significant digits.
HighPrecision high_prime_sum(const PrimeTable& table, std::uint64_t a, std::uint64_t b, int power) {
  HighPrecision total = 0;
  for (std::uint64_t p = a + 1; p <= b; ++p) {
    if (!table.is_prime(p)) continue;
    HighPrecision hp(p);
    total += power == 1 ? 1 / hp : 1 / (hp * hp);
  }
  return total;
}

std::string fmt_u64(std::uint64_t v) { return std::to_string(v); }

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Evaluation {
  double lhs = 0;
  double rhs = 0;
  std::optional<double> rhs_hi;
  bool holds = false;
  double margin = 0;
  bool refined = false;
};

BoundReport make_report(std::string name, std::vector<std::pair<std::string, std::string>> inputs,
                        const Evaluation& e) {
  BoundReport r;
  r.name = std::move(name);
  r.inputs = std::move(inputs);
  r.lhs = e.lhs;
  r.rhs = e.rhs;
  r.rhs_hi = e.rhs_hi;
  r.holds = e.holds;
  r.margin = e.margin;
  r.refined = e.refined;
  return r;
}

void require_delta(int delta) {
  if (delta != 1 && delta != 2) throw invalid_argument("delta must be 1 (S_n) or 2 (A_n)");
}

double l2_rhs_value(std::uint64_t fa, std::uint64_t fb) {
  const double a = static_cast<double>(fa);
  const double b = static_cast<double>(fb);
  return 2.22 / (a * std::log(a)) - 1.61 / (b * std::log(b));
}

Evaluation eval_pi_bounds(const PrimeTable& table, std::uint64_t x) {
  Evaluation e;
  const double count = static_cast<double>(table.pi(x));
  const double xd = static_cast<double>(x);
  const double log_x = std::log(xd);
  e.lhs = count;
  e.rhs = xd / log_x;
  e.rhs_hi = e.rhs * (1.0 + 1.5 / log_x);
  e.margin = std::min(count - e.rhs, *e.rhs_hi - count);
  e.holds = e.margin >= 0;
  if (std::abs(e.margin) < kNearMargin) {
    e.refined = true;
    e.holds = verify_pi_bounds(table, x);
  }
  return e;
}

Evaluation eval_lemma_recip_sq(const PrimeTable& table, std::uint64_t a, std::uint64_t b) {
  Evaluation e;
  e.lhs = table.s2(b) - table.s2(a);
  e.rhs = l2_rhs_value(a, b);
  e.margin = e.rhs - e.lhs;
  e.holds = e.margin >= 0;
  if (std::abs(e.margin) < kNearMargin) {
    e.refined = true;
    const HighPrecision ha(a);
    const HighPrecision hb(b);
    const HighPrecision rhs = HighPrecision("2.22") / (ha * log(ha)) -
                              HighPrecision("1.61") / (hb * log(hb));
    e.holds = high_prime_sum(table, a, b, 2) <= rhs;
  }
  return e;
}

Evaluation eval_lemma_recip(const PrimeTable& table, std::uint64_t a, std::uint64_t b) {
  Evaluation e;
  const LemmaSumBounds lb = lemma_sum_bounds(static_cast<double>(a), static_cast<double>(b));
  e.lhs = table.s1(b) - table.s1(a);
  e.rhs = *lb.l3_lo;
  e.rhs_hi = *lb.l3_hi;
  e.margin = std::min(e.lhs - e.rhs, *e.rhs_hi - e.lhs);
  e.holds = e.margin > 0;
  if (std::abs(e.margin) < kNearMargin) {
    e.refined = true;
    const HighPrecision la = log(HighPrecision(a));
    const HighPrecision lb_ = log(HighPrecision(b));
    const HighPrecision core = log(lb_ / la);
    const HighPrecision lo = core - 1 / (2 * lb_ * lb_) - 1 / (la * la);
    const HighPrecision hi = core + 1 / (lb_ * lb_) + 1 / (2 * la * la);
    const HighPrecision sum = high_prime_sum(table, a, b, 1);
    e.holds = lo < sum && sum < hi;
  }
  return e;
}

long double gamma_long() {
  static const long double g = std::strtold(std::string(constants::kEulerGamma).c_str(), nullptr);
  return g;
}

Evaluation eval_harmonic(long double harmonic, std::uint64_t n) {
  Evaluation e;
  const long double err = harmonic - std::log(static_cast<long double>(n)) - gamma_long();
  const long double cap = 1.0L / (2.0L * static_cast<long double>(n));
  e.lhs = static_cast<double>(err);
  e.rhs = 0;
  e.rhs_hi = static_cast<double>(cap);
  const long double margin = std::min(err, cap - err);
  e.margin = static_cast<double>(margin);
  e.holds = margin > 0;
  // Error of the extended evaluation is a few ulps of H_n.
  const long double tolerance = 64 * std::numeric_limits<long double>::epsilon() *
                                (1 + std::log(static_cast<long double>(n)));
  if (std::abs(margin) < tolerance) {
    e.refined = true;
    HighPrecision h = 0;
    for (std::uint64_t k = 1; k <= n; ++k) h += 1 / HighPrecision(k);
    const HighPrecision herr = h - log(HighPrecision(n)) - high_constant(constants::kEulerGamma);
    e.holds = herr > 0 && herr < 1 / (2 * HighPrecision(n));
  }
  return e;
}

void keep_tightest(GridSummary& s, const Evaluation& e, const std::string& name,
                   std::vector<std::pair<std::string, std::string>> (*inputs)(std::uint64_t,
                                                                            std::uint64_t),
                   std::uint64_t a, std::uint64_t b) {
  ++s.checked;
  if (e.refined) ++s.refined;
  if (!e.holds) {
    ++s.failures;
    if (s.failing.size() < 20) s.failing.push_back(make_report(name, inputs(a, b), e));
  }
  if (!s.tightest || e.margin < s.tightest->margin) s.tightest = make_report(name, inputs(a, b), e);
}

std::vector<std::pair<std::string, std::string>> ab_inputs(std::uint64_t a, std::uint64_t b) {
  return {{"a", fmt_u64(a)}, {"b", fmt_u64(b)}};
}

std::vector<std::pair<std::string, std::string>> x_inputs(std::uint64_t x, std::uint64_t) {
  return {{"x", fmt_u64(x)}};
}

std::vector<std::pair<std::string, std::string>> n_inputs(std::uint64_t n, std::uint64_t) {
  return {{"n", fmt_u64(n)}};
}

template <typename Eval>
GridSummary pair_grid(const char* name, const PrimeTable& table, std::uint64_t a_min,
                      std::uint64_t grid_max, std::uint64_t random_pairs,
                      std::uint64_t random_max, std::uint64_t seed, Eval eval) {
  if (grid_max > table.limit() || random_max > table.limit())
    throw out_of_range("lemma grid exceeds sieve limit");
  GridSummary s;
  s.name = name;
  for (std::uint64_t a = a_min; a <= grid_max; ++a)
    for (std::uint64_t b = a; b <= grid_max; ++b) keep_tightest(s, eval(table, a, b), name, ab_inputs, a, b);
  if (random_pairs > 0) {
    if (random_max < a_min) throw invalid_argument("random pair range is empty");
    Rng rng(derive_seed(seed, 0));
    const std::uint64_t span = random_max - a_min + 1;
    for (std::uint64_t i = 0; i < random_pairs; ++i) {
      std::uint64_t a = a_min + uniform_below(rng, span);
      std::uint64_t b = a_min + uniform_below(rng, span);
      if (a > b) std::swap(a, b);
      keep_tightest(s, eval(table, a, b), name, ab_inputs, a, b);
    }
  }
  return s;
}

}  // namespace

Interval decimal_constant(std::string_view digits) {
  const Rational value = parse_rational(digits);
  const auto dot = digits.find('.');
  const std::size_t places = dot == std::string_view::npos ? 0 : digits.size() - dot - 1;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  const Rational ulp(BigInt(1), scale);
  return {double_below(value), double_above(value + ulp)};
}

Interval euler_gamma() {
  static const Interval g = decimal_constant(constants::kEulerGamma);
  return g;
}

Interval meissel_mertens() {
  static const Interval m = decimal_constant(constants::kMeisselMertens);
  return m;
}

AvoidanceBounds avoidance_bounds(double mu) {
  if (!(mu > 0)) throw invalid_argument("mu must be > 0");
  const double gamma = euler_gamma().lo;
  return {1.0 / mu, std::exp(1.0 - mu), std::exp(gamma - mu)};
}

LemmaSumBounds lemma_sum_bounds(double a, double b) {
  if (a > b) throw invalid_argument("lemma bounds require a <= b");
  LemmaSumBounds out;
  if (a >= 12) {
    out.l2_rhs = l2_rhs_value(static_cast<std::uint64_t>(std::floor(a)),
                              static_cast<std::uint64_t>(std::floor(b)));
  }
  if (a >= 2) {
    const double la = std::log(a);
    const double lb = std::log(b);
    const double core = std::log(lb / la);
    out.l3_lo = core - 1.0 / (2.0 * lb * lb) - 1.0 / (la * la);
    out.l3_hi = core + 1.0 / (lb * lb) + 1.0 / (2.0 * la * la);
  }
  return out;
}

double p9_lower_bound(std::uint64_t n, double a, double d, int delta) {
  require_delta(delta);
  if (!(a >= 12)) throw invalid_argument("hypothesis a(n) >= 12 violated");
  if (!(d > 1)) throw invalid_argument("hypothesis d(n) > 1 violated");
  if (!(std::pow(a, d) <= static_cast<double>(n)))
    throw invalid_argument("hypothesis a(n)^d(n) <= n violated");
  const double log_n = std::log(static_cast<double>(n));
  const double fa = std::floor(a);
  const double dl = static_cast<double>(delta);
  return 1.0 - 2.287 * dl / d - 2.22 * (log_n - 1.0) / (fa * std::log(fa)) -
         4.4 * dl * log_n / (a * std::log(a) * static_cast<double>(n));
}

namespace {

HeadlineBounds headline(double log_n, double log_n_minus_3, int delta) {
  require_delta(delta);
  HeadlineBounds h;
  const double lln = std::log(log_n);
  h.thm1 = 1.0 - (delta == 1 ? 5.0 : 7.0) / lln;
  h.thm1_sharp = 1.0 - (delta == 1 ? 4.6 : 6.9) / lln;
  h.thm9 = 1.0 - (4.58 * delta + 0.17) * lln / log_n_minus_3;
  h.below_threshold = log_n < 12.0;
  h.thm1_vacuous = h.thm1 < 0;
  h.thm9_vacuous = h.thm9 < 0;
  return h;
}

}  // namespace

HeadlineBounds headline_bounds(std::uint64_t n, int delta) {
  if (n < 16) throw invalid_argument("headline bounds require n >= 16");
  const double nd = static_cast<double>(n);
  return headline(std::log(nd), std::log(nd - 3.0), delta);
}

HeadlineBounds headline_bounds_from_log(double log_n, int delta) {
  if (!(log_n >= std::log(16.0))) throw invalid_argument("headline bounds require n >= 16");
  const double log_n_minus_3 = log_n + std::log1p(-3.0 * std::exp(-log_n));
  return headline(log_n, log_n_minus_3, delta);
}

std::uint64_t sample_count(double epsilon, double c0) {
  if (!(epsilon > 0 && epsilon <= 1)) throw invalid_argument("epsilon must lie in (0, 1]");
  if (!(c0 > 0 && c0 < 1)) throw invalid_argument("c0 must lie in (0, 1)");
  if (epsilon == 1) return 0;
  const double estimate = std::ceil(std::log(epsilon) / std::log1p(-c0));
  auto m = static_cast<std::uint64_t>(std::max(0.0, estimate));
  const long double base = 1.0L - static_cast<long double>(c0);
  const long double eps = epsilon;
  while (m > 0 && std::pow(base, static_cast<long double>(m - 1)) <= eps) --m;
  while (std::pow(base, static_cast<long double>(m)) > eps) ++m;
  return m;
}

long double harmonic_error(std::uint64_t n) {
  if (n < 1) throw invalid_argument("harmonic error requires n >= 1");
  CompensatedSum<long double> h;
  for (std::uint64_t k = 1; k <= n; ++k) h += 1.0L / static_cast<long double>(k);
  return h.value() - std::log(static_cast<long double>(n)) - gamma_long();
}

BoundReport check_avoidance_bound(const ForbiddenSet& forbidden, Group group) {
  const Rational lhs = avoid_proportion(forbidden, group).value();
  const double factor = group == Group::sym ? 1.0 : 2.0;
  const double mu_hi = double_above(forbidden.mu());
  const double exponent_lo = down(euler_gamma().lo - mu_hi);
  const double rhs_lo = factor * down(std::exp(exponent_lo), 2);

  Evaluation e;
  e.lhs = to_double(lhs);
  e.rhs = rhs_lo;
  e.margin = rhs_lo - e.lhs;
  e.holds = lhs < from_double(rhs_lo);
  if (!e.holds) {
    e.refined = true;
    const HighPrecision rhs = factor * exp(high_constant(constants::kEulerGamma) - to_high(forbidden.mu()));
    e.holds = to_high(lhs) < rhs * (1 - HighPrecision("1e-40"));
  }
  return make_report(group == Group::sym ? "avoid_bound_sym" : "avoid_bound_alt",
                     {{"n", fmt_u64(forbidden.degree())},
                      {"mu", to_fraction_string(forbidden.mu())},
                      {"group", std::string(to_string(group))}},
                     e);
}

BoundReport check_bound_dominance(double mu) {
  if (!(mu > 0)) throw invalid_argument("mu must be > 0");
  const Interval g = euler_gamma();
  const double improved_hi = up(std::exp(up(g.hi - mu)), 2);
  const double ford_lo = down(std::exp(down(1.0 - mu)), 2);
  double rhs = ford_lo;
  if (mu >= 1) rhs = std::min(rhs, down(down(2.0 / 3.0) / mu, 2));
  Evaluation e;
  e.lhs = std::exp(g.lo - mu);
  e.rhs = rhs;
  e.margin = rhs - improved_hi;
  e.holds = improved_hi < rhs;
  return make_report("avoidance_bound_dominance", {{"mu", fmt_double(mu)}}, e);
}

BoundReport check_pi_bounds(const PrimeTable& table, std::uint64_t x) {
  if (x < 11) throw invalid_argument("pi bounds are only asserted for integers x >= 11");
  return make_report("pi_bounds", x_inputs(x, 0), eval_pi_bounds(table, x));
}

BoundReport check_lemma_recip_sq(const PrimeTable& table, std::uint64_t a, std::uint64_t b) {
  if (a < 12 || a > b) throw invalid_argument("lemma 1/p^2 bound requires 12 <= a <= b");
  if (b > table.limit()) throw out_of_range("b exceeds sieve limit");
  return make_report("sum_recip_sq_bound", ab_inputs(a, b), eval_lemma_recip_sq(table, a, b));
}

BoundReport check_lemma_recip(const PrimeTable& table, std::uint64_t a, std::uint64_t b) {
  if (a < 2 || a > b) throw invalid_argument("lemma 1/p bounds require 2 <= a <= b");
  if (b > table.limit()) throw out_of_range("b exceeds sieve limit");
  return make_report("sum_recip_bounds", ab_inputs(a, b), eval_lemma_recip(table, a, b));
}

BoundReport check_harmonic_error(std::uint64_t n) {
  if (n < 1) throw invalid_argument("harmonic error requires n >= 1");
  CompensatedSum<long double> h;
  for (std::uint64_t k = 1; k <= n; ++k) h += 1.0L / static_cast<long double>(k);
  return make_report("harmonic_error", n_inputs(n, 0), eval_harmonic(h.value(), n));
}

GridSummary verify_pi_bounds_range(const PrimeTable& table, std::uint64_t x_lo,
                                   std::uint64_t x_hi) {
  if (x_lo < 11) throw invalid_argument("pi bounds are only asserted for integers x >= 11");
  if (x_hi > table.limit()) throw out_of_range("pi bound range exceeds sieve limit");
  GridSummary s;
  s.name = "pi_bounds";
  for (std::uint64_t x = x_lo; x <= x_hi; ++x)
    keep_tightest(s, eval_pi_bounds(table, x), s.name, x_inputs, x, 0);
  return s;
}

GridSummary verify_lemma_recip_sq_grid(const PrimeTable& table, std::uint64_t grid_max,
                                       std::uint64_t random_pairs, std::uint64_t random_max,
                                       std::uint64_t seed) {
  return pair_grid("sum_recip_sq_bound", table, 12, grid_max, random_pairs, random_max, seed,
                   eval_lemma_recip_sq);
}

GridSummary verify_lemma_recip_grid(const PrimeTable& table, std::uint64_t grid_max,
                                    std::uint64_t random_pairs, std::uint64_t random_max,
                                    std::uint64_t seed) {
  return pair_grid("sum_recip_bounds", table, 2, grid_max, random_pairs, random_max, seed,
                   eval_lemma_recip);
}

GridSummary verify_harmonic_range(std::uint64_t n_max) {
  GridSummary s;
  s.name = "harmonic_error";
  CompensatedSum<long double> h;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    h += 1.0L / static_cast<long double>(n);
    keep_tightest(s, eval_harmonic(h.value(), n), s.name, n_inputs, n, 0);
  }
  return s;
}

double pi0(const PrimeTable& table, std::uint64_t n) {
  const std::uint64_t lo = n / 2;
  if (n < 3 || n - 3 <= lo) return 0.0;
  return sum_recip(table, static_cast<double>(lo), static_cast<double>(n - 3));
}

Rational pi0_exact(const PrimeTable& table, std::uint64_t n) {
  const std::uint64_t lo = n / 2;
  if (n < 3 || n - 3 <= lo) return Rational(0);
  return exact_sum_recip(table, lo, n - 3);
}

R2Report r2_sweep(const PrimeTable& table, std::uint64_t n_max, unsigned threads) {
  if (n_max > table.limit())
    throw out_of_range("n_max = " + std::to_string(n_max) + " exceeds sieve limit " +
                       std::to_string(table.limit()));
  if (n_max < 5) throw invalid_argument("r2 sweep requires n_max >= 5");
  const Rational threshold(1, 19);
  const double threshold_d = 1.0 / 19.0;
  const std::uint64_t total = n_max - 4;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(total, 64))));

  std::vector<R2Report> parts(threads);
  auto work = [&](unsigned w) {
    R2Report& r = parts[w];
    r.n_min = 5 + total * w / threads;
    r.n_max = 5 + total * (w + 1) / threads - 1;
    r.min_pi0 = r.min_pi0_from_11 = std::numeric_limits<double>::infinity();
    for (std::uint64_t n = r.n_min; n <= r.n_max; ++n) {
      const double v = pi0(table, n);
      bool below;
      if (std::abs(v - threshold_d) < kNearMargin) {
        ++r.refined;
        below = pi0_exact(table, n) < threshold;
      } else {
        below = v < threshold_d;
      }
      if (below) r.exceptions.push_back({n, pi0_exact(table, n)});
      if (v < r.min_pi0) {
        r.min_pi0 = v;
        r.argmin = n;
      }
      if (n >= 11 && v < r.min_pi0_from_11) {
        r.min_pi0_from_11 = v;
        r.argmin_from_11 = n;
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }

  R2Report out;
  out.n_max = n_max;
  out.min_pi0 = out.min_pi0_from_11 = std::numeric_limits<double>::infinity();
  for (auto& part : parts) {
    for (auto& ex : part.exceptions) out.exceptions.push_back(std::move(ex));
    if (part.min_pi0 < out.min_pi0) {
      out.min_pi0 = part.min_pi0;
      out.argmin = part.argmin;
    }
    if (part.min_pi0_from_11 < out.min_pi0_from_11) {
      out.min_pi0_from_11 = part.min_pi0_from_11;
      out.argmin_from_11 = part.argmin_from_11;
    }
    out.refined += part.refined;
  }
  return out;
}

}  // namespace ppc
