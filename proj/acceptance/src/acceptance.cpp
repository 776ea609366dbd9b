#include "ppc/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "ppc/bounds.hpp"
#include "ppc/errors.hpp"
#include "ppc/exact.hpp"
#include "ppc/montecarlo.hpp"
#include "ppc/oracle.hpp"
#include "ppc/perm.hpp"
#include "ppc/primes.hpp"
#include "ppc/recognize.hpp"
#include "ppc/rng.hpp"

namespace ppc::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

CriterionResult start_result(int id, std::string title, double budget) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  r.budget_seconds = budget;
  return r;
}

void finish(CriterionResult& r, bool ok, Clock::time_point start) {
  r.seconds = seconds_since(start);
  const bool in_time = r.seconds < r.budget_seconds;
  if (!in_time) r.details.push_back(fmt("runtime %.2f s exceeds budget %.0f s", r.seconds, r.budget_seconds));
  r.passed = ok && in_time;
}

std::set<std::uint64_t> random_subset(Rng& rng, std::uint64_t n, double inclusion) {
  std::set<std::uint64_t> out;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (uniform_unit(rng) < inclusion) out.insert(k);
  return out;
}

std::string set_text(const std::set<std::uint64_t>& s) {
  std::string out = "{";
  for (auto it = s.begin(); it != s.end(); ++it) out += (it == s.begin() ? "" : ",") + std::to_string(*it);
  return out + "}";
}

}  // namespace

CriterionResult brute_force_equivalence(const Options& options) {
  auto r = start_result(1, "brute-force equivalence for n <= 8 (exact)", 60);
  const auto start = Clock::now();
  Rng rng(derive_seed(options.seed, 1));
  std::uint64_t checks = 0;
  std::uint64_t mismatches = 0;

  for (std::uint32_t n = 1; n <= 8; ++n) {
    const auto elements = oracle::enumerate_symmetric(n);
    std::uint64_t even = 0;
    for (const auto& e : elements)
      if (e.sign > 0) ++even;

    auto check = [&](const Rational& exact, auto predicate, Group group, const std::string& what) {
      std::uint64_t hits = 0;
      for (const auto& e : elements)
        if ((group == Group::sym || e.sign > 0) && predicate(e)) ++hits;
      const std::uint64_t total = group == Group::sym ? elements.size() : even;
      Rational brute(hits, total);
      brute.canonicalize();
      ++checks;
      if (brute != exact) {
        ++mismatches;
        if (r.details.size() < 20)
          r.details.push_back("mismatch n=" + std::to_string(n) + " " + what + " " +
                              std::string(to_string(group)) + ": exact " + to_fraction_string(exact) +
                              " vs brute " + to_fraction_string(brute));
      }
    };
    std::vector<Group> groups{Group::sym};
    if (n >= 2) groups.push_back(Group::alt);

    for (int i = 0; i < 50; ++i) {
      const auto members = random_subset(rng, n, 0.5);
      const ForbiddenSet forbidden(n, members);
      auto avoids = [&](const oracle::Element& e) {
        return std::none_of(e.lengths.begin(), e.lengths.end(),
                            [&](std::uint64_t len) { return members.contains(len); });
      };
      for (Group g : groups)
        check(avoid_proportion(forbidden, g).value(), avoids, g, "avoid" + set_text(members));
    }

    const auto primes = oracle::primes_up_to(n);
    for (std::uint64_t p : primes)
      check(pre_p_density(n, p).value(),
            [&](const oracle::Element& e) { return e.powers_to.contains(p); }, Group::sym,
            "pre_p_density p=" + std::to_string(p));

    std::vector<PrimeWindow> windows{PrimeWindow::interval(0, 0)};
    for (std::size_t i = 0; i < primes.size(); ++i)
      for (std::size_t j = i; j < primes.size(); ++j)
        windows.push_back(PrimeWindow::interval(static_cast<double>(primes[i] - 1),
                                                static_cast<double>(primes[j])));
    for (const auto& w : windows) {
      const std::string label = "window(" + std::to_string(w.lo()) + "," + std::to_string(w.hi()) + "]";
      auto pre = [&](const oracle::Element& e) {
        return std::any_of(w.primes().begin(), w.primes().end(),
                           [&](std::uint64_t p) { return e.powers_to.contains(p); });
      };
      auto in_t = [&](const oracle::Element& e) {
        return std::any_of(w.primes().begin(), w.primes().end(), [&](std::uint64_t p) {
          return std::count(e.lengths.begin(), e.lengths.end(), p) >= 1;
        });
      };
      auto in_u = [&](const oracle::Element& e) {
        return std::any_of(w.primes().begin(), w.primes().end(), [&](std::uint64_t p) {
          const auto mp = std::count(e.lengths.begin(), e.lengths.end(), p);
          const auto multiples = std::count_if(e.lengths.begin(), e.lengths.end(),
                                               [&](std::uint64_t len) { return len % p == 0; });
          return mp >= 1 && multiples >= 2;
        });
      };
      for (Group g : groups) {
        check(window_proportion(n, w, g).value(), pre, g, label);
        const auto tu = exact_TU(n, w, g);
        check(tu.t.value(), in_t, g, "T " + label);
        check(tu.u.value(), in_u, g, "U " + label);
      }
    }
  }
  r.details.push_back(fmt("%llu exact comparisons against exhaustive enumeration, %llu mismatches",
                          static_cast<unsigned long long>(checks),
                          static_cast<unsigned long long>(mismatches)));
  finish(r, mismatches == 0, start);
  return r;
}

CriterionResult derangement_oracle(const Options&) {
  auto r = start_result(2, "derangement oracle for n <= 30 (exact)", 1);
  const auto start = Clock::now();
  std::uint64_t mismatches = 0;
  for (std::uint64_t n = 1; n <= 30; ++n) {
    const auto exact = avoid_proportion(ForbiddenSet(n, {1}), Group::sym).value();
    if (exact != oracle::derangement_series(n)) {
      ++mismatches;
      r.details.push_back("mismatch at n=" + std::to_string(n));
    }
  }
  r.details.push_back(fmt("30 values compared, %llu mismatches", static_cast<unsigned long long>(mismatches)));
  finish(r, mismatches == 0, start);
  return r;
}

CriterionResult avoidance_bound_sweep(const Options& options) {
  auto r = start_result(3, "avoidance bound e^(gamma-mu) over 1000 random (n <= 200, A)", 120);
  const auto start = Clock::now();
  Rng rng(derive_seed(options.seed, 3));
  std::uint64_t failures = 0;
  std::uint64_t checks = 0;
  double worst_ratio_sym = 0;
  double worst_ratio_alt = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t n = 1 + uniform_below(rng, 200);
    const ForbiddenSet forbidden(n, random_subset(rng, n, uniform_unit(rng)));
    const double mu = to_double(forbidden.mu());
    const double bound = std::exp(euler_gamma().lo - mu);
    auto record = [&](const BoundReport& rep) {
      ++checks;
      if (!rep.holds) {
        ++failures;
        if (r.details.size() < 20)
          r.details.push_back(fmt("violated: %s n=%llu mu=%.6f lhs=%.6g rhs=%.6g", rep.name.c_str(),
                                  static_cast<unsigned long long>(n), mu, rep.lhs, rep.rhs));
      }
    };
    const auto sym = check_avoidance_bound(forbidden, Group::sym);
    record(sym);
    worst_ratio_sym = std::max(worst_ratio_sym, sym.lhs / bound);
    if (n >= 2) {
      const auto alt = check_avoidance_bound(forbidden, Group::alt);
      record(alt);
      worst_ratio_alt = std::max(worst_ratio_alt, alt.lhs / (2 * bound));
    }
    if (mu > 0) record(check_bound_dominance(mu));
  }
  for (double mu = 1.0; mu <= 50.0; mu += 1.0 / 1024)
  {
    const auto rep = check_bound_dominance(mu);
    ++checks;
    if (!rep.holds) {
      ++failures;
      if (r.details.size() < 20) r.details.push_back(fmt("dominance violated at mu=%.6f", mu));
    }
  }
  r.details.push_back(fmt("%llu outward-rounded checks, %llu failures",
                          static_cast<unsigned long long>(checks), static_cast<unsigned long long>(failures)));
  r.details.push_back(fmt("largest avoid/bound ratio: sym %.4f, alt %.4f", worst_ratio_sym, worst_ratio_alt));
  finish(r, failures == 0, start);
  return r;
}

CriterionResult prime_inequality_grids(const Options& options) {
  auto r = start_result(4, "prime-counting bounds and reciprocal-sum lemmas on grids to 10^6", 60);
  const auto start = Clock::now();
  const PrimeTable table = build_sieve(1'000'000);
  bool ok = true;
  const std::uint64_t count = table.pi(1'000'000);
  const std::uint64_t independent = oracle::segmented_prime_count(1'000'000);
  r.details.push_back(fmt("pi(10^6) = %llu (segmented sieve: %llu)", static_cast<unsigned long long>(count),
                          static_cast<unsigned long long>(independent)));
  ok = ok && count == 78498 && independent == 78498;

  const GridSummary grids[] = {
      verify_pi_bounds_range(table, 11, 1'000'000),
      verify_lemma_recip_sq_grid(table, 2000, 1000, 1'000'000, derive_seed(options.seed, 41)),
      verify_lemma_recip_grid(table, 2000, 1000, 1'000'000, derive_seed(options.seed, 42)),
  };
  for (const auto& g : grids) {
    std::string line = fmt("%s: %llu checks, %llu failures, %llu refined", g.name.c_str(),
                           static_cast<unsigned long long>(g.checked),
                           static_cast<unsigned long long>(g.failures),
                           static_cast<unsigned long long>(g.refined));
    if (g.tightest) {
      line += "; tightest margin " + fmt("%.3e", g.tightest->margin) + " at";
      for (const auto& [k, v] : g.tightest->inputs) line += " " + k + "=" + v;
    }
    r.details.push_back(line);
    for (const auto& f : g.failing) {
      std::string fl = "  failing:";
      for (const auto& [k, v] : f.inputs) fl += " " + k + "=" + v;
      r.details.push_back(fl + fmt(" lhs=%.10g rhs=%.10g", f.lhs, f.rhs));
    }
    ok = ok && g.failures == 0;
  }
  finish(r, ok, start);
  return r;
}

CriterionResult r2_reproduction(const Options& options) {
  auto r = start_result(5, "pi0(n) >= 1/19 for 11 <= n <= 400000, small-n exceptions, exact pi_n", 60);
  const auto start = Clock::now();
  bool ok = true;

  const auto sieve_start = Clock::now();
  const PrimeTable table = build_sieve(400'000);
  const double sieve_seconds = seconds_since(sieve_start);
  const auto sweep_start = Clock::now();
  const R2Report report = r2_sweep(table, 400'000, std::max(1u, options.threads));
  const double sweep_seconds = seconds_since(sweep_start);
  r.details.push_back(fmt("sieve build %.3f s (budget 2 s), sweep %.3f s (budget 10 s)", sieve_seconds,
                          sweep_seconds));
  ok = ok && sieve_seconds < 2 && sweep_seconds < 10;

  const Rational threshold(1, 19);
  std::set<std::uint64_t> expected;
  for (std::uint64_t n = 5; n <= 10; ++n)
    if (oracle::prime_reciprocal_sum(n / 2, n - 3) < threshold) expected.insert(n);
  std::set<std::uint64_t> found;
  for (const auto& ex : report.exceptions) {
    found.insert(ex.n);
    if (ex.n >= 11) ok = false;
    if (ex.n <= 10 && ex.pi0 != oracle::prime_reciprocal_sum(ex.n / 2, ex.n - 3)) ok = false;
  }
  ok = ok && found == expected;
  r.details.push_back("exceptions (pi0 < 1/19): " + set_text(found) + "; oracle for 5..10: " +
                      set_text(expected));
  r.details.push_back(fmt("min pi0 over n >= 11: %.9f at n = %llu (1/19 = %.9f); refined %llu",
                          report.min_pi0_from_11, static_cast<unsigned long long>(report.argmin_from_11),
                          1.0 / 19, static_cast<unsigned long long>(report.refined)));

  const Rational third(1, 3);
  std::set<std::uint64_t> not_above_third;
  for (std::uint64_t n = 5; n <= 50; ++n) {
    const auto window = PrimeWindow::interval(1, static_cast<double>(n - 3));
    const Rational pin = window_proportion(n, window, Group::sym).value();
    const Rational p0 = pi0_exact(table, n);
    if (pin < p0) {
      ok = false;
      r.details.push_back("pi_n < pi0 at n=" + std::to_string(n));
    }
    if (pin <= third) not_above_third.insert(n);
    std::string line = fmt("n=%2llu pi_n=%.6f pi0=%.6f", static_cast<unsigned long long>(n), to_double(pin),
                           to_double(p0));
    if (n <= 10) line += "  pi_n=" + to_fraction_string(pin) + " pi0=" + to_fraction_string(p0);
    r.details.push_back(line);
  }
  r.details.push_back("observation pi_n > 1/3 for 5 <= n <= 50: fails at n in " + set_text(not_above_third) +
                      ", holds elsewhere");
  finish(r, ok, start);
  return r;
}

namespace {

// Independent long-double recomputations, term by term.
long double p9_sheet(std::uint64_t n, long double a, long double d, int delta) {
  const long double ln = std::log(static_cast<long double>(n));
  const long double fa = std::floor(a);
  const long double term1 = 2.287L * delta / d;
  const long double term2 = 2.22L * (ln - 1.0L) / (fa * std::log(fa));
  const long double term3 = 4.4L * delta * ln / (a * std::log(a) * static_cast<long double>(n));
  return 1.0L - term1 - term2 - term3;
}

long double thm9_sheet(std::uint64_t n, int delta) {
  const long double nn = static_cast<long double>(n);
  return 1.0L - (4.58L * delta + 0.17L) * std::log(std::log(nn)) / std::log(nn - 3.0L);
}

long double thm1_sheet(std::uint64_t n, int delta) {
  return 1.0L - (delta == 1 ? 5.0L : 7.0L) / std::log(std::log(static_cast<long double>(n)));
}

}  // namespace

CriterionResult headline_bound_properties(const Options& options) {
  auto r = start_result(6, "explicit lower bounds (vacuous at desk scale): recomputation, monotonicity, exact dominance at n <= 60", 60);
  const auto start = Clock::now();
  Rng rng(derive_seed(options.seed, 6));
  bool ok = true;
  double worst = 0;
  std::uint64_t monotone_failures = 0;
  for (int i = 0; i < 100; ++i) {
    const double a = 12 + 988 * uniform_unit(rng);
    const double d = 1 + 1e-6 + 3 * uniform_unit(rng);
    const double base = std::pow(a, d);
    const auto n = static_cast<std::uint64_t>(std::ceil(base * (1 + 1000 * uniform_unit(rng)))) + 1;
    const int delta = 1 + static_cast<int>(uniform_below(rng, 2));
    const double v = p9_lower_bound(n, a, d, delta);
    worst = std::max(worst, static_cast<double>(std::abs(v - p9_sheet(n, a, d, delta))));
    if (!(p9_lower_bound(n, a, d, 2) < p9_lower_bound(n, a, d, 1))) ++monotone_failures;
    const double d_hi = std::log(static_cast<double>(n)) / std::log(a);
    const double d2 = d + (d_hi - d) * uniform_unit(rng);
    if (d2 > d && !(p9_lower_bound(n, a, d2, delta) > v)) ++monotone_failures;

    const std::uint64_t m = 16 + uniform_below(rng, 1'000'000'000'000ULL);
    const auto h = headline_bounds(m, delta);
    worst = std::max(worst, static_cast<double>(std::abs(h.thm9 - thm9_sheet(m, delta))));
    worst = std::max(worst, static_cast<double>(std::abs(h.thm1 - thm1_sheet(m, delta))));
    const auto h1 = headline_bounds(m, 1);
    const auto h2 = headline_bounds(m, 2);
    if (!(h2.thm9 < h1.thm9 && h2.thm1 < h1.thm1)) ++monotone_failures;
  }
  r.details.push_back(fmt("max |evaluator - recomputation| over 300 values: %.3e (tolerance 1e-12)", worst));
  r.details.push_back(fmt("monotonicity failures (delta, d): %llu", static_cast<unsigned long long>(monotone_failures)));
  ok = ok && worst <= 1e-12 && monotone_failures == 0;

  const double at_million = p9_lower_bound(1'000'000, std::log(1e6), std::log(std::log(1e6)), 1);
  r.details.push_back(fmt("window bound at n=10^6, a=log n, d=log log n: %.4f (vacuous)", at_million));
  ok = ok && std::abs(at_million - (-0.7242)) < 1e-3;

  std::uint64_t evaluated = 0;
  std::uint64_t nonnegative = 0;
  for (std::uint64_t n = 13; n <= 60; ++n) {
    for (double a = 12; a < static_cast<double>(n); a += 0.5) {
      const double d_max = std::log(static_cast<double>(n)) / std::log(a);
      for (int step = 1; step <= 8; ++step) {
        const double d = 1 + (d_max - 1) * step / 8.0;
        if (!(d > 1) || std::pow(a, d) > static_cast<double>(n)) continue;
        for (int delta : {1, 2}) {
          ++evaluated;
          const double bound = p9_lower_bound(n, a, d, delta);
          if (bound < 0) continue;
          ++nonnegative;
          const auto w = PrimeWindow::interval(a, std::pow(a, d));
          const auto rho = window_proportion(n, w, delta == 1 ? Group::sym : Group::alt).to_double();
          if (rho < bound) ok = false;
        }
      }
    }
  }
  for (std::uint64_t n = 16; n <= 60; ++n) {
    for (int delta : {1, 2}) {
      const auto h = headline_bounds(n, delta);
      const auto w = PrimeWindow::interval(1, static_cast<double>(n - 3));
      for (double bound : {h.thm1, h.thm1_sharp, h.thm9}) {
        ++evaluated;
        if (bound < 0) continue;
        ++nonnegative;
        if (window_proportion(n, w, delta == 1 ? Group::sym : Group::alt).to_double() < bound) ok = false;
      }
    }
  }
  r.details.push_back(fmt("n <= 60: %llu bound evaluations, %llu nonnegative (each checked against exact rho_G)",
                          static_cast<unsigned long long>(evaluated), static_cast<unsigned long long>(nonnegative)));
  finish(r, ok, start);
  return r;
}

CriterionResult monte_carlo_calibration(const Options& options) {
  auto r = start_result(7, "Monte Carlo estimates within 4 Wilson half-widths (level 0.999)", 120);
  const auto start = Clock::now();
  Rng rng(derive_seed(options.seed, 7));
  int excursions = 0;
  for (int i = 0; i < 20; ++i) {
    const std::uint64_t n = 3 + uniform_below(rng, 38);
    const Group group = uniform_below(rng, 2) == 0 ? Group::sym : Group::alt;
    const auto primes = oracle::primes_up_to(n);
    const std::size_t lo = uniform_below(rng, primes.size());
    const std::size_t hi = lo + uniform_below(rng, primes.size() - lo);
    const auto window = PrimeWindow::interval(static_cast<double>(primes[lo] - 1), static_cast<double>(primes[hi]));
    const double exact = window_proportion(n, window, group).to_double();
    EstimateOptions eo;
    eo.level = 0.999;
    eo.threads = std::max(1u, options.threads);
    const Estimate est = estimate_event(n, event::PreCycleInWindow{window}, group, 100'000,
                                        derive_seed(options.seed, 700 + i), eo);
    const double dev = std::abs(est.p_hat - exact);
    const bool inside = dev <= 4 * est.half_width;
    if (!inside) ++excursions;
    r.details.push_back(fmt("n=%2llu %s window (%g,%g]: exact %.5f p_hat %.5f hw %.5f%s",
                            static_cast<unsigned long long>(n), group == Group::sym ? "sym" : "alt", window.lo(),
                            window.hi(), exact, est.p_hat, est.half_width, inside ? "" : "  EXCURSION"));
  }
  r.details.push_back(fmt("excursions: %d (at most 1 tolerated)", excursions));
  finish(r, excursions <= 1, start);
  return r;
}

CriterionResult recognizer_harness(const Options& options) {
  auto r = start_result(8, "recognizer at n=20, epsilon=0.01, c0=1/19", 30);
  const auto start = Clock::now();
  bool ok = true;
  const double epsilon = 0.01;
  const double c0 = 1.0 / 19.0;
  const int reps = 1000;

  int found = 0;
  int bad_witness = 0;
  std::uint64_t max_draws = 0;
  for (int i = 0; i < reps; ++i) {
    UniformGroupSource source(20, Group::sym, derive_seed(options.seed, 800'000 + i));
    const auto out = run_recognizer(source, epsilon, c0);
    max_draws = std::max(max_draws, out.draws_used);
    if (out.draws_used > out.budget) ok = false;
    if (!out.found()) continue;
    ++found;
    oracle::Perm g(out.element->images().begin(), out.element->images().end());
    const auto w = oracle::power(g, out.exponent.get_ui());
    const bool witness_ok = out.exponent.fits_ulong_p() && oracle::single_cycle_length(w) == out.prime &&
                            oracle::is_prime(out.prime) && out.prime >= 2 && out.prime <= 17 &&
                            std::equal(w.begin(), w.end(), out.witness->images().begin());
    if (!witness_ok) ++bad_witness;
  }
  const double threshold = 0.99 - 3 * std::sqrt(0.01 * 0.99 / reps);
  const double freq = static_cast<double>(found) / reps;
  r.details.push_back(fmt("uniform S_20: found %d/%d (%.4f, threshold %.4f), bad witnesses %d, max draws %llu",
                          found, reps, freq, threshold, bad_witness, static_cast<unsigned long long>(max_draws)));
  ok = ok && freq >= threshold && bad_witness == 0;

  oracle::Perm cycle(20);
  for (std::uint32_t i = 0; i < 20; ++i) cycle[i] = (i + 1) % 20;
  std::vector<Permutation> powers;
  for (std::uint64_t e = 0; e < 20; ++e) powers.push_back(Permutation::from_zero_based(oracle::power(cycle, e)));
  int not_found_86 = 0;
  for (int i = 0; i < reps; ++i) {
    ListSource source(powers, derive_seed(options.seed, 900'000 + i));
    const auto out = run_recognizer(source, epsilon, c0);
    if (!out.found() && out.draws_used == 86 && out.budget == 86) ++not_found_86;
  }
  r.details.push_back(fmt("powers of a 20-cycle: not_found with 86 draws in %d/%d runs", not_found_86, reps));
  ok = ok && not_found_86 == reps;
  finish(r, ok, start);
  return r;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "brute-force equivalence", brute_force_equivalence},
      {2, "derangement oracle", derangement_oracle},
      {3, "avoidance bound sweep", avoidance_bound_sweep},
      {4, "prime inequality grids", prime_inequality_grids},
      {5, "pi0 >= 1/19 reproduction", r2_reproduction},
      {6, "headline bound properties", headline_bound_properties},
      {7, "Monte Carlo calibration", monte_carlo_calibration},
      {8, "recognizer harness", recognizer_harness},
  };
  return all;
}

bool run_all(const Options& options, std::ostream& out, int only) {
  bool all_ok = true;
  for (const auto& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    CriterionResult res;
    try {
      res = c.run(options);
    } catch (const std::exception& e) {
      res.id = c.id;
      res.title = c.title;
      res.passed = false;
      res.details.push_back(std::string("threw: ") + e.what());
    }
    all_ok = all_ok && res.passed;
    out << (res.passed ? "[PASS] " : "[FAIL] ") << "criterion " << res.id << ": " << res.title
        << fmt(" (%.2f s, budget %.0f s)", res.seconds, res.budget_seconds) << '\n';
    for (const auto& d : res.details) out << "    " << d << '\n';
    out.flush();
  }
  return all_ok;
}

}  // namespace ppc::acceptance
