#include "ppc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "ppc/acceptance.hpp"
#include "ppc/bounds.hpp"
#include "ppc/errors.hpp"
#include "ppc/exact.hpp"
#include "ppc/montecarlo.hpp"
#include "ppc/primes.hpp"
#include "ppc/recognize.hpp"
#include "ppc/report.hpp"
#include "ppc/rng.hpp"

namespace ppc::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exceptions for n < 11 allowed by the sweep (empty prime ranges).
const std::set<std::uint64_t> kDocumentedExceptions{5, 6, 7};

Rational rational_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError("--" + flag + ": " + e.what());
  }
}

std::uint64_t integer_flag(const std::string& flag, const std::string& text) {
  const Rational v = rational_flag(flag, text);
  if (v.get_den() != 1 || v < 0 || !v.get_num().fits_ulong_p())
    throw UsageError("--" + flag + ": expected a nonnegative integer, got '" + text + "'");
  return v.get_num().get_ui();
}

double real_flag(const std::string& flag, const std::string& text) { return to_double(rational_flag(flag, text)); }

// Window end points only matter through their floors.
double floor_flag(const std::string& flag, const std::string& text) {
  const Rational v = rational_flag(flag, text);
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return f.get_d();
}

std::set<std::uint64_t> set_flag(const std::string& flag, const std::string& text) {
  std::set<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    const auto dash = item.find('-');
    if (dash != std::string::npos && dash > 0) {
      const auto a = integer_flag(flag, item.substr(0, dash));
      const auto b = integer_flag(flag, item.substr(dash + 1));
      for (auto k = a; k <= b; ++k) out.insert(k);
    } else {
      out.insert(integer_flag(flag, item));
    }
  }
  return out;
}

Group group_flag(const std::string& text) {
  try {
    return parse_group(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--group: ") + e.what());
  }
}

std::string set_text(const std::set<std::uint64_t>& s) {
  std::string out = "{";
  for (auto it = s.begin(); it != s.end(); ++it) out += (it == s.begin() ? "" : ",") + std::to_string(*it);
  return out + "}";
}

Json exact_json(const Rational& v) { return {{"exact", to_fraction_string(v)}, {"approx", to_double(v)}}; }

// What a subcommand produces; rendered according to --format.
struct Report {
  Json json = Json::object();
  std::string text;
  std::vector<BoundReport> rows;
  int status = kExitOk;
};

void write_flat_csv(std::ostream& out, const Json& j) {
  out << "name,value\n";
  for (const auto& [k, v] : j.items()) {
    std::string value = v.is_string() ? v.get<std::string>() : v.dump();
    if (value.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : value) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      value = quoted + "\"";
    }
    out << k << ',' << value << '\n';
  }
}

struct Common {
  std::string format = "text";
  std::string output;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", c.output, "write the report to this file instead of stdout");
}

std::string sieve_cache_path(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(kSieveCacheEnv)) return env;
  return {};
}

PrimeTable load_table(std::uint64_t limit, const std::string& cache_flag) {
  const std::string path = sieve_cache_path(cache_flag);
  return path.empty() ? build_sieve(limit) : build_or_load_sieve(limit, path);
}

// density ------------------------------------------------------------------

struct DensityArgs {
  std::string n, p, lo, hi, group = "sym";
  bool sigma = false, tu = false, cycle = false;
};

Report density(const DensityArgs& a) {
  if (a.n.empty()) throw UsageError("density: --n is required");
  const std::uint64_t n = integer_flag("n", a.n);
  const Group group = group_flag(a.group);
  Report r;
  r.json["command"] = "density";
  r.json["n"] = n;
  r.json["group"] = std::string(to_string(group));

  if (a.sigma) {
    if (a.p.empty()) throw UsageError("density --sigma needs --p");
    const std::uint64_t p = integer_flag("p", a.p);
    const auto v = sigma_pprime(n, p);
    r.json["quantity"] = "sigma";
    r.json["p"] = p;
    r.json["value"] = exact_json(v.value());
    r.text = v.to_string() + "\n";
  } else if (!a.p.empty()) {
    const std::uint64_t p = integer_flag("p", a.p);
    const auto v = group == Group::sym ? pre_p_density(n, p)
                                       : window_proportion(n, PrimeWindow::from_primes({p}), group);
    r.json["quantity"] = "pre_p_density";
    r.json["p"] = p;
    r.json["value"] = exact_json(v.value());
    r.text = v.to_string() + "\n";
  } else if (!a.lo.empty() || !a.hi.empty()) {
    if (a.lo.empty() || a.hi.empty()) throw UsageError("density: --lo and --hi go together");
    const auto window = PrimeWindow::interval(floor_flag("lo", a.lo), floor_flag("hi", a.hi));
    const auto v = window_proportion(n, window, group);
    r.json["quantity"] = "window_proportion";
    r.json["window"] = {{"lo", window.lo()}, {"hi", window.hi()}, {"primes", window.primes()}};
    r.json["value"] = exact_json(v.value());
    r.text = v.to_string() + "\n";
    if (a.tu) {
      const auto tu = exact_TU(n, window, group);
      r.json["t"] = exact_json(tu.t.value());
      r.json["u"] = exact_json(tu.u.value());
      r.text = "window " + v.to_string() + "\nT " + tu.t.to_string() + "\nU " + tu.u.to_string() + "\n";
    }
  } else if (a.cycle) {
    const auto v = cycle_proportion(n);
    r.json["quantity"] = "cycle_proportion";
    r.json["value"] = exact_json(v.value());
    r.text = v.to_string() + "\n";
  } else {
    throw UsageError("density: give --p, --sigma --p, --lo/--hi, or --cycle");
  }
  return r;
}

// avoid --------------------------------------------------------------------

struct AvoidArgs {
  std::string n, set, group = "sym";
};

Report avoid(const AvoidArgs& a) {
  if (a.n.empty()) throw UsageError("avoid: --n is required");
  const std::uint64_t n = integer_flag("n", a.n);
  const Group group = group_flag(a.group);
  const ForbiddenSet forbidden(n, set_flag("set", a.set));
  const auto value = avoid_proportion(forbidden, group);
  const auto check = check_avoidance_bound(forbidden, group);

  Report r;
  r.json["command"] = "avoid";
  r.json["n"] = n;
  r.json["group"] = std::string(to_string(group));
  r.json["set"] = forbidden.members();
  r.json["mu"] = exact_json(forbidden.mu());
  r.json["avoid"] = exact_json(value.value());
  std::ostringstream text;
  text << "avoid " << value.to_string() << " (" << format_double(value.to_double()) << ")\n";
  text << "mu " << to_fraction_string(forbidden.mu()) << " (" << format_double(to_double(forbidden.mu())) << ")\n";
  if (forbidden.mu() > 0) {
    const auto b = avoidance_bounds(to_double(forbidden.mu()));
    r.json["bounds"] = {{"erdos_turan", b.erdos_turan}, {"ford", b.ford}, {"improved", b.improved}};
    text << "1/mu " << format_double(b.erdos_turan) << "\ne^(1-mu) " << format_double(b.ford)
         << "\ne^(gamma-mu) " << format_double(b.improved) << '\n';
    r.rows.push_back(check_bound_dominance(to_double(forbidden.mu())));
  }
  r.rows.insert(r.rows.begin(), check);
  r.json["checks"] = Json::array();
  for (const auto& row : r.rows) {
    r.json["checks"].push_back(to_json(row));
    text << row.name << (row.holds ? " holds" : " FAILS") << " (margin " << format_double(row.margin) << ")\n";
    if (!row.holds) r.status = kExitCheckFailed;
  }
  r.text = text.str();
  return r;
}

// verify-primes ------------------------------------------------------------

struct VerifyPrimesArgs {
  std::string limit = "1000000", grid = "2000", pairs = "1000", seed = "1";
  std::string sieve_cache;
};

std::string summary_line(const GridSummary& g) {
  std::ostringstream s;
  s << g.name << ": " << g.checked << " checks, " << g.failures << " failures, " << g.refined << " refined";
  if (g.tightest) {
    s << "; tightest margin " << format_double(g.tightest->margin) << " at";
    for (const auto& [k, v] : g.tightest->inputs) s << ' ' << k << '=' << v;
  }
  return s.str();
}

Report verify_primes(const VerifyPrimesArgs& a) {
  const std::uint64_t limit = integer_flag("limit", a.limit);
  const std::uint64_t grid = integer_flag("grid", a.grid);
  const std::uint64_t pairs = integer_flag("pairs", a.pairs);
  const std::uint64_t seed = integer_flag("seed", a.seed);
  if (limit < 12) throw UsageError("verify-primes: --limit must be at least 12");
  if (grid > limit) throw UsageError("verify-primes: --grid exceeds --limit");
  const PrimeTable table = load_table(limit, a.sieve_cache);

  const GridSummary summaries[] = {
      verify_pi_bounds_range(table, 11, limit),
      verify_lemma_recip_sq_grid(table, grid, pairs, limit, derive_seed(seed, 1)),
      verify_lemma_recip_grid(table, grid, pairs, limit, derive_seed(seed, 2)),
      verify_harmonic_range(limit),
  };
  Report r;
  r.json["command"] = "verify-primes";
  r.json["limit"] = limit;
  r.json["pi_limit"] = table.pi(limit);
  r.json["checks"] = Json::array();
  std::ostringstream text;
  text << "pi(" << limit << ") = " << table.pi(limit) << '\n';
  for (const auto& g : summaries) {
    r.json["checks"].push_back(to_json(g));
    text << summary_line(g) << '\n';
    if (g.tightest) r.rows.push_back(*g.tightest);
    r.rows.insert(r.rows.end(), g.failing.begin(), g.failing.end());
    if (g.failures > 0) r.status = kExitCheckFailed;
  }
  r.json["holds"] = r.status == kExitOk;
  r.text = text.str();
  return r;
}

// verify-r2 ----------------------------------------------------------------

struct VerifyR2Args {
  std::string max = "400000";
  unsigned threads = 1;
  std::string sieve_cache;
};

Report verify_r2(const VerifyR2Args& a) {
  const std::uint64_t n_max = integer_flag("max", a.max);
  if (n_max < 5) throw UsageError("verify-r2: --max must be at least 5");
  const PrimeTable table = load_table(n_max, a.sieve_cache);
  const R2Report rep = r2_sweep(table, n_max, a.threads);

  std::set<std::uint64_t> exceptions;
  for (const auto& e : rep.exceptions) exceptions.insert(e.n);
  const bool ok = std::includes(kDocumentedExceptions.begin(), kDocumentedExceptions.end(), exceptions.begin(),
                                exceptions.end());
  Report r;
  r.json = to_json(rep);
  r.json["documented_exceptions"] = kDocumentedExceptions;
  r.json["holds"] = ok;
  std::ostringstream text;
  text << "checked pi0(n) >= 1/19 for " << rep.n_min << " <= n <= " << rep.n_max << '\n';
  text << "exceptions: " << set_text(exceptions) << " (documented: " << set_text(kDocumentedExceptions) << ")\n";
  for (const auto& e : rep.exceptions)
    text << "  n=" << e.n << " pi0=" << to_fraction_string(e.pi0) << '\n';
  text << "min pi0 = " << format_double(rep.min_pi0) << " at n=" << rep.argmin << '\n';
  if (rep.argmin_from_11 != 0)
    text << "min pi0 over n >= 11 = " << format_double(rep.min_pi0_from_11) << " at n=" << rep.argmin_from_11
         << '\n';
  text << "refined " << rep.refined << '\n' << (ok ? "OK" : "FAIL: exception outside the documented set") << '\n';
  r.text = text.str();
  r.status = ok ? kExitOk : kExitCheckFailed;
  return r;
}

// bounds -------------------------------------------------------------------

struct BoundsArgs {
  bool sample_count = false;
  std::string epsilon, c0, n, log_n, a, b, d, delta = "1", mu, harmonic;
};

Report bounds(const BoundsArgs& a) {
  Report r;
  r.json["command"] = "bounds";
  std::ostringstream text;
  auto need = [](const std::string& v, const char* what) {
    if (v.empty()) throw UsageError(std::string("bounds: ") + what + " is required here");
  };

  if (a.sample_count) {
    need(a.epsilon, "--epsilon");
    need(a.c0, "--c0");
    const double eps = real_flag("epsilon", a.epsilon);
    const double c0 = real_flag("c0", a.c0);
    const auto m = sample_count(eps, c0);
    r.json["quantity"] = "sample_count";
    r.json["epsilon"] = eps;
    r.json["c0"] = c0;
    r.json["value"] = m;
    r.text = std::to_string(m) + "\n";
    return r;
  }
  if (!a.harmonic.empty()) {
    const std::uint64_t n = integer_flag("harmonic", a.harmonic);
    const auto rep = check_harmonic_error(n);
    r.json["quantity"] = "harmonic_error";
    r.json["n"] = n;
    r.json["value"] = static_cast<double>(harmonic_error(n));
    r.json["check"] = to_json(rep);
    r.rows.push_back(rep);
    r.text = "E(" + std::to_string(n) + ") = " + format_double(static_cast<double>(harmonic_error(n))) +
             (rep.holds ? " in (0, 1/(2n))\n" : " outside (0, 1/(2n))\n");
    r.status = rep.holds ? kExitOk : kExitCheckFailed;
    return r;
  }
  if (!a.mu.empty()) {
    const double mu = real_flag("mu", a.mu);
    const auto b = avoidance_bounds(mu);
    const auto rep = check_bound_dominance(mu);
    r.json["quantity"] = "avoidance_bounds";
    r.json["mu"] = mu;
    r.json["erdos_turan"] = b.erdos_turan;
    r.json["ford"] = b.ford;
    r.json["improved"] = b.improved;
    r.json["check"] = to_json(rep);
    r.rows.push_back(rep);
    text << "1/mu " << format_double(b.erdos_turan) << "\ne^(1-mu) " << format_double(b.ford)
         << "\ne^(gamma-mu) " << format_double(b.improved) << '\n';
    r.text = text.str();
    r.status = rep.holds ? kExitOk : kExitCheckFailed;
    return r;
  }
  const int delta = static_cast<int>(integer_flag("delta", a.delta));
  if (!a.n.empty() && !a.a.empty() && !a.d.empty()) {
    const std::uint64_t n = integer_flag("n", a.n);
    const double av = real_flag("a", a.a);
    const double dv = real_flag("d", a.d);
    const double v = p9_lower_bound(n, av, dv, delta);
    r.json["quantity"] = "window_lower_bound";
    r.json["n"] = n;
    r.json["a"] = av;
    r.json["d"] = dv;
    r.json["delta"] = delta;
    r.json["value"] = v;
    r.json["vacuous"] = v < 0;
    r.text = format_double(v) + (v < 0 ? " (vacuous)\n" : "\n");
    return r;
  }
  if (!a.n.empty() || !a.log_n.empty()) {
    HeadlineBounds h;
    if (!a.n.empty()) {
      const std::uint64_t n = integer_flag("n", a.n);
      h = headline_bounds(n, delta);
      r.json["n"] = n;
    } else {
      const double log_n = real_flag("log-n", a.log_n);
      h = headline_bounds_from_log(log_n, delta);
      r.json["log_n"] = log_n;
    }
    r.json["quantity"] = "headline_bounds";
    r.json["delta"] = delta;
    r.json["thm1"] = h.thm1;
    r.json["thm1_sharp"] = h.thm1_sharp;
    r.json["full_window"] = h.thm9;
    r.json["below_threshold"] = h.below_threshold;
    r.json["thm1_vacuous"] = h.thm1_vacuous;
    r.json["full_window_vacuous"] = h.thm9_vacuous;
    text << "1 - c/log log n: " << format_double(h.thm1) << (h.thm1_vacuous ? " (vacuous)" : "") << '\n';
    text << "  with c = 4.6 (sym) or 6.9 (alt): " << format_double(h.thm1_sharp) << '\n';
    text << "1 - (4.58 delta + 0.17) log log n/log(n-3): " << format_double(h.thm9)
         << (h.thm9_vacuous ? " (vacuous)" : "") << '\n';
    if (h.below_threshold) text << "n < e^12: evaluated only, not asserted\n";
    r.text = text.str();
    return r;
  }
  if (!a.a.empty() && !a.b.empty()) {
    const double av = real_flag("a", a.a);
    const double bv = real_flag("b", a.b);
    const auto l = lemma_sum_bounds(av, bv);
    r.json["quantity"] = "lemma_sum_bounds";
    r.json["a"] = av;
    r.json["b"] = bv;
    r.json["recip_sq_upper"] = l.l2_rhs ? Json(*l.l2_rhs) : Json(nullptr);
    r.json["recip_lower"] = l.l3_lo ? Json(*l.l3_lo) : Json(nullptr);
    r.json["recip_upper"] = l.l3_hi ? Json(*l.l3_hi) : Json(nullptr);
    if (l.l2_rhs) text << "sum 1/p^2 <= " << format_double(*l.l2_rhs) << '\n';
    if (l.l3_lo) text << format_double(*l.l3_lo) << " < sum 1/p < " << format_double(*l.l3_hi) << '\n';
    if (!l.l2_rhs && !l.l3_lo) text << "no bound applies (a < 2)\n";
    r.text = text.str();
    return r;
  }
  throw UsageError("bounds: give --sample-count, --harmonic, --mu, --n [--a --d], --log-n, or --a --b");
}

// estimate -----------------------------------------------------------------

struct EstimateArgs {
  std::string n, group = "sym", event = "window", lo, hi, set;
  std::string trials = "100000", seed = "1", level = "0.99", block = "4096";
  unsigned threads = 1;
  bool exact = false;
};

Report estimate(const EstimateArgs& a) {
  if (a.n.empty()) throw UsageError("estimate: --n is required");
  const std::uint64_t n = integer_flag("n", a.n);
  const Group group = group_flag(a.group);
  Event event;
  std::optional<PrimeWindow> window;
  if (a.event == "avoid") {
    event = event::Avoids{ForbiddenSet(n, set_flag("set", a.set))};
  } else {
    if (a.lo.empty() || a.hi.empty()) throw UsageError("estimate: --lo and --hi are required for this event");
    window = PrimeWindow::interval(floor_flag("lo", a.lo), floor_flag("hi", a.hi));
    if (a.event == "window")
      event = event::PreCycleInWindow{*window};
    else if (a.event == "t")
      event = event::InT{*window};
    else
      event = event::InU{*window};
  }
  EstimateOptions options;
  options.level = real_flag("level", a.level);
  options.threads = a.threads;
  options.block_size = integer_flag("block", a.block);
  const auto est = estimate_event(n, event, group, integer_flag("trials", a.trials), integer_flag("seed", a.seed),
                                  options);

  Report r;
  r.json["command"] = "estimate";
  r.json["n"] = n;
  r.json["group"] = std::string(to_string(group));
  r.json["event"] = describe(event);
  r.json["estimate"] = to_json(est);
  std::ostringstream text;
  text << describe(event) << " in " << to_string(group) << "(" << n << "): " << format_double(est.p_hat) << " +- "
       << format_double(est.half_width) << " [" << format_double(est.lo) << ", " << format_double(est.hi) << "] ("
       << est.successes << "/" << est.trials << ", level " << format_double(est.level) << ")\n";
  if (a.exact) {
    ExactProb v;
    if (a.event == "avoid") {
      v = avoid_proportion(std::get<event::Avoids>(event).forbidden, group);
    } else if (a.event == "window") {
      v = window_proportion(n, *window, group);
    } else {
      const auto tu = exact_TU(n, *window, group);
      v = a.event == "t" ? tu.t : tu.u;
    }
    r.json["exact"] = exact_json(v.value());
    text << "exact " << v.to_string() << " (" << format_double(v.to_double()) << ")\n";
  }
  r.text = text.str();
  return r;
}

// recognize ----------------------------------------------------------------

struct RecognizeArgs {
  std::string n, group = "sym", seed = "1", epsilon = "0.01", c0 = "1/19", p_lo, p_hi, input, runs = "1";
};

Report recognize(const RecognizeArgs& a) {
  const double eps = real_flag("epsilon", a.epsilon);
  const double c0 = real_flag("c0", a.c0);
  const std::uint64_t seed = integer_flag("seed", a.seed);
  const std::uint64_t runs = integer_flag("runs", a.runs);
  if (runs == 0) throw UsageError("recognize: --runs must be positive");
  std::optional<PrimeRange> range;
  if (!a.p_lo.empty() || !a.p_hi.empty()) {
    range = PrimeRange{};
    if (!a.p_lo.empty()) range->lo = integer_flag("p-lo", a.p_lo);
    range->hi = a.p_hi.empty() ? std::numeric_limits<std::uint64_t>::max() : integer_flag("p-hi", a.p_hi);
  }

  Report r;
  r.json["command"] = "recognize";
  if (!a.input.empty()) {
    if (runs != 1) throw UsageError("recognize: --runs applies to generated sources only");
    auto source = ReplaySource::from_file(a.input);
    const auto out = run_recognizer(source, eps, c0, range);
    r.json["source"] = source.description();
    r.json["outcome"] = to_json(out);
    r.text = out.statement() + "\n";
    return r;
  }
  if (a.n.empty()) throw UsageError("recognize: give --n or --input");
  const std::uint64_t n = integer_flag("n", a.n);
  const Group group = group_flag(a.group);
  std::uint64_t found = 0;
  Json outcomes = Json::array();
  std::string last;
  for (std::uint64_t i = 0; i < runs; ++i) {
    UniformGroupSource source(n, group, runs == 1 ? seed : derive_seed(seed, i));
    const auto out = run_recognizer(source, eps, c0, range);
    if (out.found()) ++found;
    if (runs == 1) {
      r.json["source"] = source.description();
      r.json["outcome"] = to_json(out);
      last = out.statement();
    } else {
      outcomes.push_back({{"status", out.found() ? "found" : "not_found"},
                          {"draws_used", out.draws_used},
                          {"prime", out.prime}});
    }
  }
  if (runs == 1) {
    r.text = last + "\n";
  } else {
    r.json["n"] = n;
    r.json["group"] = std::string(to_string(group));
    r.json["runs"] = runs;
    r.json["found"] = found;
    r.json["frequency"] = static_cast<double>(found) / static_cast<double>(runs);
    r.json["outcomes"] = outcomes;
    r.text = "found a pre-p-cycle in " + std::to_string(found) + "/" + std::to_string(runs) + " runs\n";
  }
  return r;
}

void render(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << r.json.dump(2) << '\n';
  } else if (format == "csv") {
    if (!r.rows.empty())
      write_csv(out, r.rows);
    else
      write_flat_csv(out, r.json);
  } else {
    out << r.text;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and sampled statistics of pre-p-cycles in S_n and A_n"};
  app.name("ppc");
  app.require_subcommand(1);

  Common common;
  DensityArgs density_args;
  auto* cmd_density = app.add_subcommand("density", "exact sigma, pre-p-cycle and window proportions");
  add_common(cmd_density, common);
  cmd_density->add_option("--n", density_args.n, "degree");
  cmd_density->add_option("--p", density_args.p, "prime");
  cmd_density->add_option("--lo", density_args.lo, "window (lo, hi]");
  cmd_density->add_option("--hi", density_args.hi, "window (lo, hi]");
  cmd_density->add_option("--group", density_args.group, "sym or alt")->capture_default_str();
  cmd_density->add_flag("--sigma", density_args.sigma, "sigma_n(p'), proportion with no cycle length divisible by p");
  cmd_density->add_flag("--tu", density_args.tu, "also print the T and U proportions of the window");
  cmd_density->add_flag("--cycle", density_args.cycle, "proportion of elements with a power that is a cycle");

  AvoidArgs avoid_args;
  auto* cmd_avoid = app.add_subcommand("avoid", "avoidance proportion for a forbidden set of cycle lengths");
  add_common(cmd_avoid, common);
  cmd_avoid->add_option("--n", avoid_args.n, "degree");
  cmd_avoid->add_option("--set", avoid_args.set, "forbidden lengths, e.g. 1,3,5-7");
  cmd_avoid->add_option("--group", avoid_args.group, "sym or alt")->capture_default_str();

  VerifyPrimesArgs vp_args;
  auto* cmd_vp = app.add_subcommand("verify-primes", "prime-counting bounds and reciprocal-sum grids");
  add_common(cmd_vp, common);
  cmd_vp->add_option("--limit", vp_args.limit, "sieve limit")->capture_default_str();
  cmd_vp->add_option("--grid", vp_args.grid, "exhaustive (a, b) grid up to this value")->capture_default_str();
  cmd_vp->add_option("--pairs", vp_args.pairs, "random (a, b) pairs up to --limit")->capture_default_str();
  cmd_vp->add_option("--seed", vp_args.seed, "seed for the random pairs")->capture_default_str();
  cmd_vp->add_option("--sieve-cache", vp_args.sieve_cache, std::string("sieve cache file (default $") +
                                                               kSieveCacheEnv + ")");

  VerifyR2Args r2_args;
  auto* cmd_r2 = app.add_subcommand("verify-r2", "sweep pi0(n) >= 1/19");
  add_common(cmd_r2, common);
  cmd_r2->add_option("--max", r2_args.max, "largest n")->capture_default_str();
  cmd_r2->add_option("--threads", r2_args.threads, "worker threads")->check(CLI::PositiveNumber);
  cmd_r2->add_option("--sieve-cache", r2_args.sieve_cache, std::string("sieve cache file (default $") +
                                                               kSieveCacheEnv + ")");

  BoundsArgs bounds_args;
  auto* cmd_bounds = app.add_subcommand("bounds", "evaluate the explicit bounds");
  add_common(cmd_bounds, common);
  cmd_bounds->add_flag("--sample-count", bounds_args.sample_count, "draws needed for failure probability epsilon");
  cmd_bounds->add_option("--epsilon", bounds_args.epsilon);
  cmd_bounds->add_option("--c0", bounds_args.c0);
  cmd_bounds->add_option("--n", bounds_args.n, "degree");
  cmd_bounds->add_option("--log-n", bounds_args.log_n, "natural log of the degree");
  cmd_bounds->add_option("--a", bounds_args.a);
  cmd_bounds->add_option("--b", bounds_args.b);
  cmd_bounds->add_option("--d", bounds_args.d);
  cmd_bounds->add_option("--delta", bounds_args.delta, "1 for S_n, 2 for A_n")->capture_default_str();
  cmd_bounds->add_option("--mu", bounds_args.mu, "sum of 1/k over the forbidden set");
  cmd_bounds->add_option("--harmonic", bounds_args.harmonic, "check 0 < H_n - log n - gamma < 1/(2n)");

  EstimateArgs est_args;
  auto* cmd_est = app.add_subcommand("estimate", "Monte Carlo estimate with a Wilson interval");
  add_common(cmd_est, common);
  cmd_est->add_option("--n", est_args.n, "degree");
  cmd_est->add_option("--group", est_args.group, "sym or alt")->capture_default_str();
  cmd_est->add_option("--event", est_args.event)
      ->check(CLI::IsMember({"window", "avoid", "t", "u"}))
      ->capture_default_str();
  cmd_est->add_option("--lo", est_args.lo, "window (lo, hi]");
  cmd_est->add_option("--hi", est_args.hi, "window (lo, hi]");
  cmd_est->add_option("--set", est_args.set, "forbidden lengths for --event avoid");
  cmd_est->add_option("--trials", est_args.trials)->capture_default_str();
  cmd_est->add_option("--seed", est_args.seed)->capture_default_str();
  cmd_est->add_option("--level", est_args.level)->capture_default_str();
  cmd_est->add_option("--block", est_args.block, "trials per seeded block")->capture_default_str();
  cmd_est->add_option("--threads", est_args.threads, "worker threads")->check(CLI::PositiveNumber);
  cmd_est->add_flag("--exact", est_args.exact, "also print the exact proportion");

  RecognizeArgs rec_args;
  auto* cmd_rec = app.add_subcommand("recognize", "search random elements for a pre-p-cycle");
  add_common(cmd_rec, common);
  cmd_rec->add_option("--n", rec_args.n, "degree of a uniform source");
  cmd_rec->add_option("--group", rec_args.group, "sym or alt")->capture_default_str();
  cmd_rec->add_option("--seed", rec_args.seed)->capture_default_str();
  cmd_rec->add_option("--epsilon", rec_args.epsilon)->capture_default_str();
  cmd_rec->add_option("--c0", rec_args.c0)->capture_default_str();
  cmd_rec->add_option("--p-lo", rec_args.p_lo, "smallest admissible prime");
  cmd_rec->add_option("--p-hi", rec_args.p_hi, "largest admissible prime");
  cmd_rec->add_option("--input", rec_args.input, "replay permutations from a file (one-line notation)");
  cmd_rec->add_option("--runs", rec_args.runs, "independent runs with derived seeds")->capture_default_str();

  acceptance::Options self_options;
  int only = 0;
  auto* cmd_self = app.add_subcommand("selftest", "run the acceptance criteria");
  cmd_self->add_option("--seed", self_options.seed)->capture_default_str();
  cmd_self->add_option("--threads", self_options.threads, "worker threads")->check(CLI::PositiveNumber);
  cmd_self->add_option("--only", only, "single criterion")->check(CLI::Range(1, 8));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ppc: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  CLI::App* used = app.get_subcommands().front();
  try {
    if (used == cmd_self) return acceptance::run_all(self_options, out, only) ? kExitOk : kExitCheckFailed;

    Report report;
    if (used == cmd_density)
      report = density(density_args);
    else if (used == cmd_avoid)
      report = avoid(avoid_args);
    else if (used == cmd_vp)
      report = verify_primes(vp_args);
    else if (used == cmd_r2)
      report = verify_r2(r2_args);
    else if (used == cmd_bounds)
      report = bounds(bounds_args);
    else if (used == cmd_est)
      report = estimate(est_args);
    else
      report = recognize(rec_args);

    if (common.output.empty()) {
      render(report, common.format, out);
    } else {
      std::ofstream file(common.output);
      if (!file) throw UsageError("cannot open " + common.output);
      render(report, common.format, file);
      if (!file) throw std::runtime_error("write to " + common.output + " failed");
    }
    return report.status;
  } catch (const UsageError& e) {
    err << "ppc: " << e.what() << "\n\n" << used->help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "ppc " << used->get_name() << ": " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace ppc::cli
