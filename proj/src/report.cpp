#include "ppc/report.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

namespace ppc {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

Json to_json(const ExactProb& p) { return p.to_string(); }

Json to_json(const BoundReport& r) {
  Json inputs = Json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  Json j = {{"name", r.name}, {"inputs", inputs}, {"lhs", r.lhs}, {"rhs", r.rhs}};
  if (r.rhs_hi) j["rhs_hi"] = *r.rhs_hi;
  j["holds"] = r.holds;
  j["margin"] = r.margin;
  j["refined"] = r.refined;
  return j;
}

Json to_json(const GridSummary& s) {
  Json failing = Json::array();
  for (const auto& f : s.failing) failing.push_back(to_json(f));
  Json j = {{"name", s.name},       {"checked", s.checked}, {"failures", s.failures},
            {"refined", s.refined}, {"failing", failing}};
  j["tightest"] = s.tightest ? to_json(*s.tightest) : Json(nullptr);
  return j;
}

Json to_json(const R2Report& r) {
  Json exceptions = Json::array();
  for (const auto& e : r.exceptions)
    exceptions.push_back({{"n", e.n}, {"pi0", to_fraction_string(e.pi0)}, {"pi0_approx", to_double(e.pi0)}});
  return {{"n_min", r.n_min},
          {"n_max", r.n_max},
          {"threshold", "1/19"},
          {"exceptions", exceptions},
          {"min_pi0", r.min_pi0},
          {"argmin", r.argmin},
          {"min_pi0_from_11", r.min_pi0_from_11},
          {"argmin_from_11", r.argmin_from_11},
          {"refined", r.refined}};
}

Json to_json(const Estimate& e) {
  return {{"p_hat", e.p_hat},       {"half_width", e.half_width}, {"lo", e.lo},
          {"hi", e.hi},             {"successes", e.successes},   {"trials", e.trials},
          {"seed", e.seed},         {"level", e.level}};
}

Json to_json(const RecognitionOutcome& o) {
  Json j = {{"status", o.found() ? "found" : "not_found"},
            {"statement", o.statement()},
            {"draws_used", o.draws_used},
            {"budget", o.budget},
            {"epsilon", o.epsilon},
            {"c0", o.c0},
            {"prime_range", {o.range.lo, o.range.hi}}};
  if (o.found()) {
    j["prime"] = o.prime;
    j["element"] = to_cycle_string(*o.element);
    j["exponent"] = o.exponent.get_str();
    j["witness"] = to_cycle_string(*o.witness);
  }
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_csv(std::ostream& out, std::span<const BoundReport> reports) {
  std::vector<std::string> columns;
  for (const auto& r : reports)
    for (const auto& [k, v] : r.inputs)
      if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);
  out << "name";
  for (const auto& c : columns) out << ',' << csv_field(c);
  out << ",lhs,rhs,rhs_hi,holds,margin\n";
  for (const auto& r : reports) {
    out << csv_field(r.name);
    for (const auto& c : columns) {
      out << ',';
      for (const auto& [k, v] : r.inputs)
        if (k == c) out << csv_field(v);
    }
    out << ',' << format_double(r.lhs) << ',' << format_double(r.rhs) << ','
        << (r.rhs_hi ? format_double(*r.rhs_hi) : "") << ',' << (r.holds ? "true" : "false") << ','
        << format_double(r.margin) << '\n';
  }
}

}  // namespace ppc
