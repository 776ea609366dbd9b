#include "ppc/perm.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "ppc/errors.hpp"

namespace ppc {

std::string_view to_string(Group g) { return g == Group::sym ? "sym" : "alt"; }

Group parse_group(std::string_view text) {
  if (text == "sym" || text == "S") return Group::sym;
  if (text == "alt" || text == "A") return Group::alt;
  throw invalid_argument("unknown group '" + std::string(text) + "' (expected sym or alt)");
}

Permutation Permutation::identity(std::size_t n) {
  if (n > kMaxDegree) throw invalid_argument("degree exceeds dense permutation bound");
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::from_zero_based(std::vector<std::uint32_t> images) {
  if (images.size() > kMaxDegree) throw invalid_argument("degree exceeds dense permutation bound");
  std::vector<bool> seen(images.size(), false);
  for (std::uint32_t v : images) {
    if (v >= images.size() || seen[v])
      throw invalid_argument("images do not form a bijection on {1.." +
                             std::to_string(images.size()) + "}");
    seen[v] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(std::span<const std::uint64_t> images) {
  std::vector<std::uint32_t> zero(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] < 1 || images[i] > images.size())
      throw invalid_argument("image " + std::to_string(images[i]) + " outside {1.." +
                             std::to_string(images.size()) + "}");
    zero[i] = static_cast<std::uint32_t>(images[i] - 1);
  }
  return from_zero_based(std::move(zero));
}

CycleType::CycleType(std::uint64_t n, Parts parts) : n_(n), parts_(std::move(parts)) {
  std::uint64_t total = 0;
  for (const auto& [part, mult] : parts_) {
    if (part == 0 || mult == 0) throw invalid_argument("cycle type parts and multiplicities must be >= 1");
    total += part * mult;
  }
  if (total != n_) throw invalid_argument("cycle type parts do not sum to the degree");
}

CycleType CycleType::from_lengths(std::span<const std::uint64_t> lengths) {
  Parts parts;
  std::uint64_t n = 0;
  for (std::uint64_t len : lengths) {
    if (len == 0) throw invalid_argument("cycle length must be >= 1");
    ++parts[len];
    n += len;
  }
  return CycleType(n, std::move(parts));
}

std::uint64_t CycleType::multiplicity(std::uint64_t k) const {
  auto it = parts_.find(k);
  return it == parts_.end() ? 0 : it->second;
}

int CycleType::sign() const {
  std::uint64_t transpositions = 0;
  for (const auto& [part, mult] : parts_) transpositions += (part - 1) * mult;
  return transpositions % 2 == 0 ? 1 : -1;
}

std::string CycleType::to_string() const {
  std::string out = "<";
  bool first = true;
  for (const auto& [part, mult] : parts_) {
    if (!first) out += ' ';
    first = false;
    out += std::to_string(part) + "^" + std::to_string(mult);
  }
  return out + ">";
}

Permutation sample_uniform(std::size_t n, Parity parity, Rng& rng) {
  if (n == 0) throw invalid_argument("degree must be >= 1");
  if (parity == Parity::even && n < 3)
    throw invalid_argument("sampling from A_n requires n >= 3");
  if (n > Permutation::kMaxDegree) throw invalid_argument("degree exceeds dense permutation bound");
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0u);
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t j = uniform_below(rng, i + 1);
    std::swap(images[i], images[j]);
  }
  auto result = Permutation::from_zero_based(std::move(images));
  if (parity == Parity::even && sign(result) < 0) {
    std::vector<std::uint32_t> fixed(result.images().begin(), result.images().end());
    std::swap(fixed[0], fixed[1]);
    result = Permutation::from_zero_based(std::move(fixed));
  }
  return result;
}

int sign(const Permutation& g) {
  const std::size_t n = g.degree();
  std::vector<bool> seen(n, false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = g[j]) seen[j] = true;
  }
  return (n - cycles) % 2 == 0 ? 1 : -1;
}

CycleType cycle_type(const Permutation& g) {
  const std::size_t n = g.degree();
  std::vector<bool> seen(n, false);
  CycleType::Parts parts;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = g[j]) {
      seen[j] = true;
      ++len;
    }
    ++parts[len];
  }
  return CycleType(n, std::move(parts));
}

std::set<std::uint64_t> pre_cycle_targets(const CycleType& t) {
  std::set<std::uint64_t> out;
  for (const auto& [part, mult] : t.parts())
    if (is_pre_cycle_target(t.parts(), part)) out.insert(part);
  return out;
}

Permutation power(const Permutation& g, const BigInt& exponent) {
  if (exponent < 0) throw invalid_argument("exponent must be nonnegative");
  const std::size_t n = g.degree();
  std::vector<std::uint32_t> out(n);
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> cycle;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    cycle.clear();
    for (std::size_t j = i; !seen[j]; j = g[j]) {
      seen[j] = true;
      cycle.push_back(static_cast<std::uint32_t>(j));
    }
    const std::size_t len = cycle.size();
    const BigInt shift_big = exponent % BigInt(static_cast<unsigned long>(len));
    const std::size_t shift = shift_big.get_ui();
    for (std::size_t pos = 0; pos < len; ++pos) out[cycle[pos]] = cycle[(pos + shift) % len];
  }
  return Permutation::from_zero_based(std::move(out));
}

CyclePower extract_cycle_power(const Permutation& g, std::uint64_t k) {
  const CycleType t = cycle_type(g);
  if (k < 2) throw invalid_argument("target length must be > 1");
  const std::uint64_t mk = t.multiplicity(k);
  if (mk == 0)
    throw invalid_argument("not a pre-" + std::to_string(k) + "-cycle: g has no " +
                           std::to_string(k) + "-cycle (m_k = 0)");
  if (mk > 1)
    throw invalid_argument("not a pre-" + std::to_string(k) + "-cycle: g has " +
                           std::to_string(mk) + " cycles of length " + std::to_string(k) +
                           " (need m_k = 1)");
  BigInt exponent = 1;
  for (const auto& [part, mult] : t.parts()) {
    if (part == k) continue;
    if (const auto d = std::gcd(part, k); d != 1)
      throw invalid_argument("not a pre-" + std::to_string(k) + "-cycle: cycle length " +
                             std::to_string(part) + " shares the factor " + std::to_string(d) +
                             " with " + std::to_string(k));
    mpz_lcm_ui(exponent.get_mpz_t(), exponent.get_mpz_t(), part);
  }
  return {exponent, power(g, exponent)};
}

namespace {

std::uint64_t parse_point(std::string_view token) {
  std::uint64_t v = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || token.empty())
    throw invalid_argument("malformed point '" + std::string(token) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t n) {
  if (n > Permutation::kMaxDegree) throw invalid_argument("degree exceeds dense permutation bound");
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(n, false);
  std::string_view rest = trim(text);
  while (!rest.empty()) {
    if (rest.front() != '(') throw invalid_argument("expected '(' in cycle notation");
    const auto close = rest.find(')');
    if (close == std::string_view::npos) throw invalid_argument("unbalanced '(' in cycle notation");
    std::string_view body = trim(rest.substr(1, close - 1));
    rest = trim(rest.substr(close + 1));
    if (body.empty()) continue;
    std::vector<std::uint32_t> cycle;
    while (true) {
      const auto comma = body.find(',');
      const std::uint64_t pt = parse_point(trim(body.substr(0, comma)));
      if (pt < 1 || pt > n)
        throw invalid_argument("point " + std::to_string(pt) + " outside {1.." + std::to_string(n) + "}");
      if (used[pt - 1]) throw invalid_argument("point " + std::to_string(pt) + " repeated");
      used[pt - 1] = true;
      cycle.push_back(static_cast<std::uint32_t>(pt - 1));
      if (comma == std::string_view::npos) break;
      body = body.substr(comma + 1);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return Permutation::from_zero_based(std::move(images));
}

Permutation parse_one_line(std::string_view text) {
  std::vector<std::uint64_t> values;
  std::string_view rest = trim(text);
  while (!rest.empty()) {
    std::size_t end = 0;
    while (end < rest.size() && !std::isspace(static_cast<unsigned char>(rest[end]))) ++end;
    values.push_back(parse_point(rest.substr(0, end)));
    rest = trim(rest.substr(end));
  }
  if (values.empty()) throw invalid_argument("empty permutation");
  return Permutation::from_one_based(values);
}

std::string to_cycle_string(const Permutation& g) {
  std::string out;
  std::vector<bool> seen(g.degree(), false);
  for (std::size_t i = 0; i < g.degree(); ++i) {
    if (seen[i] || g[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = g[j]) {
      seen[j] = true;
      if (j != i) out += ',';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::string to_one_line_string(const Permutation& g) {
  std::string out;
  for (std::size_t i = 0; i < g.degree(); ++i) {
    if (i) out += ' ';
    out += std::to_string(g[i] + 1);
  }
  return out;
}

}  // namespace ppc
