#include "ppc/primes.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ppc/compensated_sum.hpp"
#include "ppc/errors.hpp"

namespace ppc {

namespace {

constexpr std::array<char, 5> kCacheMagic{'P', 'P', 'C', 'T', '1'};
constexpr double kNearMargin = 1e-9;

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<unsigned char, 8> bytes{};
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

std::uint64_t get_u64(std::istream& in) {
  std::array<unsigned char, 8> bytes{};
  if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size()))
    throw invalid_argument("sieve cache truncated");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  return v;
}

void put_f64(std::ostream& out, double v) { put_u64(out, std::bit_cast<std::uint64_t>(v)); }
double get_f64(std::istream& in) { return std::bit_cast<double>(get_u64(in)); }

std::uint64_t floor_index(double x, const char* name) {
  if (!(x >= 0)) throw invalid_argument(std::string(name) + " must be >= 0");
  return static_cast<std::uint64_t>(std::floor(x));
}

std::pair<std::uint64_t, std::uint64_t> checked_range(const PrimeTable& table, double a,
                                                      double b) {
  if (a > b) throw invalid_argument("sum range requires a <= b");
  const std::uint64_t lo = floor_index(a, "a");
  const std::uint64_t hi = floor_index(b, "b");
  if (hi > table.limit())
    throw out_of_range("b = " + std::to_string(hi) + " exceeds sieve limit " +
                       std::to_string(table.limit()));
  return {lo, hi};
}

}  // namespace

PrimeTable build_sieve(std::uint64_t limit) {
  if (limit < 2) throw invalid_argument("sieve limit must be >= 2");
  if (limit > std::uint64_t{4'000'000'000})
    throw invalid_argument("sieve limit too large for 32-bit prime counts");
  PrimeTable t;
  t.limit_ = limit;
  t.is_prime_.assign(limit + 1, true);
  t.is_prime_[0] = false;
  t.is_prime_[1] = false;
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (!t.is_prime_[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) t.is_prime_[j] = false;
  }
  t.fill_prefixes();
  return t;
}

void PrimeTable::fill_prefixes() {
  pi_prefix_.resize(limit_ + 1);
  s1_prefix_.resize(limit_ + 1);
  s2_prefix_.resize(limit_ + 1);
  std::uint32_t count = 0;
  CompensatedSum<double> s1;
  CompensatedSum<double> s2;
  for (std::uint64_t x = 0; x <= limit_; ++x) {
    if (is_prime_[x]) {
      ++count;
      const double p = static_cast<double>(x);
      s1 += 1.0 / p;
      s2 += 1.0 / (p * p);
    }
    pi_prefix_[x] = count;
    s1_prefix_[x] = s1.value();
    s2_prefix_[x] = s2.value();
  }
}

void PrimeTable::check_index(std::uint64_t x) const {
  if (x > limit_)
    throw out_of_range("x = " + std::to_string(x) + " exceeds sieve limit " +
                       std::to_string(limit_));
}

bool PrimeTable::is_prime(std::uint64_t x) const {
  check_index(x);
  return is_prime_[x];
}

std::uint64_t PrimeTable::pi(std::uint64_t x) const {
  check_index(x);
  return pi_prefix_[x];
}

double PrimeTable::s1(std::uint64_t x) const {
  check_index(x);
  return s1_prefix_[x];
}

double PrimeTable::s2(std::uint64_t x) const {
  check_index(x);
  return s2_prefix_[x];
}

std::vector<std::uint64_t> PrimeTable::primes_in(std::uint64_t lo, std::uint64_t hi) const {
  std::vector<std::uint64_t> out;
  hi = std::min(hi, limit_);
  for (std::uint64_t x = lo + 1; x <= hi; ++x)
    if (is_prime_[x]) out.push_back(x);
  return out;
}

void PrimeTable::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw invalid_argument("cannot write sieve cache " + path.string());
  out.write(kCacheMagic.data(), kCacheMagic.size());
  put_u64(out, limit_);
  std::vector<char> bits((limit_ + 1 + 7) / 8, 0);
  for (std::uint64_t x = 0; x <= limit_; ++x)
    if (is_prime_[x]) bits[x / 8] = static_cast<char>(bits[x / 8] | (1 << (x % 8)));
  out.write(bits.data(), static_cast<std::streamsize>(bits.size()));
  for (std::uint32_t v : pi_prefix_) put_f64(out, static_cast<double>(v));
  for (double v : s1_prefix_) put_f64(out, v);
  for (double v : s2_prefix_) put_f64(out, v);
  if (!out) throw invalid_argument("failed writing sieve cache " + path.string());
}

PrimeTable PrimeTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_argument("cannot open sieve cache " + path.string());
  std::array<char, 5> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kCacheMagic)
    throw invalid_argument("not a sieve cache (bad magic): " + path.string());
  const std::uint64_t limit = get_u64(in);
  if (limit < 2 || limit > std::uint64_t{4'000'000'000})
    throw invalid_argument("sieve cache has invalid limit");
  PrimeTable t;
  t.limit_ = limit;
  std::vector<char> bits((limit + 1 + 7) / 8);
  if (!in.read(bits.data(), static_cast<std::streamsize>(bits.size())))
    throw invalid_argument("sieve cache truncated");
  t.is_prime_.resize(limit + 1);
  for (std::uint64_t x = 0; x <= limit; ++x) t.is_prime_[x] = (bits[x / 8] >> (x % 8)) & 1;
  std::vector<double> stored(3 * (limit + 1));
  for (auto& v : stored) v = get_f64(in);
  if (in.peek() != std::char_traits<char>::eof())
    throw invalid_argument("sieve cache has trailing bytes");
  // The prefixes are a deterministic function of the bitset; recompute and
  // demand bit-for-bit agreement.
  t.fill_prefixes();
  for (std::uint64_t x = 0; x <= limit; ++x) {
    if (stored[x] != static_cast<double>(t.pi_prefix_[x]) || stored[limit + 1 + x] != t.s1_prefix_[x] ||
        stored[2 * (limit + 1) + x] != t.s2_prefix_[x])
      throw invalid_argument("sieve cache prefix tables disagree with bitset at x = " + std::to_string(x));
  }
  // Spot-check the bitset itself against trial division on a prefix.
  for (std::uint64_t x = 0; x <= std::min<std::uint64_t>(limit, 10'000); ++x)
    if (t.is_prime_[x] != is_prime_trial(x))
      throw invalid_argument("sieve cache bitset is wrong at x = " + std::to_string(x));
  return t;
}

PrimeTable build_or_load_sieve(std::uint64_t limit, const std::filesystem::path& path) {
  std::error_code ec;
  if (!path.empty() && std::filesystem::exists(path, ec)) {
    try {
      PrimeTable cached = PrimeTable::load(path);
      if (cached.limit() >= limit) return cached;
    } catch (const invalid_argument&) {
      // fall through and rebuild
    }
  }
  PrimeTable fresh = build_sieve(limit);
  if (!path.empty()) {
    try {
      fresh.save(path);
    } catch (const invalid_argument&) {
    }
  }
  return fresh;
}

double sum_recip(const PrimeTable& table, double a, double b) {
  const auto [lo, hi] = checked_range(table, a, b);
  return table.s1(hi) - table.s1(lo);
}

double sum_recip_sq(const PrimeTable& table, double a, double b) {
  const auto [lo, hi] = checked_range(table, a, b);
  return table.s2(hi) - table.s2(lo);
}

Rational exact_sum_recip(const PrimeTable& table, std::uint64_t a, std::uint64_t b) {
  checked_range(table, static_cast<double>(a), static_cast<double>(b));
  // Accumulate over a common denominator: num/den + 1/p = (num*p + den)/(den*p).
  BigInt num = 0;
  BigInt den = 1;
  for (std::uint64_t p = a + 1; p <= b; ++p) {
    if (!table.is_prime(p)) continue;
    num = num * p + den;
    den *= p;
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational exact_sum_recip_sq(const PrimeTable& table, std::uint64_t a, std::uint64_t b) {
  checked_range(table, static_cast<double>(a), static_cast<double>(b));
  BigInt num = 0;
  BigInt den = 1;
  for (std::uint64_t p = a + 1; p <= b; ++p) {
    if (!table.is_prime(p)) continue;
    const BigInt sq = BigInt(p) * p;
    num = num * sq + den;
    den *= sq;
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool verify_pi_bounds(const PrimeTable& table, std::uint64_t x) {
  if (x < 11) throw invalid_argument("pi bounds are only asserted for integers x >= 11");
  const double count = static_cast<double>(table.pi(x));
  const double xd = static_cast<double>(x);
  const double log_x = std::log(xd);
  const double lower = xd / log_x;
  const double upper = lower * (1.0 + 1.5 / log_x);
  if (std::abs(count - lower) >= kNearMargin && std::abs(upper - count) >= kNearMargin)
    return lower <= count && count <= upper;

  const HighPrecision hx(x);
  const HighPrecision hlog = boost::multiprecision::log(hx);
  const HighPrecision hlower = hx / hlog;
  const HighPrecision hupper = hlower * (1 + HighPrecision(3) / (2 * hlog));
  const HighPrecision hcount(table.pi(x));
  return hlower <= hcount && hcount <= hupper;
}

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d <= n / d; d += 6)
    if (n % d == 0 || n % (d + 2) == 0) return false;
  return true;
}

}  // namespace ppc
