#include "ppc/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "ppc/errors.hpp"

namespace ppc {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational parse_decimal(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = body.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6)
      throw invalid_argument("malformed exponent in number: " + std::string(text));
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
    body = body.substr(0, e);
  }
  std::string digits;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      throw invalid_argument("malformed number: " + std::string(text));
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(body)) throw invalid_argument("malformed number: " + std::string(text));
    digits = std::string(body);
  }
  BigInt mantissa(digits, 10);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational result = exponent < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale);
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw invalid_argument("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+'))
      num_digits.remove_prefix(1);
    if (!all_digits(num_digits) || !all_digits(den))
      throw invalid_argument("malformed fraction: " + std::string(text));
    BigInt d(std::string(den), 10);
    if (d == 0) throw invalid_argument("zero denominator: " + std::string(text));
    BigInt n(std::string(num_digits), 10);
    if (!num.empty() && num.front() == '-') n = -n;
    Rational r(n, d);
    r.canonicalize();
    return r;
  }
  return parse_decimal(text);
}

std::string to_fraction_string(const Rational& value) {
  Rational r = value;
  r.canonicalize();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

double double_below(const Rational& value) {
  double d = value.get_d();
  if (Rational(d) > value) d = std::nextafter(d, -HUGE_VAL);
  return d;
}

double double_above(const Rational& value) {
  double d = value.get_d();
  if (Rational(d) < value) d = std::nextafter(d, HUGE_VAL);
  return d;
}

Rational from_double(double value) {
  if (!std::isfinite(value)) throw invalid_argument("non-finite value has no rational form");
  return Rational(value);
}

ExactProb::ExactProb(Rational value) : value_(std::move(value)) {
  value_.canonicalize();
  if (value_ < 0 || value_ > 1)
    throw invalid_argument("probability outside [0,1]: " + to_fraction_string(value_));
}

BigInt factorial(unsigned long n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

}  // namespace ppc
