#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ppc {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "a/b", an integer, or a finite decimal ("0.05", "-1.5e-3") exactly.
/// Throws ppc::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "numerator/denominator" in lowest terms; integers are written as "k/1".
std::string to_fraction_string(const Rational& value);

/// Double truncated toward zero (GMP semantics); exact when representable.
double to_double(const Rational& value);

/// Largest double <= value, and smallest double >= value.
double double_below(const Rational& value);
double double_above(const Rational& value);

/// Exact rational value of a finite double.
Rational from_double(double value);

/// Exact proportion in [0, 1].
class ExactProb {
 public:
  ExactProb() = default;
  /// Throws ppc::invalid_argument unless 0 <= value <= 1.
  explicit ExactProb(Rational value);

  const Rational& value() const { return value_; }
  double to_double() const { return ppc::to_double(value_); }
  std::string to_string() const { return to_fraction_string(value_); }

  friend bool operator==(const ExactProb& a, const ExactProb& b) { return a.value_ == b.value_; }

 private:
  Rational value_{0};
};

BigInt factorial(unsigned long n);

}  // namespace ppc
