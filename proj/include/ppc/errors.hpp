#pragma once

#include <stdexcept>
#include <string>

namespace ppc {

/// A precondition on an operation's arguments was violated.
class invalid_argument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An index or range lies outside what a table was built for.
class out_of_range : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// The request exceeds exact-enumeration capacity; use Monte Carlo instead.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element source could not produce a permutation.
class source_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ppc
