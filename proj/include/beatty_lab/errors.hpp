#pragma once

#include <stdexcept>
#include <string>

namespace beatty_lab {

/// Argument outside the domain of a sequence or identity (n = 0, even r, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A quadratic number was constructed with d = 0.
class InvalidDenominator : public std::invalid_argument {
 public:
  InvalidDenominator() : std::invalid_argument("quadratic number: denominator must be nonzero") {}
};

/// Linear form called with a sign prefix whose length does not match j.
class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Closed form requested for a generator it was not derived for.
class UnsupportedGenerator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace beatty_lab
