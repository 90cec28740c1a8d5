#pragma once

#include <stdexcept>
#include <string>

namespace localcop {

// Argument outside the mathematical domain of a function (p <= 0 for a
// quantile, theta outside the family range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Root bracket whose endpoints do not straddle a sign change.
class InvalidBracketError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Kernel window with too little effective data to identify the local fit.
class DegenerateWindowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Misaligned or too-short input sequences.
class LengthError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Structurally invalid configuration (bad degree, empty grid, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// File could not be read or written, or its contents do not parse.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace localcop
