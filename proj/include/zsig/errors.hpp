#pragma once

#include <stdexcept>
#include <string>

namespace zsig {

// Malformed polynomial / rational / sweep-file input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerator or denominator outgrew the configured digit budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The orbit of 0 is finite, so the Zsigmondy machinery does not apply.
class FiniteOrbitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its documented domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace zsig
