#pragma once

#include <stdexcept>
#include <string>

namespace lcmf {

// Raised when a multiset enumeration visits more nodes than its budget allows.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by to_decimal when the rendered value would exceed the digit budget.
class DigitBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lcmf
