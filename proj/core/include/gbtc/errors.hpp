#pragma once

#include <stdexcept>
#include <string>

namespace gbtc {

/// Malformed input: unknown ids, bad files, out-of-range generators.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical hypothesis of the requested computation does not hold
/// (disconnected graph, too few essential vertices, r too small, ...).
class InapplicableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The discretized configuration complex would exceed the cell budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gbtc
