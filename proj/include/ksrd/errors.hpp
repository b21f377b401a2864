#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace ksrd {

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph files, labeling files, spec tokens).
class format_error : public error {
 public:
  using error::error;
};

/// Parameter outside the admissible range of a family or operation.
class range_error : public error {
 public:
  using error::error;
};

/// A configured resource budget was exhausted before a verdict was reached.
/// Never stands in for a wrong answer: callers either get the exact result
/// or this error. When a search was interrupted, the best upper bound found
/// so far is attached (not proven optimal).
class budget_error : public error {
 public:
  explicit budget_error(const std::string& what,
                        std::optional<int> best_upper_bound = std::nullopt)
      : error(what), best_upper_bound_(best_upper_bound) {}

  std::optional<int> best_upper_bound() const { return best_upper_bound_; }

 private:
  std::optional<int> best_upper_bound_;
};

/// A self-check failed. Indicates a bug in this library, not bad input.
class internal_error : public error {
 public:
  using error::error;
};

}  // namespace ksrd
