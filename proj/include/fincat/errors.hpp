#pragma once

#include <stdexcept>
#include <string>

namespace fincat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structurally malformed input: dangling references, shape mismatches,
/// unknown objects. Distinct from law violations, which are reported as
/// data by the validators.
struct InvalidArgument : Error {
  using Error::Error;
};

/// An enumeration or search would exceed a configured resource bound.
struct BoundExceeded : Error {
  using Error::Error;
};

/// A generator could not produce a lawful instance within its retry budget.
struct RetryExhausted : Error {
  using Error::Error;
};

/// Unparseable canonical name or instance file.
struct ParseError : Error {
  using Error::Error;
};

} // namespace fincat
