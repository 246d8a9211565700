#pragma once

#include <stdexcept>
#include <string>

namespace bw {

/// Malformed input text (JSON syntax). Carries 1-based line/column.
struct ParseError : std::runtime_error {
  int line = 0, col = 0;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                           std::to_string(col_) + ")"),
        line(line_),
        col(col_) {}
};

/// Structurally invalid data: dimension mismatches, negative ranks,
/// unknown fields, broken invariants.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation was called without a stated precondition.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A Reeb parameter failed the positivity/genericity checks.
struct ParameterRejected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A bounded search ran out of candidates; the caller may enlarge the box.
struct SearchExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bw
