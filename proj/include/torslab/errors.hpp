#pragma once

#include <stdexcept>
#include <string>

namespace torslab {

// Raised on malformed quiver-spec input; carries 1-based line/column.
struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(int line_, int col_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ", col " +
                           std::to_string(col_) + ": " + what_),
        line(line_),
        col(col_) {}
};

// Invalid programmatic input (bad preset parameters, dangling endpoints, ...).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configurable resource cap was hit (path enumeration, subset counts, ...).
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation was invoked outside its domain (non-serial algebra, undefined
// Nakayama permutation, ...).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace torslab
