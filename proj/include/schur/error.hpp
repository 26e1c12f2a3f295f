// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace schur {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input (bad indices, inconsistent presentation
// fed to a structural operation, invalid family parameters, ...).
struct structural_error : error {
  using error::error;
};

// A configured cap was exceeded (brute-force cap, coset limit, oracle cap).
struct capacity_error : error {
  using error::error;
};

// Text input could not be parsed; carries a 1-based source position.
struct parse_error : error {
  int line = 0;
  int column = 0;
  parse_error(const std::string& msg, int ln, int col)
      : error(msg + " at " + std::to_string(ln) + ":" + std::to_string(col)),
        line(ln),
        column(col) {}
};

// An internal invariant failed; always a bug, never user error.
struct internal_error : error {
  using error::error;
};

}  // namespace schur
