#pragma once

#include <stdexcept>
#include <string>

namespace fairnet {

// File/grammar-level failure; message carries a 1-based line number.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structural invariant violated (bad valuation entry, self-loop, shared good...).
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation's stated precondition does not hold (size guard, wrong mode...).
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fairnet
