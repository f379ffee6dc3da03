#pragma once

#include <stdexcept>
#include <string>

namespace strandkit {

/// Malformed or degenerate input. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A certified property failed to hold (checker rejection or violated bound).
/// Seeing one of these means a construction bug; the CLI maps it to exit code 1.
class CheckFailure : public std::runtime_error {
 public:
  explicit CheckFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace strandkit
