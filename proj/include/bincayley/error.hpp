#pragma once

#include <stdexcept>
#include <string>

namespace bincayley {

// Caller broke a precondition or supplied malformed input.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well formed but exceeds a configured size guard.
class SizeLimitExceeded : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// An internal invariant failed; indicates a bug, never a user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class EmptyPolytope : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] void throw_invalid(const std::string& what);
[[noreturn]] void throw_internal(const std::string& what);

inline void require(bool cond, const std::string& what) {
  if (!cond) throw_invalid(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw_internal(what);
}

}  // namespace bincayley
