#pragma once

#include <stdexcept>
#include <string>

namespace mho {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A documented size cap or the 64-bit arithmetic range was exceeded.
struct CapacityError : Error {
  using Error::Error;
};

// An argument violated an operation's stated precondition.
struct DomainError : Error {
  using Error::Error;
};

// Malformed instance or report file.
struct ParseError : Error {
  using Error::Error;
};

// A property that is guaranteed under the documented hypotheses failed at
// runtime: either an unverified input broke a hypothesis, or there is a bug
// upstream. Carries diagnostics in the message.
struct ClosureError : Error {
  using Error::Error;
};

inline long long checked_add(long long a, long long b) {
  long long r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw CapacityError("64-bit overflow in set-function arithmetic");
  }
  return r;
}

inline long long checked_sub(long long a, long long b) {
  long long r = 0;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw CapacityError("64-bit overflow in set-function arithmetic");
  }
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw CapacityError("64-bit overflow in set-function arithmetic");
  }
  return r;
}

}  // namespace mho
