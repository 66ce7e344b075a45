#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace grassperm {

// Exact integer used for every count. Signed so that alternating sums can
// pass through negative partial values; final counts are nonnegative.
using CountValue = boost::multiprecision::cpp_int;

inline std::string to_string(const CountValue& v) { return v.str(); }

// Raised when a closed form produces a value that must be exact (a halving, a
// ballot quotient) but is not. Indicates a formula-domain bug, never user error.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised on inputs outside an operation's domain (non-Grassmannian pattern,
// word not in the avoider set, malformed path, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an exhaustive enumeration would exceed its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// v / d, throwing ConsistencyError if d does not divide v.
inline CountValue exact_divide(const CountValue& v, long d, const char* what) {
  CountValue q, r;
  boost::multiprecision::divide_qr(v, CountValue(d), q, r);
  if (r != 0) {
    throw ConsistencyError(std::string(what) + ": " + v.str() + " is not divisible by " +
                           std::to_string(d));
  }
  return q;
}

inline CountValue exact_half(const CountValue& v, const char* what) {
  return exact_divide(v, 2, what);
}

}  // namespace grassperm
