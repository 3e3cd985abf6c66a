#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace qtop {

// Arbitrary-precision integers and rationals. State sums overflow 64-bit
// coefficients already at moderate strand counts and levels.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad braid text, bad file, inconsistent colouring.
struct ParseError : Error {
  using Error::Error;
};

// Math-domain failures: division by zero in the cyclotomic field,
// zero normalizer in the surgery formula, unusable level.
struct DomainError : Error {
  using Error::Error;
};

// A violated internal invariant; always a bug, never a user error.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace qtop
