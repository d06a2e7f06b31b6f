#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace krv {

/// Arbitrary-precision integer used for every coefficient in the library.
using Int = boost::multiprecision::cpp_int;

/// Exact rational, used where series division can leave the integers.
using Rational = boost::multiprecision::cpp_rational;

}  // namespace krv
