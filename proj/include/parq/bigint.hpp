#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace parq {

// Arbitrary-precision signed integer.  Everything countable in this library
// (determinants, tree counts, quotient dimensions, polynomial coefficients)
// is an Int; machine ints appear only as indices and exponents.
using Int = boost::multiprecision::cpp_int;

// Exact rational, used where division cannot be avoided (toppling bounds,
// homology over the rationals).
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

} // namespace parq
