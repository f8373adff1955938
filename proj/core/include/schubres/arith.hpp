#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace schubres {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k); zero outside 0 <= k <= n.
Integer binomial(long n, long k);

inline std::string to_string(const Integer& x) { return x.str(); }

}  // namespace schubres
