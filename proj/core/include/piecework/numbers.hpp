#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace piecework {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    Int r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

} // namespace piecework
