#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace ei {

using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Nearest-integer quotient (ties away from zero), so |a - q*b| <= |b|/2.
inline Int round_div(const Int& a, const Int& b) {
    Int aa = abs_int(a);
    Int bb = abs_int(b);
    Int q = (2 * aa + bb) / (2 * bb);
    return ((a < 0) != (b < 0)) ? Int(-q) : q;
}

inline std::string to_string(const Int& a) { return a.str(); }

}  // namespace ei
