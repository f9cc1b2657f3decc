#ifndef MOTIVIC_NUMERIC_HPP
#define MOTIVIC_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace motivic {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_pow(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// q^e for integer e, q != 0 when e < 0
inline Rat rat_pow(const Rat& q, long e) {
    if (e >= 0) {
        Rat r = 1, b = q;
        unsigned long n = static_cast<unsigned long>(e);
        while (n) {
            if (n & 1) r *= b;
            b *= b;
            n >>= 1;
        }
        return r;
    }
    return 1 / rat_pow(q, -e);
}

inline int sign_of(const Int& x) { return x == 0 ? 0 : (x < 0 ? -1 : 1); }

} // namespace motivic

#endif
