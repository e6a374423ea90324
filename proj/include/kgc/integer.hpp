#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace kgc {

// All arithmetic in this library is exact.  cpp_int stores small values
// inline and grows without bound, so no computation here can overflow or
// round; entry growth in the normal-form algorithms is simply absorbed.
using Integer = boost::multiprecision::cpp_int;

inline Integer iabs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer igcd(Integer a, Integer b) {
    a = iabs(a);
    b = iabs(b);
    while (b != 0) {
        Integer r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// Extended gcd: returns g = gcd(a,b) >= 0 and writes x,y with a*x + b*y = g.
inline Integer igcdx(const Integer& a, const Integer& b, Integer& x, Integer& y) {
    Integer old_r = a, r = b;
    Integer old_x = 1, cur_x = 0;
    Integer old_y = 0, cur_y = 1;
    while (r != 0) {
        Integer q = old_r / r; // truncated division is fine: invariants hold over Z
        Integer t;
        t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * cur_x; old_x = cur_x; cur_x = t;
        t = old_y - q * cur_y; old_y = cur_y; cur_y = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    x = old_x;
    y = old_y;
    return old_r;
}

// Floor division and the matching remainder in [0, |b|).  Used by the
// Hermite reduction step, which needs entries above a pivot brought into
// the canonical window regardless of sign.
inline Integer fdiv(const Integer& a, const Integer& b) {
    Integer q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline bool fits_int64(const Integer& a) {
    static const Integer lo = std::numeric_limits<std::int64_t>::min();
    static const Integer hi = std::numeric_limits<std::int64_t>::max();
    return a >= lo && a <= hi;
}

inline std::string to_decimal(const Integer& a) { return a.str(); }

} // namespace kgc
