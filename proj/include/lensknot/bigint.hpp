#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace lensknot {

// Exact arbitrary-precision integer. Resultants and circulant determinants
// overflow 64 bits already for modest inputs, so every coefficient-like
// quantity in the library uses Int.
using Int = boost::multiprecision::cpp_int;

// Word exponents, matrix dimensions and residues stay at machine size.
using Exp = std::int64_t;

inline Int abs_int(const Int &a) { return a < 0 ? -a : a; }

inline Int gcd_int(const Int &a, const Int &b)
{
    return boost::multiprecision::gcd(abs_int(a), abs_int(b));
}

inline Exp gcd_exp(Exp a, Exp b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Exp t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// g = gcd(a,b) >= 0 and x*a + y*b = g.
inline Exp extended_gcd(Exp a, Exp b, Exp &x, Exp &y)
{
    Exp old_r = a, r = b;
    Exp old_x = 1, cx = 0;
    Exp old_y = 0, cy = 1;
    while (r != 0) {
        Exp q = old_r / r;
        Exp t;
        t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * cx; old_x = cx; cx = t;
        t = old_y - q * cy; old_y = cy; cy = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    x = old_x;
    y = old_y;
    return old_r;
}

// Residue of a in {0, ..., n-1}, n > 0.
inline Exp mod_nonneg(Exp a, Exp n)
{
    Exp r = a % n;
    return r < 0 ? r + n : r;
}

// Residue of a in {1, ..., n}; used for cyclic-presentation subscripts.
inline Exp mod_one_based(Exp a, Exp n)
{
    Exp r = mod_nonneg(a - 1, n);
    return r + 1;
}

// Inverse of a modulo n; requires gcd(a, n) = 1.
inline Exp mod_inverse(Exp a, Exp n)
{
    Exp x, y;
    Exp g = extended_gcd(mod_nonneg(a, n), n, x, y);
    if (g != 1)
        throw std::invalid_argument("mod_inverse: arguments not coprime");
    return mod_nonneg(x, n);
}

} // namespace lensknot
