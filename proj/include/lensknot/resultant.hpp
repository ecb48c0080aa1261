#pragma once

#include "lensknot/bigint.hpp"
#include "lensknot/error.hpp"
#include "lensknot/laurent.hpp"

#include <vector>

namespace lensknot {

namespace detail {

// Fraction-free Bareiss determinant; every intermediate division is exact.
inline Int bareiss_determinant(std::vector<std::vector<Int>> m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0)
                ++pivot;
            if (pivot == n)
                return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign < 0 ? Int(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

// Ascending coefficients 0..deg of the canonical ordinary representative.
inline std::vector<Int> ordinary_coeffs(const LaurentPoly &f)
{
    const LaurentPoly g = canonical_unit_form(f);
    std::vector<Int> out(static_cast<std::size_t>(g.max_exp()) + 1, Int(0));
    for (const auto &[e, c] : g.coefficients())
        out[static_cast<std::size_t>(e)] = c;
    return out;
}

} // namespace detail

// Resultant of the unit-canonical ordinary representatives of f and g,
// computed as the exact determinant of their Sylvester matrix. Since t^n - 1
// is monic, |Res(t^n - 1, g)| = |prod_{zeta^n = 1} g(zeta)|.
inline Int resultant(const LaurentPoly &f, const LaurentPoly &g)
{
    if (f.is_zero() || g.is_zero())
        throw Error(ErrorCode::DomainError, "resultant of the zero polynomial");
    const std::vector<Int> a = detail::ordinary_coeffs(f);
    const std::vector<Int> b = detail::ordinary_coeffs(g);
    const std::size_t m = a.size() - 1; // deg f
    const std::size_t n = b.size() - 1; // deg g

    if (m == 0) {
        Int r = 1;
        for (std::size_t i = 0; i < n; ++i)
            r *= a[0];
        return r;
    }
    if (n == 0) {
        Int r = 1;
        for (std::size_t i = 0; i < m; ++i)
            r *= b[0];
        return r;
    }

    const std::size_t dim = m + n;
    std::vector<std::vector<Int>> syl(dim, std::vector<Int>(dim, Int(0)));
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t j = 0; j <= m; ++j)
            syl[row][row + j] = a[m - j];
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t j = 0; j <= n; ++j)
            syl[n + row][row + j] = b[n - j];
    return detail::bareiss_determinant(std::move(syl));
}

} // namespace lensknot
