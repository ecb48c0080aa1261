#pragma once

#include "lensknot/bigint.hpp"
#include "lensknot/intmatrix.hpp"

#include <string>
#include <vector>

namespace lensknot {

// Diagonal of the Smith normal form: the positive invariant factors
// d_1 | d_2 | ... (1s included); rank is their count, trailing zero diagonal
// entries are implied by min(rows, cols) - rank.
struct SmithResult {
    std::vector<Int> invariant_factors;
    Exp rank = 0;
};

namespace detail {

// Locates the entry of minimal nonzero absolute value in the trailing
// submatrix starting at (s, s); false if that submatrix is zero.
inline bool min_nonzero_pivot(const IntMatrix &m, Exp s, Exp &pi, Exp &pj)
{
    bool found = false;
    Int best = 0;
    for (Exp i = s; i < m.rows(); ++i)
        for (Exp j = s; j < m.cols(); ++j) {
            const Int a = abs_int(m.at(i, j));
            if (a != 0 && (!found || a < best)) {
                best = a;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

inline void swap_rows(IntMatrix &m, Exp a, Exp b)
{
    if (a == b)
        return;
    for (Exp j = 0; j < m.cols(); ++j)
        std::swap(m.at(a, j), m.at(b, j));
}

inline void swap_cols(IntMatrix &m, Exp a, Exp b)
{
    if (a == b)
        return;
    for (Exp i = 0; i < m.rows(); ++i)
        std::swap(m.at(i, a), m.at(i, b));
}

} // namespace detail

// Classical elimination with minimal-absolute-value pivots; unimodular row
// and column operations only. Desk-scale matrices need nothing fancier.
inline SmithResult smith_normal_form(IntMatrix m)
{
    const Exp bound = std::min(m.rows(), m.cols());
    SmithResult result;
    for (Exp s = 0; s < bound; ++s) {
        Exp pi = s, pj = s;
        if (!detail::min_nonzero_pivot(m, s, pi, pj))
            break;
        detail::swap_rows(m, s, pi);
        detail::swap_cols(m, s, pj);

        for (;;) {
            // Reduce the pivot column, re-picking the pivot whenever a
            // remainder undercuts it.
            bool clean = true;
            for (Exp i = s + 1; i < m.rows(); ++i) {
                if (m.at(i, s) == 0)
                    continue;
                const Int q = m.at(i, s) / m.at(s, s);
                for (Exp j = s; j < m.cols(); ++j)
                    m.at(i, j) -= q * m.at(s, j);
                if (m.at(i, s) != 0) { // |remainder| < |pivot|
                    detail::swap_rows(m, s, i);
                    clean = false;
                }
            }
            if (!clean)
                continue;
            for (Exp j = s + 1; j < m.cols(); ++j) {
                if (m.at(s, j) == 0)
                    continue;
                const Int q = m.at(s, j) / m.at(s, s);
                for (Exp i = s; i < m.rows(); ++i)
                    m.at(i, j) -= q * m.at(i, s);
                if (m.at(s, j) != 0) {
                    detail::swap_cols(m, s, j);
                    clean = false;
                }
            }
            if (!clean)
                continue;

            // Row and column are clear; force divisibility of the rest of
            // the submatrix by folding an offending row into the pivot row.
            bool divisible = true;
            for (Exp i = s + 1; i < m.rows() && divisible; ++i)
                for (Exp j = s + 1; j < m.cols() && divisible; ++j)
                    if (m.at(i, j) % m.at(s, s) != 0) {
                        for (Exp jj = 0; jj < m.cols(); ++jj)
                            m.at(s, jj) += m.at(i, jj);
                        divisible = false;
                    }
            if (divisible)
                break;
        }

        if (m.at(s, s) < 0)
            for (Exp j = 0; j < m.cols(); ++j)
                m.at(s, j) = -m.at(s, j);
        result.invariant_factors.push_back(m.at(s, s));
        result.rank = s + 1;
    }
    return result;
}

// Finitely generated abelian group: free rank plus the invariant factors
// >= 2 in a divisibility chain. Factors equal to 1 are dropped here; the raw
// SNF keeps them.
struct HomologyGroup {
    Exp free_rank = 0;
    std::vector<Int> invariant_factors;

    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    bool is_finite() const { return free_rank == 0; }

    Int torsion_order() const
    {
        Int order = 1;
        for (const Int &f : invariant_factors)
            order *= f;
        return order;
    }

    bool operator==(const HomologyGroup &) const = default;
};

// Reads the presented Z-module off a relation matrix: columns are
// generators, rows are relations.
inline HomologyGroup group_from_presentation(const IntMatrix &m)
{
    const SmithResult snf = smith_normal_form(m);
    HomologyGroup g;
    g.free_rank = m.cols() - snf.rank;
    for (const Int &f : snf.invariant_factors)
        if (f > 1)
            g.invariant_factors.push_back(f);
    return g;
}

inline std::string to_string(const HomologyGroup &g)
{
    if (g.is_trivial())
        return "0";
    std::string out;
    if (g.free_rank == 1)
        out = "Z";
    else if (g.free_rank > 1)
        out = "Z^" + std::to_string(g.free_rank);
    for (const Int &f : g.invariant_factors) {
        if (!out.empty())
            out += " ⊕ ";
        out += "Z/" + f.str();
    }
    return out;
}

} // namespace lensknot
