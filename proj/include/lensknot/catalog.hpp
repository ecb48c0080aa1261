#pragma once

#include "lensknot/error.hpp"
#include "lensknot/knot.hpp"
#include "lensknot/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lensknot {

// Built-in knot with golden expectations, so `verify --catalog NAME` is
// self-contained.
struct CatalogEntry {
    std::string name;
    OneOneKnot knot;
    std::string delta_expected; // canonical-form rendering
    Exp d_expected = 1;
};

// Trivial knot in L(p,q): <alpha, gamma | alpha^p>. Its n-cyclic polynomial
// and Alexander polynomial are both the constant p.
inline OneOneKnot trivial_knot(Exp p, Exp q)
{
    const std::string name = "trivial_" + std::to_string(p) + "_" + std::to_string(q);
    std::vector<Syllable> raw{{Generator::alpha(), p}};
    return OneOneKnot{p, q, Word(raw), name};
}

// K_m in L(m-2, 1), m >= 3, with relator (alpha gamma)^{m-1} alpha^{-1}
// gamma. K_3 is the trefoil in S^3. Delta is 1 - t + ... + t^{m-1} for odd
// m and t^{m/2} + 1 for even m; the m-fold covering of K_m is the Neuwirth
// manifold of type m.
inline OneOneKnot km_knot(Exp m)
{
    if (m < 3)
        throw Error(ErrorCode::DomainError, "km requires m >= 3");
    const Word ag = parse_relator("ag");
    const Word relator = pow(ag, m - 1) * parse_relator("Ag");
    const Exp p = m - 2;
    const Exp q = p == 1 ? 0 : 1;
    std::string name = m == 3 ? "trefoil" : "km" + std::to_string(m);
    return OneOneKnot{p, q, relator, name};
}

namespace detail {

inline std::string km_delta_string(Exp m)
{
    if (m % 2 == 0)
        return to_string(LaurentPoly(1) + LaurentPoly::t(m / 2));
    LaurentPoly f;
    for (Exp i = 0; i < m; ++i)
        f.add_term(i, i % 2 == 0 ? 1 : -1);
    return to_string(f);
}

} // namespace detail

inline const std::vector<CatalogEntry> &catalog()
{
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> out;
        for (auto [p, q] : {std::pair<Exp, Exp>{2, 1}, {3, 1}, {5, 2}, {7, 3}}) {
            CatalogEntry e;
            e.knot = trivial_knot(p, q);
            e.name = e.knot.name;
            e.delta_expected = Int(p).str();
            e.d_expected = p;
            out.push_back(std::move(e));
        }
        for (Exp m = 3; m <= 10; ++m) {
            CatalogEntry e;
            e.knot = km_knot(m);
            e.name = e.knot.name;
            e.delta_expected = detail::km_delta_string(m);
            e.d_expected = m % 2 == 0 ? 2 : 1;
            out.push_back(std::move(e));
        }
        return out;
    }();
    return entries;
}

inline std::optional<CatalogEntry> find_catalog(const std::string &name)
{
    const std::string wanted = name == "km3" ? "trefoil" : name;
    for (const CatalogEntry &e : catalog())
        if (e.name == wanted)
            return e;
    return std::nullopt;
}

} // namespace lensknot
