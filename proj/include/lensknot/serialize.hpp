#pragma once

#include "lensknot/alexander.hpp"
#include "lensknot/covering.hpp"
#include "lensknot/cyclic.hpp"
#include "lensknot/intmatrix.hpp"
#include "lensknot/knot.hpp"
#include "lensknot/laurent.hpp"
#include "lensknot/smith.hpp"
#include "lensknot/word.hpp"

#include <json.hpp>

#include <string>

// JSON views of the value types. Polynomials carry both a human-readable
// rendering and an exact coefficient map with decimal-string values, since
// coefficients routinely exceed native integer range.

namespace lensknot {

using json = nlohmann::json;

inline json to_json(const LaurentPoly &f)
{
    json coeffs = json::object();
    for (const auto &[e, c] : f.coefficients())
        coeffs[std::to_string(e)] = c.str();
    return json{{"text", to_string(f)}, {"coeffs", coeffs}};
}

inline LaurentPoly laurent_from_json(const json &j)
{
    LaurentPoly f;
    for (const auto &[key, value] : j.at("coeffs").items())
        f.add_term(std::stoll(key), Int(value.get<std::string>()));
    return f;
}

inline json to_json(const CyclicPoly &f)
{
    json j = to_json(ordinary_representative(f));
    j["n"] = f.modulus();
    return j;
}

inline CyclicPoly cyclic_from_json(const json &j)
{
    return reduce_mod_cyclic(laurent_from_json(j), j.at("n").get<Exp>());
}

inline json to_json(const HomologyGroup &g)
{
    json factors = json::array();
    for (const Int &f : g.invariant_factors)
        factors.push_back(f.str());
    return json{{"text", to_string(g)},
                {"free_rank", g.free_rank},
                {"invariant_factors", factors}};
}

inline json to_json(const IntMatrix &m)
{
    json rows = json::array();
    for (Exp i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Exp j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json to_json(const OneOneKnot &k)
{
    return json{{"name", k.name},
                {"p", k.p},
                {"q", k.q},
                {"relator", to_string(k.relator)}};
}

inline OneOneKnot knot_from_json(const json &j)
{
    OneOneKnot k;
    k.name = j.value("name", std::string());
    k.p = j.at("p").get<Exp>();
    k.q = j.at("q").get<Exp>();
    k.relator = parse_relator(j.at("relator").get<std::string>());
    return k;
}

inline json to_json(const ExteriorHomology &h)
{
    return json{{"d", h.d},
                {"p_bar", h.p_bar},
                {"q_bar", h.q_bar},
                {"q_prime", h.q_prime},
                {"bezout", json::array({h.bezout_r, h.bezout_s})},
                {"text", h.d == 1 ? std::string("Z")
                                  : "Z ⊕ Z/" + std::to_string(h.d)}};
}

inline json to_json(const Monodromy &m)
{
    return json{{"n", m.n}, {"omega_alpha", m.omega_alpha}, {"omega_gamma", m.omega_gamma}};
}

inline json to_json(const UnitWitness &w)
{
    return json{{"sign", w.sign}, {"shift", w.shift}};
}

inline json to_json(const CyclicPresentation &cp)
{
    return json{{"n", cp.n}, {"word", to_string(cp.w)}};
}

inline json to_json(const AlexanderResult &a)
{
    return json{{"delta", to_json(a.delta)},
                {"q_alpha", to_json(a.q_alpha)},
                {"p_bar", a.p_bar},
                {"d", a.d}};
}

inline json to_json(const CoverOrder &o)
{
    if (!o.finite)
        return json{{"finite", false}};
    return json{{"finite", true}, {"order", o.order.str()}};
}

inline json to_json(const TheoremCheck &c)
{
    json j{{"ok", c.ok()},
           {"lhs", to_json(c.lhs)},
           {"rhs", to_json(c.rhs)}};
    if (c.witness)
        j["witness"] = to_json(*c.witness);
    return j;
}

} // namespace lensknot
