#pragma once

#include "lensknot/error.hpp"
#include "lensknot/fox.hpp"
#include "lensknot/knot.hpp"
#include "lensknot/laurent.hpp"
#include "lensknot/rational.hpp"

namespace lensknot {

// Output of the torsion-route Alexander polynomial computation.
//   q_alpha = delta * (1 + t + ... + t^{p_bar - 1})   up to +-t^k
//   |delta(1)| = d
//   delta(t) = delta(t^{-1})                          up to +-t^k
struct AlexanderResult {
    LaurentPoly delta; // canonical unit form
    LaurentPoly q_alpha;
    Exp p_bar = 1;
    Exp d = 1;

    bool operator==(const AlexanderResult &) const = default;
};

// Q_alpha: the Fox derivative of the relator by alpha, abelianized through
// alpha -> t^{-q_bar}, gamma -> t^{p_bar}.
inline LaurentPoly q_alpha_polynomial(const OneOneKnot &k, const ExteriorHomology &h)
{
    return evaluate_abelianized(fox_derivative(k.relator, Generator::alpha()),
                                -h.q_bar, h.p_bar);
}

// Alexander polynomial through the reduced-torsion identity
// Q_alpha = Delta * (1 + t + ... + t^{p_bar - 1}). The division is exact for
// every valid (1,1)-relator; a remainder means the input does not present a
// knot exterior. The two defining invariants are re-checked and violations
// throw rather than returning a silently wrong value.
inline AlexanderResult alexander_polynomial(const OneOneKnot &k)
{
    const ExteriorHomology h = validate(k);
    AlexanderResult result;
    result.p_bar = h.p_bar;
    result.d = h.d;
    result.q_alpha = q_alpha_polynomial(k, h);

    LaurentPoly quotient;
    try {
        quotient = exact_divide(result.q_alpha, geometric_poly(h.p_bar));
    } catch (const NotDivisibleError &) {
        throw Error(ErrorCode::NotDivisible,
                    "Q_alpha is not divisible by 1 + t + ... + t^{p_bar-1}; "
                    "the relator does not present a (1,1)-knot exterior");
    }
    result.delta = canonical_unit_form(quotient);

    if (abs_int(evaluate_at_one(result.delta)) != h.d)
        throw Error(ErrorCode::InvariantViolation,
                    "|Delta(1)| != d for " + to_string(result.delta));
    if (!equal_up_to_units(result.delta, mirror(result.delta)))
        throw Error(ErrorCode::InvariantViolation,
                    "Delta(t) and Delta(t^{-1}) differ beyond a unit for " +
                        to_string(result.delta));
    return result;
}

// Reduced Reidemeister torsion of the knot exterior,
// r_M = Q_alpha / (t^{p_bar} - 1), which the torsion theorem pins to
// Delta / (t - 1) up to +-t^k.
inline RationalFunction reduced_torsion(const OneOneKnot &k)
{
    const AlexanderResult a = alexander_polynomial(k);
    RationalFunction r(a.q_alpha, power_minus_one(a.p_bar));
    const RationalFunction expected(a.delta, power_minus_one(1));
    if (!equal_up_to_units(r, expected))
        throw Error(ErrorCode::InvariantViolation,
                    "reduced torsion differs from Delta/(t-1) beyond a unit");
    return r;
}

} // namespace lensknot
