#pragma once

#include "lensknot/alexander.hpp"
#include "lensknot/cyclic.hpp"
#include "lensknot/cyclotomic.hpp"
#include "lensknot/knot.hpp"
#include "lensknot/resultant.hpp"
#include "lensknot/smith.hpp"

#include <optional>
#include <vector>

namespace lensknot {

// Outcome of checking Gamma_{K,n}(t^{p/d}) = Delta_{K,n}(t) * sum t^i up to
// a unit of Z[t]/(t^n - 1). Failures keep both sides for diagnosis.
struct TheoremCheck {
    std::optional<UnitWitness> witness;
    CyclicPoly lhs; // Gamma_{K,n}(t^{p_bar})
    CyclicPoly rhs; // Delta * (1 + ... + t^{p_bar-1}) mod t^n - 1

    bool ok() const { return witness.has_value(); }
};

inline TheoremCheck verify_main_theorem(const OneOneKnot &k, Exp n)
{
    const ExteriorHomology h = validate(k);
    const CyclicPoly lhs = compose_monomial(gamma_polynomial(k, n), h.p_bar);
    const AlexanderResult a = alexander_polynomial(k);
    const CyclicPoly rhs = reduce_mod_cyclic(a.delta * geometric_poly(h.p_bar), n);
    return TheoremCheck{equal_up_to_cyclic_units(lhs, rhs), lhs, rhs};
}

namespace detail {

// G(t) = Gamma_{K,n}(t^{p/d}): the circulant built on its coefficients
// presents H_1 of the relabeled covering C'_n(K), which is isomorphic to
// H_1(C_n(K)).
inline CyclicPoly relabeled_gamma(const OneOneKnot &k, Exp n)
{
    const ExteriorHomology h = validate(k);
    return compose_monomial(gamma_polynomial(k, n), h.p_bar);
}

} // namespace detail

// H_1 of the n-fold strongly-cyclic branched covering, by Smith normal form
// of the circulant presentation matrix.
inline HomologyGroup cover_homology(const OneOneKnot &k, Exp n)
{
    return group_from_presentation(circulant(detail::relabeled_gamma(k, n).coefficients()));
}

struct CoverOrder {
    bool finite = true;
    Int order = 1; // meaningful only when finite

    bool operator==(const CoverOrder &) const = default;
};

// Order of H_1 of the covering as the exact root-of-unity product
// |prod_{zeta^n=1} G(zeta)| = |Res(t^n - 1, G)|; zero resultant means some
// n-th root of unity is a root of Delta_{K,n} and the group is infinite.
inline CoverOrder cover_homology_order(const OneOneKnot &k, Exp n)
{
    const LaurentPoly g = ordinary_representative(detail::relabeled_gamma(k, n));
    const Int res = resultant(power_minus_one(n), g);
    if (res == 0)
        return CoverOrder{false, 0};
    return CoverOrder{true, abs_int(res)};
}

// Order of the torsion subgroup of H_1 of the covering: the product of
// G(zeta) over the n-th roots of unity that are not roots of G. Stripping
// Phi = prod { Phi_s : s | n, Phi_s | G } from both t^n - 1 and G removes
// exactly the excluded roots, so the restricted product is
// |Res((t^n - 1)/Phi, G/Phi)|. Cross-checked against the Smith normal form
// route on every call; a mismatch would contradict the theory and throws.
inline Int cover_torsion_order(const OneOneKnot &k, Exp n)
{
    const LaurentPoly g = canonical_unit_form(
        ordinary_representative(detail::relabeled_gamma(k, n)));

    LaurentPoly phi(1);
    for (Exp s : divisors(n)) {
        const LaurentPoly cyc = cyclotomic(s);
        if (divides(cyc, g))
            phi = phi * cyc;
    }
    const LaurentPoly h = exact_divide(g, phi);
    // deg(phi) <= deg(g) < n, so psi is never constant.
    const LaurentPoly psi = exact_divide(power_minus_one(n), phi);
    const Int torsion = abs_int(resultant(psi, h));

    const Int snf_torsion = cover_homology(k, n).torsion_order();
    if (torsion != snf_torsion)
        throw Error(ErrorCode::InvariantViolation,
                    "torsion order disagrees between the resultant route (" +
                        torsion.str() + ") and the Smith normal form route (" +
                        snf_torsion.str() + ")");
    return torsion;
}

} // namespace lensknot
