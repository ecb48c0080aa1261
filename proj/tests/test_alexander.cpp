#include "lensknot/alexander.hpp"
#include "lensknot/catalog.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace lensknot;

TEST_CASE("alexander polynomial of the catalog families")
{
    CHECK(to_string(alexander_polynomial(km_knot(3)).delta) == "1 - t + t^2");
    CHECK(to_string(alexander_polynomial(km_knot(4)).delta) == "1 + t^2");
    CHECK(to_string(alexander_polynomial(trivial_knot(5, 2)).delta) == "5");

    // odd m: 1 - t + ... + t^{m-1}; even m: 1 + t^{m/2}
    for (Exp m = 3; m <= 10; ++m) {
        const AlexanderResult a = alexander_polynomial(km_knot(m));
        LaurentPoly expected;
        if (m % 2 == 0) {
            expected = LaurentPoly(1) + LaurentPoly::t(m / 2);
        } else {
            for (Exp i = 0; i < m; ++i)
                expected.add_term(i, i % 2 == 0 ? 1 : -1);
        }
        CHECK(a.delta == expected);
        CHECK(a.d == (m % 2 == 0 ? 2 : 1));
        CHECK(a.p_bar == (m % 2 == 0 ? (m - 2) / 2 : m - 2));
    }
}

TEST_CASE("q_alpha factors as delta times the geometric polynomial")
{
    for (const CatalogEntry &entry : catalog()) {
        const AlexanderResult a = alexander_polynomial(entry.knot);
        CHECK(equal_up_to_units(a.q_alpha, a.delta * geometric_poly(a.p_bar)));
    }
}

TEST_CASE("delta is symmetric and evaluates to +-d at 1")
{
    for (const CatalogEntry &entry : catalog()) {
        const AlexanderResult a = alexander_polynomial(entry.knot);
        CHECK(equal_up_to_units(a.delta, mirror(a.delta)));
        CHECK(abs_int(evaluate_at_one(a.delta)) == a.d);
        CHECK(a.d == entry.d_expected);
        CHECK(to_string(a.delta) == entry.delta_expected);
    }
}

TEST_CASE("trivial knots have constant delta for every p and q")
{
    for (Exp p : {2, 3, 5, 7})
        for (Exp q = 1; q < p; ++q) {
            if (gcd_exp(p, q) != 1)
                continue;
            const AlexanderResult a = alexander_polynomial(trivial_knot(p, q));
            CHECK(a.delta == LaurentPoly(Int(p)));
            CHECK(a.d == p);
        }
}

TEST_CASE("reduced torsion equals delta over t - 1")
{
    const RationalFunction trefoil = reduced_torsion(km_knot(3));
    CHECK(trefoil.numerator() == LaurentPoly(1) - LaurentPoly::t(1) + LaurentPoly::t(2));
    CHECK(trefoil.denominator() == LaurentPoly::t(1) - LaurentPoly(1));

    const RationalFunction trivial = reduced_torsion(trivial_knot(5, 2));
    CHECK(trivial.numerator() == LaurentPoly(5));
    CHECK(trivial.denominator() == LaurentPoly::t(1) - LaurentPoly(1));

    const RationalFunction k4 = reduced_torsion(km_knot(4));
    CHECK(k4.numerator() == LaurentPoly(1) + LaurentPoly::t(2));
    CHECK(k4.denominator() == LaurentPoly::t(1) - LaurentPoly(1));

    for (const CatalogEntry &entry : catalog())
        CHECK_NOTHROW(reduced_torsion(entry.knot)); // internal unit check
}

TEST_CASE("relators that present no knot exterior fail the invariant gate")
{
    // Exponent sums check out (p = 1, q' = 0) but Q_alpha = 1 + t - t^3
    // breaks the symmetry Delta(t) = Delta(t^{-1}), so the computation must
    // refuse rather than hand back a non-Alexander polynomial.
    const OneOneKnot bogus{1, 0, parse_relator("agag^2Ag^-3"), "bogus"};
    try {
        alexander_polynomial(bogus);
        FAIL("expected failure");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::InvariantViolation);
    }
}
