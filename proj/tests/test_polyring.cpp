#include "lensknot/cyclic.hpp"
#include "lensknot/cyclotomic.hpp"
#include "lensknot/laurent.hpp"
#include "lensknot/rational.hpp"
#include "lensknot/resultant.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace lensknot;
using lensknot::testing::make_rng;
using lensknot::testing::random_laurent;

namespace {

// Tiny builder: poly({a, b, c}) = a + b t + c t^2.
LaurentPoly poly(std::initializer_list<int> ascending, Exp shift = 0)
{
    LaurentPoly f;
    Exp e = shift;
    for (int c : ascending)
        f.add_term(e++, c);
    return f;
}

} // namespace

TEST_CASE("laurent rendering")
{
    CHECK(to_string(LaurentPoly()) == "0");
    CHECK(to_string(poly({5})) == "5");
    CHECK(to_string(poly({1, -1, 1})) == "1 - t + t^2");
    CHECK(to_string(poly({2, -1})) == "2 - t");
    CHECK(to_string(poly({1}, -1)) == "t^-1");
    CHECK(to_string(poly({-1, 0, -1}, 3)) == "-t^3 - t^5");
    CHECK(to_string(poly({0})) == "0");
}

TEST_CASE("reduce_mod_cyclic folds exponents")
{
    CHECK(reduce_mod_cyclic(poly({1, -1, 1}), 2) == reduce_mod_cyclic(poly({2, -1}), 2));
    CHECK(reduce_mod_cyclic(poly({1}, -1), 3) == reduce_mod_cyclic(poly({0, 0, 1}), 3));
    CHECK(reduce_mod_cyclic(LaurentPoly(), 5).is_zero());
    CHECK_THROWS_AS(reduce_mod_cyclic(poly({1}), 1), Error);
}

TEST_CASE("reduce_mod_cyclic is a ring homomorphism")
{
    auto rng = make_rng(101);
    std::uniform_int_distribution<Exp> n_dist(2, 9);
    for (int trial = 0; trial < 1000; ++trial) {
        const Exp n = n_dist(rng);
        const LaurentPoly f = random_laurent(rng);
        const LaurentPoly g = random_laurent(rng);
        CHECK(reduce_mod_cyclic(f * g, n) ==
              reduce_mod_cyclic(f, n) * reduce_mod_cyclic(g, n));
        CHECK(reduce_mod_cyclic(f + g, n) ==
              reduce_mod_cyclic(f, n) + reduce_mod_cyclic(g, n));
    }
}

TEST_CASE("ring axioms hold for random operands")
{
    auto rng = make_rng(202);
    std::uniform_int_distribution<Exp> n_dist(2, 7);
    for (int trial = 0; trial < 300; ++trial) {
        const LaurentPoly f = random_laurent(rng);
        const LaurentPoly g = random_laurent(rng);
        const LaurentPoly h = random_laurent(rng);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f * g == g * f);
        CHECK(f + g == g + f);

        const Exp n = n_dist(rng);
        const CyclicPoly cf = reduce_mod_cyclic(f, n);
        const CyclicPoly cg = reduce_mod_cyclic(g, n);
        const CyclicPoly ch = reduce_mod_cyclic(h, n);
        CHECK((cf * cg) * ch == cf * (cg * ch));
        CHECK(cf * (cg + ch) == cf * cg + cf * ch);
        CHECK(cf * cg == cg * cf);
    }
}

TEST_CASE("compose_monomial")
{
    const CyclicPoly f = reduce_mod_cyclic(poly({1, 1, 1}), 3);
    CHECK(compose_monomial(f, 1) == f);

    CHECK(compose_monomial(reduce_mod_cyclic(poly({1, 1}), 3), 2) ==
          reduce_mod_cyclic(poly({1, 0, 1}), 3));

    const CyclicPoly g = reduce_mod_cyclic(poly({2, -1}), 2);
    CHECK(compose_monomial(g, -1) == g);
}

TEST_CASE("exact_divide")
{
    CHECK(exact_divide(poly({-1, 0, 0, 1}), poly({-1, 1})) == poly({1, 1, 1}));
    const LaurentPoly f = poly({1, -1, 1}, -2); // t^-2 - t^-1 + 1
    CHECK(exact_divide(f, LaurentPoly(1)) == f);
    CHECK_THROWS_AS(exact_divide(poly({1, 0, 1}), poly({-1, 1})), NotDivisibleError);
    CHECK_THROWS_AS(exact_divide(poly({1}), LaurentPoly()), Error);
    // integral quotient required, not just zero remainder over Q
    CHECK_THROWS_AS(exact_divide(poly({0, 1}), poly({2})), NotDivisibleError);

    try {
        exact_divide(poly({1, 0, 1}), poly({-1, 1}));
        FAIL("expected NotDivisibleError");
    } catch (const NotDivisibleError &e) {
        CHECK(e.remainder() == poly({2})); // t^2 + 1 = (t+1)(t-1) + 2
    }
}

TEST_CASE("exact_divide inverts multiplication")
{
    auto rng = make_rng(303);
    for (int trial = 0; trial < 1000; ++trial) {
        const LaurentPoly f = random_laurent(rng);
        LaurentPoly g = random_laurent(rng);
        if (g.is_zero())
            g = poly({1, 3}, -1);
        CHECK(exact_divide(f * g, g) == f);
    }
}

TEST_CASE("canonical_unit_form")
{
    CHECK(canonical_unit_form(poly({1, -1, 1}, -2)) == poly({1, -1, 1}));
    CHECK(canonical_unit_form(poly({-1, 0, -1}, 3)) == poly({1, 0, 1}));
    CHECK(canonical_unit_form(LaurentPoly()).is_zero());
}

TEST_CASE("canonical_unit_form is idempotent and constant on unit orbits")
{
    auto rng = make_rng(404);
    std::uniform_int_distribution<Exp> shift(-6, 6);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int trial = 0; trial < 500; ++trial) {
        const LaurentPoly f = random_laurent(rng);
        const LaurentPoly canon = canonical_unit_form(f);
        CHECK(canonical_unit_form(canon) == canon);
        LaurentPoly g = f.shifted(shift(rng));
        if (sign(rng))
            g = -g;
        CHECK(canonical_unit_form(g) == canon);
        CHECK(equal_up_to_units(f, g));
    }
}

TEST_CASE("equal_up_to_cyclic_units")
{
    const CyclicPoly f = reduce_mod_cyclic(poly({1, 1, -1}), 3);
    const CyclicPoly g = reduce_mod_cyclic(poly({1, -1, 1}), 3);
    const auto witness = equal_up_to_cyclic_units(f, g);
    REQUIRE(witness.has_value());
    CHECK(*witness == UnitWitness{1, 1});

    CHECK(equal_up_to_cyclic_units(f, f) == UnitWitness{1, 0});

    CHECK(!equal_up_to_cyclic_units(reduce_mod_cyclic(poly({1}), 2),
                                    reduce_mod_cyclic(poly({1, 1}), 2))
               .has_value());
}

TEST_CASE("mixed cyclic moduli are a contract violation")
{
    const CyclicPoly f = reduce_mod_cyclic(poly({1, 1}), 2);
    const CyclicPoly g = reduce_mod_cyclic(poly({1, 1}), 3);
    CHECK_THROWS_AS(f + g, Error);
    CHECK_THROWS_AS(f * g, Error);
    CHECK_THROWS_AS(equal_up_to_cyclic_units(f, g), Error);
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic(1) == poly({-1, 1}));
    CHECK(cyclotomic(2) == poly({1, 1}));
    CHECK(cyclotomic(4) == poly({1, 0, 1}));
    CHECK(cyclotomic(6) == poly({1, -1, 1}));
    CHECK(cyclotomic(12) == poly({1, 0, -1, 0, 1}));
    CHECK_THROWS_AS(cyclotomic(0), Error);
}

TEST_CASE("product of cyclotomics over divisors is t^n - 1")
{
    for (Exp n = 1; n <= 12; ++n) {
        LaurentPoly product(1);
        for (Exp d : divisors(n))
            product = product * cyclotomic(d);
        CHECK(product == power_minus_one(n));
    }
}

TEST_CASE("geometric_poly")
{
    CHECK(geometric_poly(1) == poly({1}));
    CHECK(geometric_poly(2) == poly({1, 1}));
    CHECK(geometric_poly(3) == poly({1, 1, 1}));
    CHECK_THROWS_AS(geometric_poly(0), Error);
}

TEST_CASE("resultant")
{
    CHECK(resultant(poly({-1, 0, 1}), poly({1, -1, 1})) == 3);
    CHECK(resultant(poly({-1, 1}), poly({7})) == 7);
    CHECK(abs_int(resultant(power_minus_one(5), poly({1, -1, 1}))) == 1);
    CHECK(resultant(power_minus_one(6), cyclotomic(6)) == 0);
    CHECK_THROWS_AS(resultant(LaurentPoly(), poly({1})), Error);

    // multiplicativity in the second argument
    auto rng = make_rng(505);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly g = random_laurent(rng);
        LaurentPoly h = random_laurent(rng);
        if (g.is_zero())
            g = poly({1, 1});
        if (h.is_zero())
            h = poly({2, 1});
        const LaurentPoly f = power_minus_one(4);
        CHECK(abs_int(resultant(f, g * h)) ==
              abs_int(resultant(f, g)) * abs_int(resultant(f, h)));
    }
}

TEST_CASE("rational functions reduce to lowest terms")
{
    // (t^3 - 1)/(t - 1) = t^2 + t + 1
    const RationalFunction r(poly({-1, 0, 0, 1}), poly({-1, 1}));
    CHECK(r.numerator() == poly({1, 1, 1}));
    CHECK(r.denominator() == LaurentPoly(1));

    // common content cancels
    const RationalFunction s(poly({2, 2}), poly({4}));
    CHECK(s.numerator() == poly({1, 1}));
    CHECK(s.denominator() == poly({2}));

    CHECK_THROWS_AS(RationalFunction(poly({1}), LaurentPoly()), Error);
}

TEST_CASE("rational function normal form is unique")
{
    auto rng = make_rng(606);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly f = random_laurent(rng);
        LaurentPoly g = random_laurent(rng);
        LaurentPoly h = random_laurent(rng);
        if (g.is_zero())
            g = poly({3, 1});
        if (h.is_zero())
            h = poly({1, 2});
        const RationalFunction plain(f, g);
        const RationalFunction scaled(f * h, g * h);
        CHECK(plain == scaled);
        CHECK(equal_up_to_units(plain, scaled));
    }
}
