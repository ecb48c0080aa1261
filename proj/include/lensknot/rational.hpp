#pragma once

#include "lensknot/bigint.hpp"
#include "lensknot/error.hpp"
#include "lensknot/laurent.hpp"

#include <string>
#include <utility>

namespace lensknot {

// GCD of all coefficients, nonnegative; 0 for the zero polynomial.
inline Int content(const LaurentPoly &f)
{
    Int g = 0;
    for (const auto &[e, c] : f.coefficients())
        g = gcd_int(g, c);
    return g;
}

inline LaurentPoly primitive_part(const LaurentPoly &f)
{
    if (f.is_zero())
        return f;
    return exact_divide(f, LaurentPoly(content(f)));
}

namespace detail {

// Pseudo-remainder: scales by the leading coefficient of b at each step so
// the subtraction stays integral.
inline LaurentPoly pseudo_remainder(LaurentPoly a, const LaurentPoly &b)
{
    const Int lead = b.coefficients().rbegin()->second;
    const Exp deg_b = b.max_exp();
    while (!a.is_zero() && a.max_exp() >= deg_b) {
        const Int top = a.coefficients().rbegin()->second;
        const Exp e = a.max_exp() - deg_b;
        a = lead * a - LaurentPoly::monomial(top, e) * b;
    }
    return a;
}

} // namespace detail

// GCD in the Laurent ring, i.e. up to units {+-t^k}: the result is
// unit-canonical. Primitive pseudo-remainder sequence on the shift-normalized
// ordinary representatives.
inline LaurentPoly laurent_gcd(const LaurentPoly &f, const LaurentPoly &g)
{
    if (f.is_zero())
        return canonical_unit_form(g);
    if (g.is_zero())
        return canonical_unit_form(f);
    const Int c = gcd_int(content(f), content(g));
    LaurentPoly a = primitive_part(canonical_unit_form(f));
    LaurentPoly b = primitive_part(canonical_unit_form(g));
    if (a.max_exp() < b.max_exp())
        std::swap(a, b);
    while (!b.is_zero()) {
        LaurentPoly r = detail::pseudo_remainder(a, b);
        a = std::move(b);
        b = r.is_zero() ? r : primitive_part(canonical_unit_form(r));
    }
    return c * canonical_unit_form(a);
}

// Quotient of Laurent polynomials in lowest terms, stored as the canonical
// representative of its {+-t^k} orbit: numerator and denominator are each
// shift-normalized to lowest exponent 0 and the joint sign makes the
// numerator's lowest coefficient positive. Reduced torsion is only defined
// up to such units, so the orbit is the honest value; zero is 0/1.
class RationalFunction {
public:
    RationalFunction(LaurentPoly numerator, LaurentPoly denominator)
    {
        if (denominator.is_zero())
            throw Error(ErrorCode::DomainError, "zero denominator");
        if (numerator.is_zero()) {
            num_ = LaurentPoly();
            den_ = LaurentPoly(1);
            return;
        }
        const LaurentPoly g = laurent_gcd(numerator, denominator);
        numerator = exact_divide(numerator, g);
        denominator = exact_divide(denominator, g);
        numerator = numerator.shifted(-numerator.min_exp());
        denominator = denominator.shifted(-denominator.min_exp());
        if (numerator.coefficients().begin()->second < 0) {
            numerator = -numerator;
            denominator = -denominator;
        }
        num_ = std::move(numerator);
        den_ = std::move(denominator);
    }

    const LaurentPoly &numerator() const { return num_; }
    const LaurentPoly &denominator() const { return den_; }

    bool operator==(const RationalFunction &) const = default;

private:
    LaurentPoly num_;
    LaurentPoly den_;
};

// Equality in Q(t) up to multiplication by +-t^k.
inline bool equal_up_to_units(const RationalFunction &a, const RationalFunction &b)
{
    return equal_up_to_units(a.numerator() * b.denominator(),
                             b.numerator() * a.denominator());
}

inline std::string to_string(const RationalFunction &r)
{
    if (r.denominator() == LaurentPoly(1))
        return to_string(r.numerator());
    return "(" + to_string(r.numerator()) + ") / (" + to_string(r.denominator()) + ")";
}

} // namespace lensknot
