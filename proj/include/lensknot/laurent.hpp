#pragma once

#include "lensknot/bigint.hpp"
#include "lensknot/error.hpp"

#include <map>
#include <string>
#include <utility>

namespace lensknot {

// Integer Laurent polynomial: finitely many terms c * t^e with e of either
// sign. Zero coefficients are never stored; the zero polynomial has empty
// support.
class LaurentPoly {
public:
    LaurentPoly() = default;

    LaurentPoly(const Int &constant)
    {
        if (constant != 0)
            coeffs_[0] = constant;
    }

    LaurentPoly(long constant) : LaurentPoly(Int(constant)) {}
    LaurentPoly(int constant) : LaurentPoly(Int(constant)) {}

    static LaurentPoly monomial(const Int &c, Exp e)
    {
        LaurentPoly f;
        if (c != 0)
            f.coeffs_[e] = c;
        return f;
    }

    static LaurentPoly t(Exp e = 1) { return monomial(1, e); }

    const std::map<Exp, Int> &coefficients() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    Int coeff(Exp e) const
    {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    Exp min_exp() const
    {
        require_nonzero();
        return coeffs_.begin()->first;
    }

    Exp max_exp() const
    {
        require_nonzero();
        return coeffs_.rbegin()->first;
    }

    void add_term(Exp e, const Int &c)
    {
        if (c == 0)
            return;
        Int &slot = coeffs_[e];
        slot += c;
        if (slot == 0)
            coeffs_.erase(e);
    }

    LaurentPoly operator-() const
    {
        LaurentPoly f;
        for (const auto &[e, c] : coeffs_)
            f.coeffs_[e] = -c;
        return f;
    }

    LaurentPoly &operator+=(const LaurentPoly &rhs)
    {
        for (const auto &[e, c] : rhs.coeffs_)
            add_term(e, c);
        return *this;
    }

    LaurentPoly &operator-=(const LaurentPoly &rhs)
    {
        for (const auto &[e, c] : rhs.coeffs_)
            add_term(e, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b)
    {
        LaurentPoly f;
        for (const auto &[ea, ca] : a.coeffs_)
            for (const auto &[eb, cb] : b.coeffs_)
                f.add_term(ea + eb, ca * cb);
        return f;
    }

    friend LaurentPoly operator*(const Int &k, const LaurentPoly &f)
    {
        return LaurentPoly(k) * f;
    }

    // Multiplies by t^k.
    LaurentPoly shifted(Exp k) const
    {
        LaurentPoly f;
        for (const auto &[e, c] : coeffs_)
            f.coeffs_[e + k] = c;
        return f;
    }

    bool operator==(const LaurentPoly &) const = default;

private:
    void require_nonzero() const
    {
        if (coeffs_.empty())
            throw Error(ErrorCode::DomainError, "zero polynomial has no degree");
    }

    std::map<Exp, Int> coeffs_;
};

// t -> t^{-1}.
inline LaurentPoly mirror(const LaurentPoly &f)
{
    LaurentPoly g;
    for (const auto &[e, c] : f.coefficients())
        g.add_term(-e, c);
    return g;
}

inline Int evaluate_at_one(const LaurentPoly &f)
{
    Int total = 0;
    for (const auto &[e, c] : f.coefficients())
        total += c;
    return total;
}

// f(u) for a unit u = +1 or -1; the only points where negative exponents
// evaluate integrally.
inline Int evaluate_at_unit(const LaurentPoly &f, int u)
{
    if (u != 1 && u != -1)
        throw Error(ErrorCode::DomainError, "evaluate_at_unit expects +1 or -1");
    Int total = 0;
    for (const auto &[e, c] : f.coefficients())
        total += (u == 1 || e % 2 == 0) ? c : -c;
    return total;
}

// t^s - 1.
inline LaurentPoly power_minus_one(Exp s)
{
    LaurentPoly f;
    f.add_term(s, 1);
    f.add_term(0, -1);
    return f;
}

// 1 + t + ... + t^{k-1}, k >= 1.
inline LaurentPoly geometric_poly(Exp k)
{
    if (k < 1)
        throw Error(ErrorCode::DomainError, "geometric_poly expects k >= 1");
    LaurentPoly f;
    for (Exp i = 0; i < k; ++i)
        f.add_term(i, 1);
    return f;
}

// The unit +-t^k with unit * f canonical: lowest exponent 0, lowest
// coefficient positive. Identifies the orbit {+-t^k f}; zero maps to zero.
struct LaurentUnit {
    int sign = 1;
    Exp shift = 0;
};

inline LaurentUnit canonicalizing_unit(const LaurentPoly &f)
{
    if (f.is_zero())
        return {1, 0};
    const auto &lowest = *f.coefficients().begin();
    return {lowest.second < 0 ? -1 : 1, -lowest.first};
}

inline LaurentPoly apply_unit(const LaurentPoly &f, const LaurentUnit &u)
{
    LaurentPoly g = f.shifted(u.shift);
    return u.sign < 0 ? -g : g;
}

inline LaurentPoly canonical_unit_form(const LaurentPoly &f)
{
    return apply_unit(f, canonicalizing_unit(f));
}

inline bool equal_up_to_units(const LaurentPoly &f, const LaurentPoly &g)
{
    return canonical_unit_form(f) == canonical_unit_form(g);
}

class NotDivisibleError : public Error {
public:
    NotDivisibleError(LaurentPoly remainder)
        : Error(ErrorCode::NotDivisible, "exact polynomial division failed"),
          remainder_(std::move(remainder))
    {
    }

    const LaurentPoly &remainder() const { return remainder_; }

private:
    LaurentPoly remainder_;
};

// Exact quotient f / g in Z[t, t^{-1}], if it exists. Divisibility is
// decided on the shift-normalized ordinary polynomials: when f = g*h with
// integral h, the leading coefficient of g divides the running remainder at
// every step, so a failed step already certifies non-divisibility.
inline LaurentPoly exact_divide(const LaurentPoly &f, const LaurentPoly &g)
{
    if (g.is_zero())
        throw Error(ErrorCode::DomainError, "division by the zero polynomial");
    if (f.is_zero())
        return LaurentPoly();

    const Exp shift = f.min_exp() - g.min_exp();
    LaurentPoly rem = f.shifted(-f.min_exp());
    const LaurentPoly den = g.shifted(-g.min_exp());
    const Int lead = den.coefficients().rbegin()->second;
    const Exp deg_den = den.max_exp();

    LaurentPoly quot;
    while (!rem.is_zero() && rem.max_exp() >= deg_den) {
        const Int top = rem.coefficients().rbegin()->second;
        if (top % lead != 0)
            throw NotDivisibleError(rem.shifted(shift));
        const Int q = top / lead;
        const Exp e = rem.max_exp() - deg_den;
        quot.add_term(e, q);
        rem -= LaurentPoly::monomial(q, e) * den;
    }
    if (!rem.is_zero())
        throw NotDivisibleError(rem.shifted(shift));
    return quot.shifted(shift);
}

inline bool divides(const LaurentPoly &g, const LaurentPoly &f)
{
    if (g.is_zero())
        return f.is_zero();
    if (f.is_zero())
        return true;
    try {
        exact_divide(f, g);
        return true;
    } catch (const NotDivisibleError &) {
        return false;
    }
}

inline std::string to_string(const LaurentPoly &f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto &[e, c] : f.coefficients()) {
        const bool negative = c < 0;
        const Int mag = negative ? Int(-c) : c;
        if (first) {
            if (negative)
                out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string var;
        if (e == 1)
            var = "t";
        else if (e != 0)
            var = "t^" + std::to_string(e);
        if (var.empty())
            out += mag.str();
        else if (mag == 1)
            out += var;
        else
            out += mag.str() + var;
    }
    return out;
}

} // namespace lensknot
