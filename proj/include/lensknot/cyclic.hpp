#pragma once

#include "lensknot/bigint.hpp"
#include "lensknot/error.hpp"
#include "lensknot/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lensknot {

// Residue class in Z[t]/(t^n - 1), stored as the n coefficients of its
// degree < n representative.
class CyclicPoly {
public:
    explicit CyclicPoly(Exp n) : n_(n), c_(static_cast<std::size_t>(check(n)), Int(0)) {}

    Exp modulus() const { return n_; }
    const std::vector<Int> &coefficients() const { return c_; }

    Int coeff(Exp i) const { return c_[static_cast<std::size_t>(mod_nonneg(i, n_))]; }

    void add_term(Exp e, const Int &c)
    {
        c_[static_cast<std::size_t>(mod_nonneg(e, n_))] += c;
    }

    bool is_zero() const
    {
        for (const Int &c : c_)
            if (c != 0)
                return false;
        return true;
    }

    CyclicPoly operator-() const
    {
        CyclicPoly f(n_);
        for (Exp i = 0; i < n_; ++i)
            f.c_[static_cast<std::size_t>(i)] = -c_[static_cast<std::size_t>(i)];
        return f;
    }

    friend CyclicPoly operator+(const CyclicPoly &a, const CyclicPoly &b)
    {
        a.require_same(b);
        CyclicPoly f(a.n_);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            f.c_[i] = a.c_[i] + b.c_[i];
        return f;
    }

    friend CyclicPoly operator-(const CyclicPoly &a, const CyclicPoly &b)
    {
        return a + (-b);
    }

    friend CyclicPoly operator*(const CyclicPoly &a, const CyclicPoly &b)
    {
        a.require_same(b);
        CyclicPoly f(a.n_);
        for (Exp i = 0; i < a.n_; ++i) {
            const Int &ca = a.c_[static_cast<std::size_t>(i)];
            if (ca == 0)
                continue;
            for (Exp j = 0; j < a.n_; ++j)
                f.add_term(i + j, ca * b.c_[static_cast<std::size_t>(j)]);
        }
        return f;
    }

    bool operator==(const CyclicPoly &) const = default;

private:
    static Exp check(Exp n)
    {
        if (n < 2)
            throw Error(ErrorCode::DomainError, "cyclic modulus requires n >= 2");
        return n;
    }

    void require_same(const CyclicPoly &other) const
    {
        if (n_ != other.n_)
            throw Error(ErrorCode::ContractViolation, "mixed cyclic moduli");
    }

    Exp n_;
    std::vector<Int> c_;
};

// Image of f in Z[t]/(t^n - 1): exponents fold mod n, negative ones included.
inline CyclicPoly reduce_mod_cyclic(const LaurentPoly &f, Exp n)
{
    CyclicPoly g(n);
    for (const auto &[e, c] : f.coefficients())
        g.add_term(e, c);
    return g;
}

// The degree < n representative as an ordinary polynomial.
inline LaurentPoly ordinary_representative(const CyclicPoly &f)
{
    LaurentPoly g;
    for (Exp i = 0; i < f.modulus(); ++i)
        g.add_term(i, f.coefficients()[static_cast<std::size_t>(i)]);
    return g;
}

// t -> t^k in the quotient ring; exponent i moves to i*k mod n.
inline CyclicPoly compose_monomial(const CyclicPoly &f, Exp k)
{
    CyclicPoly g(f.modulus());
    for (Exp i = 0; i < f.modulus(); ++i) {
        const Int &c = f.coefficients()[static_cast<std::size_t>(i)];
        if (c != 0)
            g.add_term(i * k, c);
    }
    return g;
}

// A unit +-t^k of Z[t]/(t^n - 1) witnessing f = sign * t^shift * g.
struct UnitWitness {
    int sign = 1;
    Exp shift = 0;

    bool operator==(const UnitWitness &) const = default;
};

// Scans the 2n transformations g -> +-t^k g, k = 0..n-1, and returns the
// first witness making them equal. Only the units {+-t^k} are tested; the
// quotient ring can contain further units, but torsion ambiguity and
// covering relabelings act through these alone.
inline std::optional<UnitWitness> equal_up_to_cyclic_units(const CyclicPoly &f,
                                                           const CyclicPoly &g)
{
    if (f.modulus() != g.modulus())
        throw Error(ErrorCode::ContractViolation, "mixed cyclic moduli");
    const Exp n = f.modulus();
    for (Exp k = 0; k < n; ++k) {
        CyclicPoly candidate(n);
        for (Exp i = 0; i < n; ++i)
            candidate.add_term(i + k, g.coefficients()[static_cast<std::size_t>(i)]);
        if (candidate == f)
            return UnitWitness{1, k};
        if (-candidate == f)
            return UnitWitness{-1, k};
    }
    return std::nullopt;
}

inline std::string to_string(const CyclicPoly &f)
{
    return to_string(ordinary_representative(f));
}

} // namespace lensknot
