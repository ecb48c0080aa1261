#pragma once

#include "lensknot/bigint.hpp"
#include "lensknot/cyclic.hpp"
#include "lensknot/error.hpp"
#include "lensknot/intmatrix.hpp"
#include "lensknot/word.hpp"

#include <string>
#include <vector>

namespace lensknot {

// A (1,1)-knot in the lens space L(p,q), given by the two-generator
// one-relator presentation <alpha, gamma | r(alpha, gamma)> of its group.
// The lens parameter q is metadata only: beyond the gcd(p,q) = 1 validity
// check, no computation in this library consumes q. Everything runs off p
// and the relator's gamma exponent sum q'.
struct OneOneKnot {
    Exp p = 1;
    Exp q = 0;
    Word relator;
    std::string name;
};

inline OneOneKnot make_knot(Exp p, Exp q, const std::string &relator_text,
                            const std::string &name = "")
{
    return OneOneKnot{p, q, parse_relator(relator_text), name};
}

// Structure of H_1 of the knot exterior: <alpha, gamma | p alpha + q' gamma>
// ~ Z + Z/d with d = gcd(p, q'). eta = p_bar alpha + q_bar gamma generates
// the torsion part, xi = -s alpha + r gamma the free part, where
// r p_bar + s q_bar = 1.
struct ExteriorHomology {
    Exp d = 1;       // torsion order, divides p
    Exp p_bar = 1;   // p / d
    Exp q_bar = 0;   // q' / d
    Exp q_prime = 0; // gamma exponent sum of the relator
    Exp bezout_r = 1;
    Exp bezout_s = 0;

    bool operator==(const ExteriorHomology &) const = default;
};

// Checks every OneOneKnot invariant and computes the exterior homology data.
inline ExteriorHomology validate(const OneOneKnot &k)
{
    if (k.p == 0)
        throw Error(ErrorCode::PZero,
                    "p = 0 means the ambient manifold is S^2 x S^1, where the "
                    "strongly-cyclic covering is never unique; not supported");
    if (k.p < 0)
        throw Error(ErrorCode::BadLensParams, "p must be nonnegative");
    if (k.p == 1) {
        if (k.q != 0)
            throw Error(ErrorCode::BadLensParams, "L(1,q) requires q = 0");
    } else {
        if (k.q < 0 || k.q >= k.p)
            throw Error(ErrorCode::BadLensParams, "require 0 <= q < p");
        if (gcd_exp(k.p, k.q) != 1)
            throw Error(ErrorCode::BadLensParams, "gcd(p,q) != 1 is not a lens space");
    }
    if (k.relator.contains(Letter::X))
        throw Error(ErrorCode::ContractViolation, "relator must be a word in alpha and gamma");

    const Exp e_alpha = exponent_sum(k.relator, Generator::alpha());
    if (e_alpha != k.p)
        throw Error(ErrorCode::AlphaSumMismatch,
                    "alpha exponent sum of the relator is " + std::to_string(e_alpha) +
                        ", expected p = " + std::to_string(k.p) +
                        " (a relator with sum -p must be inverted by the caller)");

    ExteriorHomology h;
    h.q_prime = exponent_sum(k.relator, Generator::gamma());
    h.d = gcd_exp(k.p, h.q_prime);
    h.p_bar = k.p / h.d;
    h.q_bar = h.q_prime / h.d;
    Exp r, s;
    extended_gcd(h.p_bar, h.q_bar, r, s);
    h.bezout_r = r;
    h.bezout_s = s;
    return h;
}

// Monodromy of the n-fold strongly-cyclic branched covering, normalized so
// the meridian gamma maps to 1 in Z/n.
struct Monodromy {
    Exp n = 2;
    Exp omega_alpha = 0; // residue mod n
    Exp omega_gamma = 1;

    bool operator==(const Monodromy &) const = default;
};

// Solves p * omega(alpha) = -q' (mod n) directly; this is the proof's
// -q_bar * p_bar^{-1} since d is invertible mod n. Unique iff gcd(n,p) = 1.
inline Monodromy strongly_cyclic_monodromy(const OneOneKnot &k, Exp n)
{
    const ExteriorHomology h = validate(k);
    if (n < 2)
        throw Error(ErrorCode::DomainError, "covering degree requires n >= 2");
    if (gcd_exp(n, k.p) != 1)
        throw Error(ErrorCode::NotCoprime,
                    "gcd(n,p) != 1: the n-fold strongly-cyclic branched covering "
                    "is not unique");
    Monodromy m;
    m.n = n;
    m.omega_alpha = mod_nonneg(-h.q_prime * mod_inverse(k.p, n), n);
    m.omega_gamma = 1;
    return m;
}

// Cyclic presentation G_n(w) = <x_1, ..., x_n | w, theta(w), ...,
// theta^{n-1}(w)> with theta the subscript shift i -> i+1 mod n.
struct CyclicPresentation {
    Exp n = 2;
    Word w;

    bool operator==(const CyclicPresentation &) const = default;
};

// theta_n^s: shifts every subscript by s, representatives in {1, ..., n}.
inline Word theta_shift(const Word &w, Exp n, Exp s)
{
    std::vector<Syllable> raw;
    raw.reserve(w.size());
    for (const Syllable &syl : w.syllables()) {
        if (syl.gen.letter != Letter::X || syl.gen.index == 0)
            throw Error(ErrorCode::ContractViolation,
                        "theta_shift expects a word in x_1, ..., x_n");
        raw.push_back({Generator::x(mod_one_based(syl.gen.index + s, n)), syl.exp});
    }
    return Word(raw);
}

// Lifts the (1,1)-presentation to the n-fold strongly-cyclic covering:
// substitute alpha = x gamma^{omega(alpha)}, read off the profile
// x^{e_1} g^{d_1} ... x^{e_s} g^{d_s}, and subscript each x-letter by
// 1 + (running gamma sum) mod n, representatives in {1, ..., n}. A whole
// x-run keeps a single subscript because the gamma exponent between its
// unit steps is zero.
inline CyclicPresentation lift_presentation(const OneOneKnot &k, Exp n)
{
    const Monodromy mono = strongly_cyclic_monodromy(k, n);
    const Word substituted = substitute_alpha(k.relator, mono.omega_alpha);
    const SyllableProfile profile = syllable_profile(substituted);

    std::vector<Syllable> raw;
    Exp gamma_sum = 0;
    for (const ProfileStep &step : profile) {
        if (step.x_exp != 0)
            raw.push_back({Generator::x(mod_one_based(1 + gamma_sum, n)), step.x_exp});
        gamma_sum += step.gamma_exp;
    }
    return CyclicPresentation{n, Word(raw)};
}

// Polynomial associated to a cyclic presentation: the coefficient of t^{i-1}
// is the total exponent sum of x_i in w, read in Z[t]/(t^n - 1).
inline CyclicPoly associated_polynomial(const CyclicPresentation &cp)
{
    CyclicPoly f(cp.n);
    for (const Syllable &s : cp.w.syllables()) {
        if (s.gen.letter != Letter::X || s.gen.index < 1 || s.gen.index > cp.n)
            throw Error(ErrorCode::ContractViolation,
                        "cyclic presentation word must use x_1, ..., x_n");
        f.add_term(s.gen.index - 1, s.exp);
    }
    return f;
}

// The n-cyclic polynomial Gamma_{K,n} of the knot.
inline CyclicPoly gamma_polynomial(const OneOneKnot &k, Exp n)
{
    return associated_polynomial(lift_presentation(k, n));
}

// Full n x n relation matrix of G_n(w): row s holds the exponent sums of
// theta^s(w). Slower than the circulant shortcut and kept as its
// independent cross-check.
inline IntMatrix relation_matrix(const CyclicPresentation &cp)
{
    IntMatrix m(cp.n, cp.n);
    for (Exp s = 0; s < cp.n; ++s) {
        const Word shifted = s == 0 ? cp.w : theta_shift(cp.w, cp.n, s);
        for (Exp i = 1; i <= cp.n; ++i)
            m.at(s, i - 1) = exponent_sum(shifted, Generator::x(i));
    }
    return m;
}

} // namespace lensknot
