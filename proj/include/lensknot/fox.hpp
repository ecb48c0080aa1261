#pragma once

#include "lensknot/bigint.hpp"
#include "lensknot/laurent.hpp"
#include "lensknot/word.hpp"

#include <map>
#include <string>

namespace lensknot {

// Element of the integral group ring of the free group: a finite Z-linear
// combination of freely reduced words.
class GroupRingElement {
public:
    GroupRingElement() = default;

    GroupRingElement(const Int &constant)
    {
        if (constant != 0)
            terms_[Word()] = constant;
    }

    GroupRingElement(int constant) : GroupRingElement(Int(constant)) {}

    static GroupRingElement of_word(const Word &w, const Int &coeff = 1)
    {
        GroupRingElement e;
        e.add_term(w, coeff);
        return e;
    }

    const std::map<Word, Int> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word &w, const Int &c)
    {
        if (c == 0)
            return;
        Int &slot = terms_[w];
        slot += c;
        if (slot == 0)
            terms_.erase(w);
    }

    GroupRingElement operator-() const
    {
        GroupRingElement e;
        for (const auto &[w, c] : terms_)
            e.terms_[w] = -c;
        return e;
    }

    GroupRingElement &operator+=(const GroupRingElement &rhs)
    {
        for (const auto &[w, c] : rhs.terms_)
            add_term(w, c);
        return *this;
    }

    GroupRingElement &operator-=(const GroupRingElement &rhs)
    {
        for (const auto &[w, c] : rhs.terms_)
            add_term(w, -c);
        return *this;
    }

    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement &b)
    {
        return a += b;
    }

    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement &b)
    {
        return a -= b;
    }

    friend GroupRingElement operator*(const GroupRingElement &a, const GroupRingElement &b)
    {
        GroupRingElement e;
        for (const auto &[wa, ca] : a.terms_)
            for (const auto &[wb, cb] : b.terms_)
                e.add_term(wa * wb, ca * cb);
        return e;
    }

    bool operator==(const GroupRingElement &) const = default;

private:
    std::map<Word, Int> terms_;
};

// Free Fox derivative with respect to g: d(uv) = du + u dv, dg/dg = 1,
// d(g^{-1})/dg = -g^{-1}, and zero on other letters. Powers expand through
// the product rule: d(g^e)/dg = 1 + g + ... + g^{e-1} for e > 0 and
// -(g^{-1} + ... + g^{e}) for e < 0.
inline GroupRingElement fox_derivative(const Word &w, Generator g)
{
    GroupRingElement result;
    Word prefix;
    for (const Syllable &s : w.syllables()) {
        if (s.gen == g) {
            if (s.exp > 0) {
                for (Exp i = 0; i < s.exp; ++i)
                    result.add_term(prefix * pow(Word::letter(g), i), 1);
            } else {
                for (Exp i = 1; i <= -s.exp; ++i)
                    result.add_term(prefix * pow(Word::letter(g), -i), -1);
            }
        }
        prefix = prefix * Word::letter(s.gen, s.exp);
    }
    return result;
}

// Abelianized substitution alpha -> t^{alpha_exp}, gamma -> t^{gamma_exp}:
// each word maps to t raised to the weighted sum of its exponent sums.
// Letters other than alpha and gamma carry weight zero, i.e. map to 1.
inline LaurentPoly evaluate_abelianized(const GroupRingElement &e, Exp alpha_exp,
                                        Exp gamma_exp)
{
    LaurentPoly f;
    for (const auto &[w, c] : e.terms()) {
        const Exp weight = alpha_exp * exponent_sum(w, Generator::alpha()) +
                           gamma_exp * exponent_sum(w, Generator::gamma());
        f.add_term(weight, c);
    }
    return f;
}

inline std::string to_string(const GroupRingElement &e)
{
    if (e.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto &[w, c] : e.terms()) {
        const bool negative = c < 0;
        const Int mag = negative ? Int(-c) : c;
        if (first) {
            if (negative)
                out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        const std::string word_text = w.is_identity() ? "1" : to_string(w);
        if (mag == 1)
            out += word_text;
        else if (w.is_identity())
            out += mag.str();
        else
            out += mag.str() + "*" + word_text;
    }
    return out;
}

} // namespace lensknot
