#pragma once

#include "lensknot/bigint.hpp"
#include "lensknot/error.hpp"

#include <compare>
#include <cstdlib>
#include <string>
#include <vector>

namespace lensknot {

// The alphabets in play: the knot-group generators alpha and gamma, the
// substitution placeholder x = X(0), and the cyclic-presentation generators
// x_1, ..., x_n = X(1), ..., X(n).
enum class Letter { Alpha, Gamma, X };

struct Generator {
    Letter letter = Letter::Alpha;
    Exp index = 0; // subscript of X; 0 is the unsubscripted placeholder

    static Generator alpha() { return {Letter::Alpha, 0}; }
    static Generator gamma() { return {Letter::Gamma, 0}; }
    static Generator x(Exp i = 0) { return {Letter::X, i}; }

    auto operator<=>(const Generator &) const = default;
};

struct Syllable {
    Generator gen;
    Exp exp = 1; // never zero in a stored word

    auto operator<=>(const Syllable &) const = default;
};

// Freely reduced word: adjacent syllables never share a generator, no zero
// exponents, empty sequence is the identity. Reduction happens on
// construction, so a Word is reduced by definition.
class Word {
public:
    Word() = default;

    explicit Word(const std::vector<Syllable> &raw)
    {
        for (const Syllable &s : raw)
            push(s.gen, s.exp);
    }

    static Word one() { return Word(); }

    static Word letter(Generator g, Exp e = 1)
    {
        Word w;
        w.push(g, e);
        return w;
    }

    const std::vector<Syllable> &syllables() const { return syl_; }
    bool is_identity() const { return syl_.empty(); }
    std::size_t size() const { return syl_.size(); }

    Word operator*(const Word &rhs) const
    {
        Word w = *this;
        for (const Syllable &s : rhs.syl_)
            w.push(s.gen, s.exp);
        return w;
    }

    Word inverse() const
    {
        Word w;
        for (auto it = syl_.rbegin(); it != syl_.rend(); ++it)
            w.push(it->gen, -it->exp);
        return w;
    }

    bool contains(Letter l) const
    {
        for (const Syllable &s : syl_)
            if (s.gen.letter == l)
                return true;
        return false;
    }

    auto operator<=>(const Word &) const = default;

private:
    // Appends g^e, merging and cancelling against the current tail.
    void push(Generator g, Exp e)
    {
        if (e == 0)
            return;
        if (!syl_.empty() && syl_.back().gen == g) {
            syl_.back().exp += e;
            if (syl_.back().exp == 0)
                syl_.pop_back();
            return;
        }
        syl_.push_back({g, e});
    }

    std::vector<Syllable> syl_;
};

inline Word pow(const Word &w, Exp k)
{
    Word base = k < 0 ? w.inverse() : w;
    Exp reps = k < 0 ? -k : k;
    Word result;
    for (Exp i = 0; i < reps; ++i)
        result = result * base;
    return result;
}

// Relator grammar: word := { term } ; term := letter [ '^' int ] ;
// letter := 'a'|'A'|'g'|'G' ; int := ['-'] digit+ ; whitespace ignored.
// Uppercase letter == lowercase with negated exponent.
inline Word parse_relator(const std::string &text)
{
    std::vector<Syllable> raw;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        Generator g;
        Exp sign = 1;
        switch (c) {
        case 'a': g = Generator::alpha(); break;
        case 'A': g = Generator::alpha(); sign = -1; break;
        case 'g': g = Generator::gamma(); break;
        case 'G': g = Generator::gamma(); sign = -1; break;
        default:
            throw ParseError(i, std::string("unknown letter '") + c + "'");
        }
        ++i;
        Exp e = 1;
        if (i < n && text[i] == '^') {
            std::size_t mark = i;
            ++i;
            bool neg = false;
            if (i < n && text[i] == '-') {
                neg = true;
                ++i;
            }
            if (i >= n || text[i] < '0' || text[i] > '9')
                throw ParseError(mark, "malformed exponent");
            Exp v = 0;
            while (i < n && text[i] >= '0' && text[i] <= '9') {
                if (v > (INT64_MAX - 9) / 10)
                    throw ParseError(mark, "exponent out of range");
                v = v * 10 + (text[i] - '0');
                ++i;
            }
            e = neg ? -v : v;
        }
        raw.push_back({g, sign * e});
    }
    return Word(raw);
}

namespace detail {

inline std::string relator_token(const Syllable &s)
{
    char lower, upper;
    switch (s.gen.letter) {
    case Letter::Alpha: lower = 'a'; upper = 'A'; break;
    case Letter::Gamma: lower = 'g'; upper = 'G'; break;
    default: lower = 'x'; upper = 'X'; break;
    }
    Exp mag = s.exp < 0 ? -s.exp : s.exp;
    std::string out(1, s.exp < 0 ? upper : lower);
    if (mag != 1)
        out += "^" + std::to_string(mag);
    return out;
}

} // namespace detail

// Inverse of parse_relator on alpha/gamma words; words that mention X
// generators render as space-separated "x3^-2" tokens instead.
inline std::string to_string(const Word &w)
{
    if (w.is_identity())
        return "";
    if (!w.contains(Letter::X)) {
        std::string out;
        for (const Syllable &s : w.syllables())
            out += detail::relator_token(s);
        return out;
    }
    std::string out;
    for (const Syllable &s : w.syllables()) {
        if (!out.empty())
            out += ' ';
        switch (s.gen.letter) {
        case Letter::Alpha: out += 'a'; break;
        case Letter::Gamma: out += 'g'; break;
        case Letter::X:
            out += 'x';
            out += std::to_string(s.gen.index);
            break;
        }
        if (s.exp != 1)
            out += "^" + std::to_string(s.exp);
    }
    return out;
}

// Total exponent sum of the generator g in w.
inline Exp exponent_sum(const Word &w, Generator g)
{
    Exp total = 0;
    for (const Syllable &s : w.syllables())
        if (s.gen == g)
            total += s.exp;
    return total;
}

// Rewrites every alpha^e as (x gamma^c)^e with x the placeholder X(0), then
// freely reduces. Input must be a word in alpha and gamma.
inline Word substitute_alpha(const Word &w, Exp c)
{
    if (w.contains(Letter::X))
        throw Error(ErrorCode::ContractViolation,
                    "substitute_alpha expects a word in alpha and gamma");
    std::vector<Syllable> raw;
    const Generator x = Generator::x(0);
    const Generator gamma = Generator::gamma();
    for (const Syllable &s : w.syllables()) {
        if (s.gen.letter == Letter::Gamma) {
            raw.push_back(s);
            continue;
        }
        Exp reps = s.exp < 0 ? -s.exp : s.exp;
        for (Exp i = 0; i < reps; ++i) {
            if (s.exp > 0) {
                raw.push_back({x, 1});
                if (c != 0)
                    raw.push_back({gamma, c});
            } else {
                if (c != 0)
                    raw.push_back({gamma, -c});
                raw.push_back({x, -1});
            }
        }
    }
    return Word(raw);
}

// One step x^{x_exp} gamma^{gamma_exp} of the decomposition
// w = x^{e_1} g^{d_1} ... x^{e_s} g^{d_s}. x_exp is nonzero everywhere
// except in an optional leading step {0, d} absorbing a gamma prefix.
struct ProfileStep {
    Exp x_exp = 0;
    Exp gamma_exp = 0;

    auto operator<=>(const ProfileStep &) const = default;
};

using SyllableProfile = std::vector<ProfileStep>;

inline SyllableProfile syllable_profile(const Word &w)
{
    SyllableProfile profile;
    for (const Syllable &s : w.syllables()) {
        if (s.gen.letter == Letter::Alpha || (s.gen.letter == Letter::X && s.gen.index != 0))
            throw Error(ErrorCode::ContractViolation,
                        "syllable_profile expects a word in x and gamma");
        if (s.gen.letter == Letter::X) {
            profile.push_back({s.exp, 0});
        } else {
            if (profile.empty())
                profile.push_back({0, s.exp}); // word begins with a gamma run
            else
                profile.back().gamma_exp = s.exp;
        }
    }
    return profile;
}

inline Word assemble_profile(const SyllableProfile &profile)
{
    std::vector<Syllable> raw;
    for (const ProfileStep &step : profile) {
        if (step.x_exp != 0)
            raw.push_back({Generator::x(0), step.x_exp});
        if (step.gamma_exp != 0)
            raw.push_back({Generator::gamma(), step.gamma_exp});
    }
    return Word(raw);
}

} // namespace lensknot
