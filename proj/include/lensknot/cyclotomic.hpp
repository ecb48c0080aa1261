#pragma once

#include "lensknot/error.hpp"
#include "lensknot/laurent.hpp"

#include <algorithm>
#include <vector>

namespace lensknot {

inline std::vector<Exp> divisors(Exp n)
{
    std::vector<Exp> out;
    for (Exp d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d)
                out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// s-th cyclotomic polynomial via Phi_s = (t^s - 1) / prod_{d|s, d<s} Phi_d.
inline LaurentPoly cyclotomic(Exp s)
{
    if (s < 1)
        throw Error(ErrorCode::DomainError, "cyclotomic expects s >= 1");
    LaurentPoly quotient = power_minus_one(s);
    for (Exp d : divisors(s))
        if (d != s)
            quotient = exact_divide(quotient, cyclotomic(d));
    return quotient;
}

} // namespace lensknot
