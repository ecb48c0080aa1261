#pragma once

#include "lensknot/bigint.hpp"
#include "lensknot/error.hpp"

#include <vector>

namespace lensknot {

// Dense matrix of arbitrary-precision integers, row major.
class IntMatrix {
public:
    IntMatrix(Exp rows, Exp cols)
        : rows_(rows), cols_(cols),
          e_(static_cast<std::size_t>(check_dim(rows) * check_dim(cols)), Int(0))
    {
    }

    static IntMatrix identity(Exp n)
    {
        IntMatrix m(n, n);
        for (Exp i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    Exp rows() const { return rows_; }
    Exp cols() const { return cols_; }

    Int &at(Exp i, Exp j) { return e_[static_cast<std::size_t>(i * cols_ + j)]; }
    const Int &at(Exp i, Exp j) const { return e_[static_cast<std::size_t>(i * cols_ + j)]; }

    friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b)
    {
        if (a.cols_ != b.rows_)
            throw Error(ErrorCode::ContractViolation, "matrix dimension mismatch");
        IntMatrix c(a.rows_, b.cols_);
        for (Exp i = 0; i < a.rows_; ++i)
            for (Exp k = 0; k < a.cols_; ++k) {
                const Int &aik = a.at(i, k);
                if (aik == 0)
                    continue;
                for (Exp j = 0; j < b.cols_; ++j)
                    c.at(i, j) += aik * b.at(k, j);
            }
        return c;
    }

    bool operator==(const IntMatrix &) const = default;

private:
    static Exp check_dim(Exp d)
    {
        if (d < 1)
            throw Error(ErrorCode::DomainError, "matrix dimensions must be positive");
        return d;
    }

    Exp rows_, cols_;
    std::vector<Int> e_;
};

// n x n matrix whose row i is the first row cyclically shifted right i times.
inline IntMatrix circulant(const std::vector<Int> &first_row)
{
    if (first_row.empty())
        throw Error(ErrorCode::DomainError, "circulant of an empty row");
    const Exp n = static_cast<Exp>(first_row.size());
    IntMatrix m(n, n);
    for (Exp i = 0; i < n; ++i)
        for (Exp j = 0; j < n; ++j)
            m.at(i, j) = first_row[static_cast<std::size_t>(mod_nonneg(j - i, n))];
    return m;
}

} // namespace lensknot
