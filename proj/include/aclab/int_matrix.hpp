#pragma once

#include <gmpxx.h>

#include <vector>

namespace aclab {

using BigInt = mpz_class;

// Dense matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigInt& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const BigInt& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;

    // exact determinant (square matrices), fraction-free elimination
    BigInt det() const;
    bool is_unimodular() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<BigInt> a_;
};

struct SmithDecomposition {
    IntMatrix u;  // unimodular rows x rows
    IntMatrix d;  // diagonal, d_i >= 0, d_i | d_{i+1}
    IntMatrix v;  // unimodular cols x cols
};

// U*M*V = D with deterministic pivoting: smallest nonzero |entry|, ties by
// row-major position.
SmithDecomposition smith_normal_form(const IntMatrix& m);

// invariant factors of coker(M) read off the diagonal, 1s dropped
std::vector<BigInt> smith_invariants(const IntMatrix& m);

}  // namespace aclab
