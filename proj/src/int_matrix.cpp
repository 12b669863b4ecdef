#include "aclab/int_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace aclab {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const BigInt& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

BigInt IntMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("IntMatrix::det: not square");
    const int n = rows_;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    IntMatrix a = *this;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                BigInt num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

bool IntMatrix::is_unimodular() const {
    if (rows_ != cols_) return false;
    BigInt d = det();
    return d == 1 || d == -1;
}

namespace {

struct Worker {
    IntMatrix a, u, v;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
        for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
        for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    void add_row(int dst, int src, const BigInt& f) {  // row dst += f * row src
        for (int c = 0; c < a.cols(); ++c) a.at(dst, c) += f * a.at(src, c);
        for (int c = 0; c < u.cols(); ++c) u.at(dst, c) += f * u.at(src, c);
    }
    void add_col(int dst, int src, const BigInt& f) {
        for (int r = 0; r < a.rows(); ++r) a.at(r, dst) += f * a.at(r, src);
        for (int r = 0; r < v.rows(); ++r) v.at(r, dst) += f * v.at(r, src);
    }
    void negate_row(int i) {
        for (int c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
        for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    Worker w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    const int rows = m.rows(), cols = m.cols();
    const int rank_bound = std::min(rows, cols);

    for (int t = 0; t < rank_bound; ++t) {
        bool empty = false;
        for (;;) {
            // pivot: smallest nonzero |entry| in the trailing block, row-major ties
            int pr = -1, pc = -1;
            BigInt best;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j) {
                    const BigInt& e = w.a.at(i, j);
                    if (e == 0) continue;
                    BigInt mag = abs(e);
                    if (pr < 0 || mag < best) {
                        best = mag;
                        pr = i;
                        pc = j;
                    }
                }
            if (pr < 0) {
                empty = true;
                break;
            }
            w.swap_rows(t, pr);
            w.swap_cols(t, pc);

            // one pass of remainders; any nonzero remainder is a strictly
            // smaller entry, so restart with it as the next pivot
            bool reduced = false;
            for (int i = t + 1; i < rows; ++i) {
                if (w.a.at(i, t) == 0) continue;
                BigInt q = w.a.at(i, t) / w.a.at(t, t);
                w.add_row(i, t, -q);
                if (w.a.at(i, t) != 0) reduced = true;
            }
            if (reduced) continue;
            for (int j = t + 1; j < cols; ++j) {
                if (w.a.at(t, j) == 0) continue;
                BigInt q = w.a.at(t, j) / w.a.at(t, t);
                w.add_col(j, t, -q);
                if (w.a.at(t, j) != 0) reduced = true;
            }
            if (reduced) continue;

            // pivot must divide the whole trailing block; folding an offending
            // row into row t leaves a remainder on the next round
            int bi = -1;
            for (int i = t + 1; i < rows && bi < 0; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (w.a.at(i, j) % w.a.at(t, t) != 0) {
                        bi = i;
                        break;
                    }
            if (bi < 0) break;
            w.add_row(t, bi, 1);
        }
        if (empty) break;
        if (w.a.at(t, t) < 0) w.negate_row(t);
    }

    SmithDecomposition out{std::move(w.u), std::move(w.a), std::move(w.v)};
    return out;
}

std::vector<BigInt> smith_invariants(const IntMatrix& m) {
    SmithDecomposition s = smith_normal_form(m);
    std::vector<BigInt> inv;
    for (int i = 0; i < std::min(s.d.rows(), s.d.cols()); ++i)
        if (s.d.at(i, i) != 1) inv.push_back(s.d.at(i, i));
    return inv;
}

}  // namespace aclab
