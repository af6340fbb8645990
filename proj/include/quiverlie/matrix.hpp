#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "quiverlie/rational.hpp"

namespace quiverlie {

// Dense exact-rational matrix.  Sizes here are tiny (graded pieces of small
// representations), so no sparsity games.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), d_(rows * cols, Rat(0)) {}

    static RatMatrix identity(size_t k) {
        RatMatrix m(k, k);
        for (size_t i = 0; i < k; ++i) m.at(i, i) = 1;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rat& at(size_t r, size_t c) { return d_[r * cols_ + c]; }
    const Rat& at(size_t r, size_t c) const { return d_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& x : d_)
            if (x != 0) return false;
        return true;
    }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
        RatMatrix c(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k) == 0) continue;
                for (size_t j = 0; j < b.cols_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return c;
    }

    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch in difference");
        RatMatrix c(a.rows_, a.cols_);
        for (size_t i = 0; i < a.d_.size(); ++i) c.d_[i] = a.d_[i] - b.d_[i];
        return c;
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
    }

    RatMatrix transpose() const {
        RatMatrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

private:
    size_t rows_, cols_;
    std::vector<Rat> d_;
};

// Rank by fraction-free (Bareiss) elimination on the integer matrix obtained
// by clearing denominators row by row.
inline long long rank(const RatMatrix& m) {
    size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (size_t i = 0; i < rows; ++i) {
        mpz_class lcm = 1;
        for (size_t j = 0; j < cols; ++j) {
            mpz_class den = m.at(i, j).get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (size_t j = 0; j < cols; ++j) {
            Rat v = m.at(i, j) * Rat(lcm);
            a[i][j] = v.get_num();  // exact: lcm clears every denominator
        }
    }
    size_t r = 0;
    mpz_class prev = 1;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<long long>(r);
}

// Columns form a basis of the kernel of m.
inline RatMatrix nullspace(const RatMatrix& m) {
    size_t rows = m.rows(), cols = m.cols();
    RatMatrix a = m;
    std::vector<long long> pivot_col(rows, -1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a.at(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        for (size_t j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
        Rat inv = 1 / a.at(r, c);
        for (size_t j = c; j < cols; ++j) a.at(r, j) *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            Rat f = a.at(i, c);
            for (size_t j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivot_col[r] = static_cast<long long>(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (size_t i = 0; i < r; ++i) is_pivot[static_cast<size_t>(pivot_col[i])] = true;
    RatMatrix ker(cols, cols - r);
    size_t k = 0;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        ker.at(free, k) = 1;
        for (size_t i = 0; i < r; ++i)
            ker.at(static_cast<size_t>(pivot_col[i]), k) = -a.at(i, free);
        ++k;
    }
    return ker;
}

inline RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    size_t k = m.rows();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(k);
    for (size_t c = 0; c < k; ++c) {
        size_t piv = c;
        while (piv < k && a.at(piv, c) == 0) ++piv;
        if (piv == k) throw std::domain_error("matrix is singular");
        for (size_t j = 0; j < k; ++j) {
            std::swap(a.at(piv, j), a.at(c, j));
            std::swap(inv.at(piv, j), inv.at(c, j));
        }
        Rat s = 1 / a.at(c, c);
        for (size_t j = 0; j < k; ++j) {
            a.at(c, j) *= s;
            inv.at(c, j) *= s;
        }
        for (size_t i = 0; i < k; ++i) {
            if (i == c || a.at(i, c) == 0) continue;
            Rat f = a.at(i, c);
            for (size_t j = 0; j < k; ++j) {
                a.at(i, j) -= f * a.at(c, j);
                inv.at(i, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

}  // namespace quiverlie
