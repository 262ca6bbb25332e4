#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace centralcurve {

using RationalVector = std::vector<Rational>;

// Dense matrix of exact rationals, row-major.
class RationalMatrix {
  public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_)
            throw MismatchedShape("entry count " + std::to_string(e_.size()) + " for " +
                                  std::to_string(rows_) + "x" + std::to_string(cols_));
    }

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    static RationalMatrix from_rows(const std::vector<RationalVector>& rows) {
        std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
        RationalMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw MismatchedShape("ragged rows");
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool is_zero() const {
        return std::all_of(e_.begin(), e_.end(), [](const Rational& v) { return v.is_zero(); });
    }

    RationalMatrix transpose() const {
        RationalMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    RationalMatrix mul(const RationalMatrix& o) const {
        if (cols_ != o.rows_) throw MismatchedShape("matrix product");
        RationalMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }

    RationalVector mul_vec(const RationalVector& v) const {
        if (cols_ != v.size()) throw MismatchedShape("matrix-vector product");
        RationalVector r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
        return r;
    }

    RationalMatrix select_columns(const std::vector<std::size_t>& cols) const {
        RationalMatrix r(rows_, cols.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) r.at(i, j) = at(i, cols[j]);
        return r;
    }

    RationalMatrix select_rows(const std::vector<std::size_t>& rows) const {
        RationalMatrix r(rows.size(), cols_);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(rows[i], j);
        return r;
    }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

struct RrefResult {
    RationalMatrix R;
    std::vector<std::size_t> pivots; // pivot column indices, increasing
};

// Reduced row echelon form by exact Gauss-Jordan elimination.
inline RrefResult rref(const RationalMatrix& M) {
    RationalMatrix R = M;
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t col = 0; col < R.cols() && pr < R.rows(); ++col) {
        std::size_t sel = pr;
        while (sel < R.rows() && R.at(sel, col).is_zero()) ++sel;
        if (sel == R.rows()) continue;
        if (sel != pr)
            for (std::size_t j = 0; j < R.cols(); ++j) std::swap(R.at(sel, j), R.at(pr, j));
        Rational p = R.at(pr, col);
        for (std::size_t j = col; j < R.cols(); ++j) R.at(pr, j) /= p;
        for (std::size_t i = 0; i < R.rows(); ++i) {
            if (i == pr || R.at(i, col).is_zero()) continue;
            Rational f = R.at(i, col);
            for (std::size_t j = col; j < R.cols(); ++j)
                R.at(i, j) -= f * R.at(pr, j);
        }
        pivots.push_back(col);
        ++pr;
    }
    return {std::move(R), std::move(pivots)};
}

inline std::size_t rank(const RationalMatrix& M) { return rref(M).pivots.size(); }

// Rows spanning {v : M v = 0}; count = cols - rank.
inline RationalMatrix kernel_basis(const RationalMatrix& M) {
    RrefResult rr = rref(M);
    std::size_t n = M.cols(), r = rr.pivots.size();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;
    RationalMatrix K(n - r, n);
    std::size_t row = 0;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        K.at(row, free_col) = Rational(1);
        for (std::size_t k = 0; k < r; ++k)
            K.at(row, rr.pivots[k]) = -rr.R.at(k, free_col);
        ++row;
    }
    return K;
}

// Exact determinant of the selected square submatrix, by fraction-free
// Bareiss elimination after clearing row denominators.
inline Rational submatrix_det(const RationalMatrix& M, const std::vector<std::size_t>& rows,
                              const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size())
        throw MismatchedShape("determinant needs a square selection, got " +
                              std::to_string(rows.size()) + "x" + std::to_string(cols.size()));
    std::size_t n = rows.size();
    if (n == 0) return Rational(1);
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    mpz_class scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < n; ++j) {
            mpz_class d = M.at(rows[i], cols[j]).den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
            l = l / g * d;
        }
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& v = M.at(rows[i], cols[j]);
            a[i][j] = v.num() * (l / v.den());
        }
        scale *= l;
    }
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t sel = k + 1;
            while (sel < n && a[sel][k] == 0) ++sel;
            if (sel == n) return Rational(0);
            std::swap(a[k], a[sel]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    mpz_class det = a[n - 1][n - 1];
    if (sign < 0) det = -det;
    return Rational(mpq_class(det) / mpq_class(scale));
}

// Indices of a maximal independent subset of rows, in increasing order.
inline std::vector<std::size_t> row_basis_indices(const RationalMatrix& M) {
    return rref(M.transpose()).pivots;
}

// Solve M z = rhs exactly when consistent; empty optional otherwise.
// For underdetermined systems returns the solution with free variables zero.
inline std::optional<RationalVector> solve_linear(const RationalMatrix& M, const RationalVector& rhs) {
    if (M.rows() != rhs.size()) throw MismatchedShape("solve dimensions");
    RationalMatrix aug(M.rows(), M.cols() + 1);
    for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t j = 0; j < M.cols(); ++j) aug.at(i, j) = M.at(i, j);
        aug.at(i, M.cols()) = rhs[i];
    }
    RrefResult rr = rref(aug);
    for (std::size_t c : rr.pivots)
        if (c == M.cols()) return std::nullopt; // inconsistent
    RationalVector x(M.cols());
    for (std::size_t k = 0; k < rr.pivots.size(); ++k)
        x[rr.pivots[k]] = rr.R.at(k, M.cols());
    return x;
}

// Minimum-norm solution of M z = rhs via exact normal equations z = Mᵀ(MMᵀ)⁻¹rhs.
// Requires full row rank.
inline RationalVector solve_min_norm(const RationalMatrix& M, const RationalVector& rhs) {
    RationalMatrix Mt = M.transpose();
    RationalMatrix G = M.mul(Mt); // d x d, invertible when M has full row rank
    auto w = solve_linear(G, rhs);
    if (!w) throw RankDeficient("normal equations singular");
    return Mt.mul_vec(*w);
}

} // namespace centralcurve
