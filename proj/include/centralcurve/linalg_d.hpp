#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

namespace centralcurve {

using DVec = std::vector<double>;
using DMat = std::vector<std::vector<double>>; // row-major dense

inline double dot(const DVec& a, const DVec& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const DVec& a) { return std::sqrt(dot(a, a)); }

inline double norm_inf(const DVec& a) {
    double m = 0;
    for (double v : a) m = std::max(m, std::fabs(v));
    return m;
}

inline DVec mat_vec(const DMat& M, const DVec& v) {
    DVec out(M.size(), 0.0);
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += M[i][j] * v[j];
    return out;
}

inline DVec mat_t_vec(const DMat& M, const DVec& v) {
    std::size_t n = M.empty() ? 0 : M[0].size();
    DVec out(n, 0.0);
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) out[j] += M[i][j] * v[i];
    return out;
}

// LU with partial pivoting; empty result on (numerical) singularity.
inline std::optional<DVec> solve_dense(DMat A, DVec b) {
    std::size_t n = A.size();
    if (n == 0) return DVec{};
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::fabs(A[i][k]) > std::fabs(A[p][k])) p = i;
        if (A[p][k] == 0.0) return std::nullopt;
        if (p != k) {
            std::swap(A[p], A[k]);
            std::swap(b[p], b[k]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            double f = A[i][k] / A[k][k];
            if (f == 0.0) continue;
            A[i][k] = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) A[i][j] -= f * A[k][j];
            b[i] -= f * b[k];
        }
    }
    DVec x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= A[i][j] * x[j];
        if (A[i][i] == 0.0) return std::nullopt;
        x[i] = s / A[i][i];
    }
    return x;
}

// Least-squares solution of M^T y ~= r (overdetermined in y) via the normal
// equations (M M^T) y = M r; M is d x n with independent rows at call sites.
inline std::optional<DVec> solve_least_squares_rows(const DMat& M, const DVec& r) {
    std::size_t d = M.size();
    DMat G(d, DVec(d, 0.0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) G[i][j] = dot(M[i], M[j]);
    DVec rhs(d, 0.0);
    for (std::size_t i = 0; i < d; ++i) rhs[i] = dot(M[i], r);
    return solve_dense(std::move(G), std::move(rhs));
}

} // namespace centralcurve
