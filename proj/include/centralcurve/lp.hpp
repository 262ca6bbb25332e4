#pragma once

#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace centralcurve {

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    RationalVector x;              // primal solution (length n) when Optimal
    Rational objective;            // c^T x when Optimal
    std::vector<std::size_t> basis; // basic column indices, sorted, when Optimal
};

namespace detail {

// Dense simplex tableau over exact rationals; Bland's rule, so termination is
// guaranteed without perturbation.
class SimplexTableau {
  public:
    // rows x (ncols+1); last column is the right-hand side
    SimplexTableau(std::size_t nrows, std::size_t ncols)
        : ncols_(ncols), t_(nrows, RationalVector(ncols + 1)), basis_(nrows, SIZE_MAX) {}

    Rational& at(std::size_t i, std::size_t j) { return t_[i][j]; }
    Rational& rhs(std::size_t i) { return t_[i][ncols_]; }
    std::size_t rows() const { return t_.size(); }
    std::size_t cols() const { return ncols_; }
    std::vector<std::size_t>& basis() { return basis_; }

    void pivot(std::size_t pr, std::size_t pc) {
        Rational p = t_[pr][pc];
        for (auto& v : t_[pr]) v /= p;
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (i == pr || t_[i][pc].is_zero()) continue;
            Rational f = t_[i][pc];
            for (std::size_t j = 0; j <= ncols_; ++j) t_[i][j] -= f * t_[pr][j];
        }
        basis_[pr] = pc;
    }

    // Minimize c over the current feasible tableau. Returns false on
    // unboundedness. `restrict_cols`: only columns < restrict_cols may enter.
    bool minimize(const RationalVector& c, std::size_t restrict_cols) {
        // reduced costs: z_j = c_j - c_B^T B^{-1} A_j maintained implicitly by
        // recomputation each iteration (row count is small at desk scale)
        while (true) {
            RationalVector red(restrict_cols);
            for (std::size_t j = 0; j < restrict_cols; ++j) {
                Rational z = c[j];
                for (std::size_t i = 0; i < t_.size(); ++i) {
                    std::size_t bj = basis_[i];
                    if (bj < c.size() && !c[bj].is_zero() && !t_[i][j].is_zero())
                        z -= c[bj] * t_[i][j];
                }
                red[j] = z;
            }
            std::size_t enter = SIZE_MAX;
            for (std::size_t j = 0; j < restrict_cols; ++j) {
                bool is_basic = false;
                for (std::size_t i = 0; i < t_.size(); ++i)
                    if (basis_[i] == j) { is_basic = true; break; }
                if (!is_basic && red[j].sign() < 0) { enter = j; break; } // Bland: first index
            }
            if (enter == SIZE_MAX) return true; // optimal
            std::size_t leave = SIZE_MAX;
            Rational best_ratio;
            for (std::size_t i = 0; i < t_.size(); ++i) {
                if (t_[i][enter].sign() <= 0) continue;
                Rational ratio = rhs(i) / t_[i][enter];
                if (leave == SIZE_MAX || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == SIZE_MAX) return false; // unbounded
            pivot(leave, enter);
        }
    }

  private:
    std::size_t ncols_;
    std::vector<RationalVector> t_;
    std::vector<std::size_t> basis_;
};

} // namespace detail

// Exact solution of min c^T x subject to A x = b, x >= 0 (two-phase simplex).
inline LPResult lp_solve_eq(const RationalMatrix& A, RationalVector b, const RationalVector& c) {
    std::size_t d = A.rows(), n = A.cols();
    if (b.size() != d || c.size() != n) throw MismatchedShape("lp dimensions");
    detail::SimplexTableau tab(d, n + d);
    for (std::size_t i = 0; i < d; ++i) {
        int flip = b[i].sign() < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = Rational(flip) * A.at(i, j);
        tab.rhs(i) = Rational(flip) * b[i];
        tab.at(i, n + i) = Rational(1);
        tab.basis()[i] = n + i;
    }
    // phase 1: minimize the sum of artificials
    RationalVector phase1(n + d);
    for (std::size_t i = 0; i < d; ++i) phase1[n + i] = Rational(1);
    if (!tab.minimize(phase1, n + d))
        throw InternalInconsistency("phase-1 objective is bounded below by zero");
    Rational art_sum(0);
    for (std::size_t i = 0; i < d; ++i)
        if (tab.basis()[i] >= n) art_sum += tab.rhs(i);
    if (!art_sum.is_zero()) return {LPStatus::Infeasible, {}, Rational(0), {}};
    // drive remaining zero-level artificials out of the basis when possible
    std::vector<std::size_t> live_rows;
    for (std::size_t i = 0; i < d; ++i) {
        if (tab.basis()[i] < n) { live_rows.push_back(i); continue; }
        std::size_t pc = SIZE_MAX;
        for (std::size_t j = 0; j < n && pc == SIZE_MAX; ++j)
            if (!tab.at(i, j).is_zero()) pc = j;
        if (pc != SIZE_MAX) {
            tab.pivot(i, pc);
            live_rows.push_back(i);
        }
        // else: redundant row; leave the artificial basic at level zero, it
        // never blocks (its row is zero on all original columns)
    }
    // phase 2
    RationalVector full_c(n + d);
    for (std::size_t j = 0; j < n; ++j) full_c[j] = c[j];
    if (!tab.minimize(full_c, n)) return {LPStatus::Unbounded, {}, Rational(0), {}};
    LPResult res;
    res.status = LPStatus::Optimal;
    res.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < d; ++i)
        if (tab.basis()[i] < n) res.x[tab.basis()[i]] = tab.rhs(i);
    res.objective = Rational(0);
    for (std::size_t j = 0; j < n; ++j) res.objective += c[j] * res.x[j];
    for (std::size_t i = 0; i < d; ++i)
        if (tab.basis()[i] < n) res.basis.push_back(tab.basis()[i]);
    std::sort(res.basis.begin(), res.basis.end());
    return res;
}

// Feasibility of {A x = b, x >= 0} with a strictly positive interior witness:
// maximize t subject to x = t*1 + w, w >= 0, 0 <= t <= 1. The optimum is
// positive iff the region has a strictly positive point.
struct InteriorPointResult {
    bool feasible = false;      // some x >= 0
    bool strictly = false;      // some x > 0 componentwise
    RationalVector x;           // the witness (at the optimal t)
    Rational t;                 // the margin found
};

inline InteriorPointResult interior_point(const RationalMatrix& A, const RationalVector& b) {
    std::size_t d = A.rows(), n = A.cols();
    // variables: w (n), t (1), slack for t <= 1 (1); rows: d + 1
    RationalMatrix M(d + 1, n + 2);
    RationalVector rhs(d + 1);
    for (std::size_t i = 0; i < d; ++i) {
        Rational rowsum(0);
        for (std::size_t j = 0; j < n; ++j) {
            M.at(i, j) = A.at(i, j);
            rowsum += A.at(i, j);
        }
        M.at(i, n) = rowsum; // coefficient of t
        rhs[i] = b[i];
    }
    M.at(d, n) = Rational(1);
    M.at(d, n + 1) = Rational(1);
    rhs[d] = Rational(1);
    RationalVector cost(n + 2);
    cost[n] = Rational(-1); // maximize t
    LPResult r = lp_solve_eq(M, rhs, cost);
    InteriorPointResult out;
    if (r.status != LPStatus::Optimal) return out; // infeasible (never unbounded: t <= 1)
    out.feasible = true;
    out.t = r.x[n];
    out.strictly = out.t.sign() > 0;
    out.x.assign(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) out.x[j] = r.x[j] + out.t;
    return out;
}

// Does {A u = 0, u >= 0} contain a nonzero ray?  Decided by
// max 1^T u subject to A u = 0, 1^T u <= 1: positive optimum iff yes.
inline bool recession_cone_nontrivial(const RationalMatrix& A) {
    std::size_t d = A.rows(), n = A.cols();
    RationalMatrix M(d + 1, n + 1);
    RationalVector rhs(d + 1);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j) M.at(i, j) = A.at(i, j);
    for (std::size_t j = 0; j < n; ++j) M.at(d, j) = Rational(1);
    M.at(d, n) = Rational(1);
    rhs[d] = Rational(1);
    RationalVector cost(n + 1);
    for (std::size_t j = 0; j < n; ++j) cost[j] = Rational(-1);
    LPResult r = lp_solve_eq(M, rhs, cost);
    if (r.status != LPStatus::Optimal)
        throw InternalInconsistency("recession LP must be feasible and bounded");
    return r.objective.sign() < 0;
}

} // namespace centralcurve
