#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "curve_ideal.hpp"
#include "errors.hpp"
#include "instance.hpp"
#include "linalg_d.hpp"
#include "lp.hpp"
#include "matroid.hpp"
#include "matrix.hpp"

namespace centralcurve {

// A full-dimensional cell of the arrangement {x_i = 0} inside {A x = b}.
struct Region {
    std::string sign_vector; // '+' / '-' per coordinate
    bool bounded = false;
    std::optional<DVec> analytic_center;
    double kkt_residual = 0.0; // relative certificate for the center
    std::vector<std::vector<std::size_t>> vertex_set; // incident bases (sorted indices)
    RationalVector interior; // an exact strictly sign-feasible point
};

inline RationalMatrix signed_matrix(const RationalMatrix& A, const std::string& sign) {
    RationalMatrix S = A;
    for (std::size_t j = 0; j < A.cols(); ++j)
        if (sign[j] == '-')
            for (std::size_t i = 0; i < A.rows(); ++i) S.at(i, j) = -S.at(i, j);
    return S;
}

// One rational point per basis of the column matroid: support on the basis,
// A restricted to the basis columns solved against b.
inline std::map<std::vector<std::size_t>, RationalVector> vertices(const LPInstance& ins) {
    Matroid m = matroid_from_matrix(ins.A);
    std::map<std::vector<std::size_t>, RationalVector> out;
    for (uint32_t mask : m.bases) {
        std::vector<std::size_t> S = mask_to_indices(mask);
        RationalMatrix AS = ins.A.select_columns(S);
        auto sol = solve_linear(AS, ins.b);
        if (!sol) throw InternalInconsistency("basis columns must be invertible");
        RationalVector x(ins.n(), Rational(0));
        for (std::size_t k = 0; k < S.size(); ++k) x[S[k]] = (*sol)[k];
        out.emplace(std::move(S), std::move(x));
    }
    return out;
}

namespace detail {

inline std::optional<Region> confirm_region(const LPInstance& ins, const std::string& sign) {
    RationalMatrix As = signed_matrix(ins.A, sign);
    InteriorPointResult ip = interior_point(As, ins.b);
    if (!ip.strictly) return std::nullopt;
    Region r;
    r.sign_vector = sign;
    r.bounded = !recession_cone_nontrivial(As);
    r.interior.assign(ins.n(), Rational(0));
    for (std::size_t j = 0; j < ins.n(); ++j)
        r.interior[j] = sign[j] == '-' ? -ip.x[j] : ip.x[j];
    return r;
}

} // namespace detail

// All nonempty open cells, sorted by sign vector. Exact feasibility and
// boundedness decisions throughout.
inline std::vector<Region> enumerate_regions(const LPInstance& ins, std::size_t limit_n = 16) {
    std::size_t n = ins.n();
    if (n > limit_n) throw LimitExceeded("n = " + std::to_string(n) + " regions");
    std::set<std::string> candidates;
    if (n <= 12) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
            std::string s(n, '+');
            for (std::size_t j = 0; j < n; ++j)
                if (mask >> j & 1) s[j] = '-';
            candidates.insert(std::move(s));
        }
    } else {
        // each vertex contributes the sign vectors of its adjacent orthants:
        // signs fixed on its nonzero support, free on its zero set
        for (const auto& [S, x] : vertices(ins)) {
            std::vector<std::size_t> zero;
            std::string base(n, '+');
            for (std::size_t j = 0; j < n; ++j) {
                int sg = x[j].sign();
                if (sg == 0) zero.push_back(j);
                else if (sg < 0) base[j] = '-';
            }
            if (zero.size() > 24) throw LimitExceeded("vertex orthant fan too large");
            for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << zero.size()); ++mask) {
                std::string s = base;
                for (std::size_t k = 0; k < zero.size(); ++k)
                    if (mask >> k & 1) s[zero[k]] = '-';
                candidates.insert(std::move(s));
            }
        }
    }
    std::vector<Region> out;
    for (const auto& s : candidates) {
        auto r = detail::confirm_region(ins, s);
        if (r) out.push_back(std::move(*r));
    }
    // attach incident vertices (closure membership)
    auto vtx = vertices(ins);
    for (auto& r : out) {
        for (const auto& [S, x] : vtx) {
            bool ok = true;
            for (std::size_t j = 0; j < n && ok; ++j) {
                int sg = x[j].sign();
                if (sg != 0 && (r.sign_vector[j] == '-' ? sg > 0 : sg < 0)) ok = false;
            }
            if (ok) r.vertex_set.push_back(S);
        }
    }
    return out;
}

// Damped Newton for the barrier maximizer of one region; works on the signed
// variables w = sigma * x, parametrized by the kernel: w = w0 + Bs^T z.
// Returns the center in the original coordinates plus the relative KKT
// residual  |B (1/x)| / |1/x|.
inline std::pair<DVec, double> analytic_center_for(const LPInstance& ins, const Region& region) {
    std::size_t n = ins.n(), k = ins.B.rows();
    // signed kernel basis and start point
    DMat Bs(k, DVec(n));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double v = ins.B.at(i, j).to_double();
            Bs[i][j] = region.sign_vector[j] == '-' ? -v : v;
        }
    DVec w0(n);
    for (std::size_t j = 0; j < n; ++j) {
        double v = region.interior[j].to_double();
        w0[j] = region.sign_vector[j] == '-' ? -v : v;
    }
    auto run = [&](DVec w, int max_iter) -> std::optional<std::pair<DVec, double>> {
        for (int iter = 0; iter < max_iter; ++iter) {
            DVec inv(n);
            for (std::size_t j = 0; j < n; ++j) inv[j] = 1.0 / w[j];
            DVec grad = mat_vec(Bs, inv); // gradient in z
            double rel = norm2(grad) / std::max(1.0, norm2(inv));
            if (rel <= 1e-13 || norm2(grad) <= 1e-12) {
                DVec x(n);
                for (std::size_t j = 0; j < n; ++j)
                    x[j] = region.sign_vector[j] == '-' ? -w[j] : w[j];
                return std::make_pair(std::move(x), rel);
            }
            // Newton system: (Bs W^-2 Bs^T) dz = grad  (ascent direction)
            DMat H(k, DVec(k, 0.0));
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b2 = a; b2 < k; ++b2) {
                    double s = 0;
                    for (std::size_t j = 0; j < n; ++j)
                        s += Bs[a][j] * Bs[b2][j] * inv[j] * inv[j];
                    H[a][b2] = H[b2][a] = s;
                }
            auto dz = solve_dense(H, grad);
            if (!dz) return std::nullopt;
            DVec dw = mat_t_vec(Bs, *dz);
            // damping: keep strictly positive with fraction-to-boundary 0.99
            double alpha = 1.0;
            for (std::size_t j = 0; j < n; ++j)
                if (dw[j] < 0) alpha = std::min(alpha, -0.99 * w[j] / dw[j]);
            // step; plain Newton near the center, damped further out
            if (alpha < 1.0) alpha *= 0.9;
            for (std::size_t j = 0; j < n; ++j) w[j] += alpha * dw[j];
        }
        return std::nullopt;
    };
    auto res = run(w0, 200);
    if (!res) res = run(w0, 2000); // retry from the exact interior start, more iterations
    if (!res) throw NewtonDivergence("analytic center for region " + region.sign_vector);
    return *res;
}

// Fill analytic centers for every bounded region.
inline std::vector<Region> analytic_centers(const LPInstance& ins, std::size_t limit_n = 16) {
    std::vector<Region> regions = enumerate_regions(ins, limit_n);
    for (auto& r : regions) {
        if (!r.bounded) continue;
        auto [x, rel] = analytic_center_for(ins, r);
        r.analytic_center = std::move(x);
        r.kkt_residual = rel;
    }
    return regions;
}

// Intersect with the level hyperplane {c^T x = c0}: one extra row.
inline LPInstance level_slice(const LPInstance& ins, const Rational& c0) {
    RationalMatrix S(ins.A.rows() + 1, ins.n());
    for (std::size_t i = 0; i < ins.A.rows(); ++i)
        for (std::size_t j = 0; j < ins.n(); ++j) S.at(i, j) = ins.A.at(i, j);
    for (std::size_t j = 0; j < ins.n(); ++j) S.at(ins.A.rows(), j) = ins.c[j];
    if (rank(S) == ins.A.rows()) throw DegenerateCost();
    RationalVector b2 = ins.b;
    b2.push_back(c0);
    return LPInstance(S, b2, ins.c, ins.name.empty() ? "" : ins.name + "-slice");
}

// A minimal-support vector of the row space of A (cocircuit) and one of the
// kernel of A (circuit) with disjoint supports, when such a pair exists.
struct DisjointSupportWitness {
    std::vector<std::size_t> cocircuit; // support in the row space of A
    std::vector<std::size_t> circuit;   // support in the kernel of A
    RationalVector row_space_vector;    // length n, support = cocircuit
    RationalVector kernel_vector;       // length n, support = circuit
};

inline std::optional<DisjointSupportWitness> disjoint_support_exists(const LPInstance& ins) {
    Matroid mA = matroid_from_matrix(ins.A);
    Matroid mB = matroid_from_matrix(ins.B);
    auto circs = circuits(mA);   // minimal supports in ker(A)
    auto cocircs = circuits(mB); // minimal supports in ker(B) = rowspace(A)
    for (const auto& D : cocircs) {
        std::vector<bool> inD(ins.n(), false);
        for (auto i : D) inD[i] = true;
        for (const auto& C : circs) {
            bool disjoint = true;
            for (auto i : C)
                if (inD[i]) { disjoint = false; break; }
            if (!disjoint) continue;
            DisjointSupportWitness w;
            w.cocircuit = D;
            w.circuit = C;
            RationalVector vB = circuit_vector(ins.B, D);
            RationalVector vA = circuit_vector(ins.A, C);
            w.row_space_vector.assign(ins.n(), Rational(0));
            w.kernel_vector.assign(ins.n(), Rational(0));
            for (std::size_t k = 0; k < D.size(); ++k) w.row_space_vector[D[k]] = vB[k];
            for (std::size_t k = 0; k < C.size(); ++k) w.kernel_vector[C[k]] = vA[k];
            return w;
        }
    }
    return std::nullopt;
}

} // namespace centralcurve
