#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "instance.hpp"
#include "matroid.hpp"

namespace centralcurve {

// Combinatorial summary attached to one side of an instance: broken-circuit
// data of the stacked matrix (matrix rows plus the cost row), the derived
// degree / genus / Gauss-degree numbers, the region-count Mobius number of the
// matrix alone, and the average-turning bound as an exact multiple of pi.
struct SideInvariants {
    bool present = true;            // false when the side has no matrix (n == d dual)
    bool cost_degenerate = false;   // cost row dependent on the matrix rows
    std::vector<long long> f_vector; // f_{-1} .. f_{r-1} of the stacked matroid
    std::vector<long long> h_vector; // h_0 .. h_{r-1}
    long long degree = 0;            // sum of h_i
    long long genus = 0;             // 1 - sum (1-i) h_i
    long long gauss_bound = 0;       // 2 sum i h_i
    long long region_mobius = 0;     // |mu| of the matrix matroid = bounded regions
    Rational avg_turning_bound_pi;   // average turning <= this * pi
    bool uniform = false;            // stacked matroid uniform?
    long long generic_degree = 0;    // closed-form ceiling for generic data
    long long generic_gauss = 0;
};

struct InvariantReport {
    std::string name;
    std::size_t n = 0, d = 0;
    SideInvariants primal, dual;
    std::string tutte;     // Tutte polynomial of the primal stacked matroid
    long long mobius = 0;  // = primal.degree = sum h_i of the primal stack
    std::string warning;
};

namespace detail {

// dim = number of matrix rows after basis reduction (d for the primal side,
// n - d for the dual side); the stacked matroid has rank dim + 1 unless the
// cost row is degenerate.
inline SideInvariants side_invariants(const RationalMatrix& M, const RationalVector& cost,
                                      std::size_t ambient_dim) {
    SideInvariants out;
    std::size_t n = M.cols();
    RationalMatrix stacked(M.rows() + 1, n);
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) stacked.at(i, j) = M.at(i, j);
    for (std::size_t j = 0; j < n; ++j) stacked.at(M.rows(), j) = cost[j];

    Matroid base = matroid_from_matrix(M);
    Matroid stack = matroid_from_matrix(stacked);
    out.cost_degenerate = (stack.rank == base.rank);

    out.f_vector = broken_circuit_fvector(stack);
    out.h_vector = h_vector(stack);
    for (std::size_t i = 0; i < out.h_vector.size(); ++i) {
        out.degree += out.h_vector[i];
        out.genus -= (1 - static_cast<long long>(i)) * out.h_vector[i];
        out.gauss_bound += 2 * static_cast<long long>(i) * out.h_vector[i];
    }
    out.genus += 1;
    out.region_mobius = mobius_number(base);
    if (out.region_mobius > 0)
        out.avg_turning_bound_pi =
            Rational(static_cast<long>(out.gauss_bound)) / Rational(static_cast<long>(out.region_mobius));
    out.uniform = stack.is_uniform();

    // ceilings attained exactly when the stacked matroid is uniform
    long long nn = static_cast<long long>(n), dd = static_cast<long long>(ambient_dim);
    out.generic_degree = binomial_ll(nn - 1, dd);
    out.generic_gauss = std::max(0ll, 2 * (nn - dd - 1)) * binomial_ll(nn - 1, dd - 1);
    return out;
}

} // namespace detail

inline InvariantReport invariant_report(const LPInstance& ins) {
    InvariantReport rep;
    rep.name = ins.name;
    rep.n = ins.n();
    rep.d = ins.d();
    rep.primal = detail::side_invariants(ins.A, ins.c, ins.d());
    if (rep.primal.cost_degenerate)
        rep.warning = "cost lies in the row space of A; the primal stacked matroid has rank " +
                      std::to_string(ins.d()) + " instead of " + std::to_string(ins.d() + 1);
    if (ins.B.rows() > 0) {
        rep.dual = detail::side_invariants(ins.B, ins.g, ins.n() - ins.d());
        if (rep.dual.cost_degenerate) {
            if (!rep.warning.empty()) rep.warning += "; ";
            rep.warning += "right-hand side gives a degenerate dual cost row";
        }
    } else {
        rep.dual.present = false;
    }

    RationalMatrix stacked(ins.A.rows() + 1, ins.n());
    for (std::size_t i = 0; i < ins.A.rows(); ++i)
        for (std::size_t j = 0; j < ins.n(); ++j) stacked.at(i, j) = ins.A.at(i, j);
    for (std::size_t j = 0; j < ins.n(); ++j) stacked.at(ins.A.rows(), j) = ins.c[j];
    rep.tutte = tutte_polynomial(matroid_from_matrix(stacked)).str();
    rep.mobius = rep.primal.degree;
    return rep;
}

inline nlohmann::json pi_multiple_json(const Rational& coeff) {
    return nlohmann::json{{"coeff", coeff.str()}, {"unit", "pi"}};
}

namespace detail {

inline nlohmann::json side_to_json(const SideInvariants& s) {
    nlohmann::json j;
    j["present"] = s.present;
    if (!s.present) return j;
    j["cost_degenerate"] = s.cost_degenerate;
    j["f_vector"] = s.f_vector;
    j["h_vector"] = s.h_vector;
    j["degree"] = s.degree;
    j["genus"] = s.genus;
    j["gauss_bound"] = s.gauss_bound;
    j["region_mobius"] = s.region_mobius;
    j["avg_turning_bound"] = pi_multiple_json(s.avg_turning_bound_pi);
    j["uniform"] = s.uniform;
    j["generic_degree"] = s.generic_degree;
    j["generic_gauss"] = s.generic_gauss;
    return j;
}

} // namespace detail

inline nlohmann::json invariant_report_to_json(const InvariantReport& rep) {
    nlohmann::json j;
    j["name"] = rep.name;
    j["n"] = rep.n;
    j["d"] = rep.d;
    j["primal"] = detail::side_to_json(rep.primal);
    j["dual"] = detail::side_to_json(rep.dual);
    j["tutte"] = rep.tutte;
    j["mobius"] = rep.mobius;
    if (!rep.warning.empty()) j["warning"] = rep.warning;
    return j;
}

} // namespace centralcurve
