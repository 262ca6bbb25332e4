#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "matrix.hpp"

namespace centralcurve {

// The single input object of every pipeline: a linear program
//   minimize c^T x  subject to  A x = b, x >= 0
// together with the derived kernel data used by the dual formulation:
// B spans ker(A), and g is a fixed rational point with A g = b.
struct LPInstance {
    std::string name;
    RationalMatrix A{0, 0};
    RationalVector b;
    RationalVector c;
    RationalMatrix B{0, 0}; // (n-d) x n, rows span ker A
    RationalVector g;       // A g = b (minimum-norm rational solution)
    std::string notes;

    std::size_t n() const { return A.cols(); }
    std::size_t d() const { return A.rows(); }

    LPInstance() = default;

    LPInstance(RationalMatrix A_in, RationalVector b_in, RationalVector c_in,
               std::string name_in = "", std::string notes_in = "")
        : name(std::move(name_in)), notes(std::move(notes_in)) {
        if (A_in.rows() == 0 || A_in.cols() == 0 || A_in.is_zero()) throw ZeroMatrix();
        if (b_in.size() != A_in.rows()) throw MismatchedShape("b length vs rows of A");
        if (c_in.size() != A_in.cols()) throw MismatchedShape("c length vs cols of A");
        // reduce to a full-row-rank system; dependent rows must stay consistent
        auto piv_rows = row_basis_indices(A_in);
        if (piv_rows.size() < A_in.rows()) {
            RationalMatrix Ared = A_in.select_rows(piv_rows);
            RationalVector bred;
            for (auto i : piv_rows) bred.push_back(b_in[i]);
            // every dropped row is a combination of kept rows; the same
            // combination must reproduce its right-hand side
            RationalMatrix At = Ared.transpose(); // n x d'
            for (std::size_t i = 0; i < A_in.rows(); ++i) {
                bool kept = false;
                for (auto k : piv_rows) kept |= (k == i);
                if (kept) continue;
                RationalVector row(A_in.cols());
                for (std::size_t j = 0; j < A_in.cols(); ++j) row[j] = A_in.at(i, j);
                auto comb = solve_linear(At, row); // coefficients over kept rows
                if (!comb) throw RankDeficient("dependent row not in kept row space");
                Rational rhs(0);
                for (std::size_t k = 0; k < piv_rows.size(); ++k) rhs += (*comb)[k] * bred[k];
                if (!(rhs == b_in[i]))
                    throw RankDeficient("inconsistent right-hand side on a dependent row");
            }
            A = std::move(Ared);
            b = std::move(bred);
        } else {
            A = std::move(A_in);
            b = std::move(b_in);
        }
        c = std::move(c_in);
        B = kernel_basis(A);
        g = solve_min_norm(A, b);
    }

    // The dual program min b^T y over A^T y >= c becomes, in the slack
    // coordinates s = A^T y - c, the program over {B s = -B c, s >= 0} with
    // objective b^T y = g^T s + const. Our traces maximize their objective on
    // the positive branch, so the swapped instance carries cost -g: its
    // positive-lambda path is the true dual central path.
    LPInstance dual_swap() const {
        RationalVector Bc = B.mul_vec(c);
        for (auto& v : Bc) v = -v;
        RationalVector mg = g;
        for (auto& v : mg) v = -v;
        return LPInstance(B, Bc, mg, name.empty() ? "" : name + "-dual");
    }
};

namespace detail {

inline RationalVector parse_rational_array(const nlohmann::json& j, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + " must be an array of rational strings");
    RationalVector out;
    for (const auto& e : j) {
        if (!e.is_string())
            throw ParseError(what + " entries must be rational strings (no numbers)");
        out.push_back(Rational::parse(e.get<std::string>()));
    }
    return out;
}

} // namespace detail

inline LPInstance instance_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("instance document must be a JSON object");
    for (const char* key : {"A", "b", "c"})
        if (!j.contains(key)) throw ParseError(std::string("missing field: ") + key);
    if (!j["A"].is_array() || j["A"].empty())
        throw ParseError("A must be a nonempty array of rows");
    std::size_t d = j["A"].size();
    RationalVector first_row = detail::parse_rational_array(j["A"][0], "A row");
    std::size_t n = first_row.size();
    RationalMatrix A(d, n);
    for (std::size_t i = 0; i < d; ++i) {
        RationalVector row = detail::parse_rational_array(j["A"][i], "A row");
        if (row.size() != n) throw ParseError("ragged rows in A");
        for (std::size_t jj = 0; jj < n; ++jj) A.at(i, jj) = row[jj];
    }
    RationalVector b = detail::parse_rational_array(j["b"], "b");
    RationalVector c = detail::parse_rational_array(j["c"], "c");
    std::string name = j.value("name", std::string());
    std::string notes = j.value("notes", std::string());
    return LPInstance(std::move(A), std::move(b), std::move(c), std::move(name),
                      std::move(notes));
}

inline nlohmann::json instance_to_json(const LPInstance& ins) {
    nlohmann::json j;
    if (!ins.name.empty()) j["name"] = ins.name;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < ins.A.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < ins.A.cols(); ++k) row.push_back(ins.A.at(i, k).str());
        rows.push_back(row);
    }
    j["A"] = rows;
    nlohmann::json bj = nlohmann::json::array(), cj = nlohmann::json::array();
    for (const auto& v : ins.b) bj.push_back(v.str());
    for (const auto& v : ins.c) cj.push_back(v.str());
    j["b"] = bj;
    j["c"] = cj;
    if (!ins.notes.empty()) j["notes"] = ins.notes;
    return j;
}

inline LPInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 1,
                         static_cast<int>(e.byte));
    }
    return instance_from_json(j);
}

inline void save_instance(const LPInstance& ins, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    out << instance_to_json(ins).dump(2) << "\n";
}

} // namespace centralcurve
