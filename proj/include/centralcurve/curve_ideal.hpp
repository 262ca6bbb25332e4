#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "instance.hpp"
#include "matrix.hpp"
#include "matroid.hpp"
#include "polynomial.hpp"
#include "sturm.hpp"

namespace centralcurve {

enum class Side { Primal, Dual };

inline std::vector<std::string> make_var_names(const std::string& prefix, std::size_t n) {
    std::vector<std::string> v;
    v.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) v.push_back(prefix + std::to_string(i));
    return v;
}

// Stack the rows of M with w as one extra bottom row.
inline RationalMatrix stack_row(const RationalMatrix& M, const RationalVector& w) {
    if (w.size() != M.cols()) throw MismatchedShape("stacked row length");
    RationalMatrix S(M.rows() + 1, M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) S.at(i, j) = M.at(i, j);
    for (std::size_t j = 0; j < M.cols(); ++j) S.at(M.rows(), j) = w[j];
    return S;
}

// The unique-up-to-scale dependence vector supported on a circuit, normalized
// to integer coprime entries with the first nonzero entry positive.
inline RationalVector circuit_vector(const RationalMatrix& L, const std::vector<std::size_t>& C) {
    RationalMatrix sub = L.select_columns(C);
    RationalMatrix K = kernel_basis(sub);
    if (K.rows() != 1) throw NotACircuit("kernel dimension is " + std::to_string(K.rows()));
    RationalVector v(C.size());
    for (std::size_t j = 0; j < C.size(); ++j) {
        v[j] = K.at(0, j);
        if (v[j].is_zero()) throw NotACircuit("dependence vector not fully supported");
    }
    // clear denominators, divide by content, fix the leading sign
    mpz_class den_lcm = 1;
    for (const auto& q : v) {
        mpz_class d = q.den(), g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    mpz_class num_gcd = 0;
    for (const auto& q : v) {
        mpz_class z = q.num() * (den_lcm / q.den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), z.get_mpz_t());
    }
    Rational scale(mpq_class(den_lcm) / mpq_class(num_gcd));
    if ((v[0] * scale).sign() < 0) scale = -scale;
    for (auto& q : v) q = q * scale;
    return v;
}

// The form sum_{i in C} v_i * prod_{j in C\{i}} x_j attached to a circuit of
// the row-space matroid of L; these generate the reciprocal variety's ideal.
inline SparsePolynomial circuit_polynomial(const RationalMatrix& L,
                                           const std::vector<std::size_t>& C,
                                           const std::string& var_prefix = "x") {
    std::size_t n = L.cols();
    for (auto i : C)
        if (i >= n) throw MismatchedShape("circuit index out of range");
    RationalVector v = circuit_vector(L, C);
    auto vars = make_var_names(var_prefix, n);
    SparsePolynomial f(vars);
    for (std::size_t i = 0; i < C.size(); ++i) {
        Exponents e(n, 0);
        for (std::size_t j = 0; j < C.size(); ++j)
            if (j != i) e[C[j]] = 1;
        f.add_term(e, v[i]);
    }
    return f;
}

// Independent construction of the same generator via the determinantal route:
// numerator of the (k+1)x(k+1) minor of (L-rows-restricted; x^{-1}) pattern,
// realized as sum over i of cofactor_i * prod_{j != i} x_j on the circuit.
inline SparsePolynomial circuit_polynomial_determinantal(const RationalMatrix& L,
                                                         const std::vector<std::size_t>& C,
                                                         const std::string& var_prefix = "x") {
    // rank of the circuit's columns is |C|-1; choose that many independent rows
    RationalMatrix sub = L.select_columns(C);
    auto rows = row_basis_indices(sub);
    if (rows.size() + 1 != C.size()) throw NotACircuit("column set rank is not |C|-1");
    RationalMatrix R = sub.select_rows(rows); // (|C|-1) x |C|
    std::size_t n = L.cols(), k = C.size();
    auto vars = make_var_names(var_prefix, n);
    SparsePolynomial f(vars);
    std::vector<std::size_t> all_rows(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) all_rows[i] = i;
    for (std::size_t i = 0; i < k; ++i) {
        // cofactor: delete column i, determinant with alternating sign
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < k; ++j)
            if (j != i) cols.push_back(j);
        Rational det = submatrix_det(R, all_rows, cols);
        if ((k - 1 - i) % 2 == 1) det = -det; // Laplace sign along the virtual last row
        if (det.is_zero()) continue;
        Exponents e(n, 0);
        for (std::size_t j = 0; j < k; ++j)
            if (j != i) e[C[j]] = 1;
        f.add_term(e, det);
    }
    return f.primitive_normalized();
}

// Generators of the central curve's ideal: circuit polynomials of the matroid
// of (A; c) plus the linear forms A x - b (primal); circuits of (B; g) plus
// the forms of B s + B c = 0 in the slack coordinates (dual).
inline std::vector<SparsePolynomial> curve_ideal_generators(const LPInstance& ins, Side side) {
    const bool primal = side == Side::Primal;
    const RationalMatrix& M0 = primal ? ins.A : ins.B;
    const RationalVector& w = primal ? ins.c : ins.g;
    RationalMatrix S = stack_row(M0, w);
    if (rank(S) == rank(M0)) throw DegenerateCost();
    std::string prefix = primal ? "x" : "s";
    std::size_t n = ins.n();
    auto vars = make_var_names(prefix, n);
    std::vector<SparsePolynomial> gens;
    Matroid m = matroid_from_matrix(S);
    for (const auto& C : circuits(m)) gens.push_back(circuit_polynomial(S, C, prefix));
    if (primal) {
        for (std::size_t i = 0; i < ins.A.rows(); ++i) {
            SparsePolynomial lin(vars);
            for (std::size_t j = 0; j < n; ++j) {
                if (ins.A.at(i, j).is_zero()) continue;
                Exponents e(n, 0);
                e[j] = 1;
                lin.add_term(e, ins.A.at(i, j));
            }
            lin.add_term(Exponents(n, 0), -ins.b[i]);
            gens.push_back(lin);
        }
    } else {
        RationalVector Bc = ins.B.mul_vec(ins.c);
        for (std::size_t i = 0; i < ins.B.rows(); ++i) {
            SparsePolynomial lin(vars);
            for (std::size_t j = 0; j < n; ++j) {
                if (ins.B.at(i, j).is_zero()) continue;
                Exponents e(n, 0);
                e[j] = 1;
                lin.add_term(e, ins.B.at(i, j));
            }
            lin.add_term(Exponents(n, 0), Bc[i]);
            gens.push_back(lin);
        }
    }
    return gens;
}

// Dual circuit generators rewritten in the y-coordinates of the companion
// program via s_j = (A^T y)_j - c_j; the linear forms become identically zero
// and are omitted.
inline std::vector<SparsePolynomial> dual_generators_in_y(const LPInstance& ins) {
    RationalMatrix S = stack_row(ins.B, ins.g);
    if (rank(S) == rank(ins.B)) throw DegenerateCost();
    std::size_t n = ins.n(), d = ins.d();
    auto svars = make_var_names("s", n);
    auto yvars = make_var_names("y", d);
    std::map<std::string, SparsePolynomial> subs;
    for (std::size_t j = 0; j < n; ++j) {
        SparsePolynomial a(yvars);
        for (std::size_t k = 0; k < d; ++k) {
            if (ins.A.at(k, j).is_zero()) continue;
            Exponents e(d, 0);
            e[k] = 1;
            a.add_term(e, ins.A.at(k, j));
        }
        a.add_term(Exponents(d, 0), -ins.c[j]);
        subs.emplace(svars[j], std::move(a));
    }
    std::vector<SparsePolynomial> out;
    Matroid m = matroid_from_matrix(S);
    for (const auto& C : circuits(m)) {
        SparsePolynomial f = circuit_polynomial(S, C, "s").substitute(subs);
        if (!f.is_zero()) out.push_back(std::move(f));
    }
    return out;
}

// For d = 2 programs: the single polynomial vanishing on the dual central
// curve in the (y1, y2) plane,
//   C(y) = sum_{i in I} w_i * prod_{j in I\{i}} (a_{1j} y1 + a_{2j} y2 - c_j),
// with w_i = b1 a_{2i} - b2 a_{1i} and I its nonvanishing support. Returned
// unnormalized so that the directional-derivative identity is coefficient-exact.
inline SparsePolynomial planar_curve_poly(const RationalMatrix& A, const RationalVector& b,
                                          const RationalVector& c) {
    if (A.rows() != 2) throw MismatchedShape("planar form needs exactly 2 rows");
    if (b.size() != 2 || c.size() != A.cols()) throw MismatchedShape("planar b/c lengths");
    if (rank(A) != 2) throw RankDeficient("planar form needs rank 2");
    std::size_t n = A.cols();
    std::vector<std::string> yvars = {"y1", "y2"};
    std::vector<Rational> w(n);
    std::vector<std::size_t> I;
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = b[0] * A.at(1, i) - b[1] * A.at(0, i);
        if (!w[i].is_zero()) I.push_back(i);
    }
    SparsePolynomial sum(yvars);
    for (auto i : I) {
        SparsePolynomial term = SparsePolynomial::constant(yvars, w[i]);
        for (auto j : I) {
            if (j == i) continue;
            SparsePolynomial ell(yvars);
            ell.add_term({1, 0}, A.at(0, j));
            ell.add_term({0, 1}, A.at(1, j));
            ell.add_term({0, 0}, -c[j]);
            term = term * ell;
        }
        sum = sum + term;
    }
    return sum;
}

// Directional derivative d/dt f(y + t e) at t = 0.
inline SparsePolynomial renegar_derivative(const SparsePolynomial& f, const RationalVector& e) {
    if (e.size() != f.variables().size())
        throw MismatchedShape("direction length vs variable count");
    SparsePolynomial out(f.variables());
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k].is_zero()) continue;
        out = out + e[k] * f.derivative(k);
    }
    return out;
}

// Substitute affine forms for a subset of variables and expand.
inline SparsePolynomial eliminate_linear(const SparsePolynomial& f,
                                         const std::map<std::string, SparsePolynomial>& subs) {
    return f.substitute(subs);
}

struct LineRestrictionCount {
    std::size_t total_degree_roots = 0;  // degree of the restricted univariate
    std::size_t real_roots = 0;          // distinct real roots (Sturm)
    std::size_t real_with_multiplicity = 0;
    std::size_t degree_drop = 0;         // intersection multiplicity at the second point
};

// Restrict a form to the line t -> P + t Q through two distinct projective
// points and count its real roots exactly. The parametrization misses Q; the
// drop from deg f to the restricted degree is the intersection multiplicity
// there (a real point, hence real intersections).
inline LineRestrictionCount line_restriction_real_roots(const SparsePolynomial& f,
                                                        const RationalVector& P,
                                                        const RationalVector& Q) {
    std::size_t m = f.variables().size();
    if (P.size() != m || Q.size() != m) throw MismatchedShape("line point length");
    // proportional (same projective point)?
    {
        bool prop = true;
        // find a pivot in Q
        std::size_t piv = m;
        for (std::size_t i = 0; i < m; ++i)
            if (!Q[i].is_zero()) { piv = i; break; }
        if (piv == m) throw IdenticalPoints(); // Q = 0 is not a projective point
        for (std::size_t i = 0; i < m && prop; ++i)
            if (!(P[i] * Q[piv] == P[piv] * Q[i])) prop = false;
        if (prop) throw IdenticalPoints();
    }
    // expand f(P + tQ) as a univariate in t: substitute each variable y_i by
    // the degree-1 polynomial P_i + Q_i t over a single helper variable
    int D = f.total_degree();
    UniPoly g(static_cast<std::size_t>(D) + 1, Rational(0));
    // iterate terms; each monomial prod (P_i + Q_i t)^{e_i}
    for (const auto& [e, coef] : f.terms()) {
        UniPoly term = {Rational(1)};
        for (std::size_t i = 0; i < m; ++i) {
            for (int k = 0; k < e[i]; ++k) {
                UniPoly lin = {P[i], Q[i]};
                term = uni_mul(term, lin);
            }
        }
        for (std::size_t k = 0; k < term.size(); ++k) g[k] += coef * term[k];
    }
    uni_trim(g);
    if (uni_is_zero(g)) throw ZeroRestriction();
    LineRestrictionCount out;
    out.total_degree_roots = static_cast<std::size_t>(uni_degree(g));
    out.real_roots = static_cast<std::size_t>(count_distinct_real_roots(g));
    out.real_with_multiplicity = static_cast<std::size_t>(count_real_roots_with_multiplicity(g));
    out.degree_drop = static_cast<std::size_t>(D) - out.total_degree_roots;
    return out;
}

} // namespace centralcurve
