#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace centralcurve {

// Column matroid of a rational matrix; bases stored as bitsets over {0..n-1}.
struct Matroid {
    int ground_size = 0;
    int rank = 0;
    std::vector<std::uint32_t> bases; // sorted ascending as integers

    bool is_basis(std::uint32_t mask) const {
        return std::binary_search(bases.begin(), bases.end(), mask);
    }
    // a set is independent iff some basis contains it
    bool is_independent(std::uint32_t mask) const {
        for (std::uint32_t b : bases)
            if ((mask & ~b) == 0) return true;
        return false;
    }
    bool is_uniform() const {
        // U_{r,n} has C(n,r) bases
        unsigned long long c = 1;
        for (int i = 0; i < rank; ++i) c = c * static_cast<unsigned long long>(ground_size - i) / (i + 1);
        return bases.size() == c;
    }
};

// --- subset iteration helpers -------------------------------------------------

// Gosper's hack: next integer with the same popcount.
inline std::uint32_t next_same_popcount(std::uint32_t v) {
    std::uint32_t c = v & -v, r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

template <typename Fn>
inline void for_each_subset_of_size(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    if (k == 0) { fn(0u); return; }
    std::uint32_t v = (1u << k) - 1, limit = 1u << n;
    while (v < limit) {
        fn(v);
        if (v == 0) break;
        std::uint32_t nx = next_same_popcount(v);
        if (nx <= v) break;
        v = nx;
    }
}

inline std::vector<std::size_t> mask_to_indices(std::uint32_t mask) {
    std::vector<std::size_t> idx;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1u) idx.push_back(static_cast<std::size_t>(i));
    return idx;
}

// --- construction -------------------------------------------------------------

inline Matroid matroid_from_matrix(const RationalMatrix& M0) {
    if (M0.rows() == 0 || M0.cols() == 0 || M0.is_zero()) throw ZeroMatrix();
    if (M0.cols() > 31) throw LimitExceeded("ground set larger than 31");
    // reduce to a full-row-rank row basis so r x r minors decide bases
    RationalMatrix M = M0.select_rows(row_basis_indices(M0));
    int n = static_cast<int>(M.cols());
    int r = static_cast<int>(M.rows());
    std::vector<std::size_t> all_rows(r);
    for (int i = 0; i < r; ++i) all_rows[i] = i;
    Matroid m;
    m.ground_size = n;
    m.rank = r;
    for_each_subset_of_size(n, r, [&](std::uint32_t mask) {
        std::vector<std::size_t> cols = mask_to_indices(mask);
        if (!submatrix_det(M, all_rows, cols).is_zero()) m.bases.push_back(mask);
    });
    return m;
}

// All minimal dependent sets, each as a sorted index list; list sorted
// lexicographically.
inline std::vector<std::vector<std::size_t>> circuits(const Matroid& m) {
    std::vector<std::uint32_t> found;
    for (int k = 1; k <= m.rank + 1; ++k) {
        for_each_subset_of_size(m.ground_size, k, [&](std::uint32_t mask) {
            for (std::uint32_t c : found)
                if ((c & ~mask) == 0) return; // contains a smaller circuit
            if (!m.is_independent(mask)) found.push_back(mask);
        });
    }
    std::vector<std::vector<std::size_t>> out;
    out.reserve(found.size());
    for (std::uint32_t c : found) out.push_back(mask_to_indices(c));
    std::sort(out.begin(), out.end());
    return out;
}

inline Matroid dual(const Matroid& m) {
    Matroid d;
    d.ground_size = m.ground_size;
    d.rank = m.ground_size - m.rank;
    std::uint32_t full = (m.ground_size == 31) ? 0x7fffffffu : ((1u << m.ground_size) - 1);
    d.bases.reserve(m.bases.size());
    for (std::uint32_t b : m.bases) d.bases.push_back(full & ~b);
    std::sort(d.bases.begin(), d.bases.end());
    return d;
}

// --- broken circuit complex ---------------------------------------------------

// f-vector (f_{-1}, f_0, ..., f_{r-1}) of the complex of subsets containing no
// broken circuit, under the fixed ground order 0 < 1 < ... < n-1.
inline std::vector<long long> broken_circuit_fvector(const Matroid& m) {
    std::vector<std::uint32_t> broken;
    for (const auto& c : circuits(m)) {
        std::uint32_t mask = 0;
        for (std::size_t i : c) mask |= 1u << i;
        mask &= ~(1u << c.front()); // remove the minimum element
        if (mask) broken.push_back(mask);
        else return {0}; // a loop: the empty broken circuit voids the complex
    }
    std::vector<long long> f(static_cast<std::size_t>(m.rank) + 1, 0);
    f[0] = 1; // the empty face
    // depth-first over elements; prune when adding e completes a broken circuit
    std::vector<std::pair<int, std::uint32_t>> stack; // (next element, current set)
    stack.emplace_back(0, 0u);
    while (!stack.empty()) {
        auto [start, cur] = stack.back();
        stack.pop_back();
        int size = __builtin_popcount(cur);
        if (size >= m.rank) continue;
        for (int e = start; e < m.ground_size; ++e) {
            std::uint32_t next = cur | (1u << e);
            bool bad = false;
            for (std::uint32_t bc : broken)
                if ((bc & ~next) == 0) { bad = true; break; }
            if (bad) continue;
            f[static_cast<std::size_t>(size) + 1] += 1;
            stack.emplace_back(e + 1, next);
        }
    }
    return f;
}

// --- Tutte polynomial ---------------------------------------------------------

// Dense bivariate polynomial with integer coefficients; coeff[i][j] is the
// coefficient of x^i y^j.
struct BivariatePoly {
    std::vector<std::vector<long long>> coeff;

    static BivariatePoly zero(std::size_t dx, std::size_t dy) {
        BivariatePoly p;
        p.coeff.assign(dx + 1, std::vector<long long>(dy + 1, 0));
        return p;
    }
    long long at(std::size_t i, std::size_t j) const {
        if (i >= coeff.size() || j >= coeff[i].size()) return 0;
        return coeff[i][j];
    }
    void add_in(const BivariatePoly& o, std::size_t shift_x, std::size_t shift_y) {
        for (std::size_t i = 0; i < o.coeff.size(); ++i)
            for (std::size_t j = 0; j < o.coeff[i].size(); ++j) {
                if (o.coeff[i][j] == 0) continue;
                std::size_t ti = i + shift_x, tj = j + shift_y;
                if (ti >= coeff.size()) coeff.resize(ti + 1);
                if (tj >= coeff[ti].size()) coeff[ti].resize(tj + 1, 0);
                coeff[ti][tj] += o.coeff[i][j];
            }
    }
    long long evaluate_int(long long x, long long y) const {
        long long acc = 0;
        for (std::size_t i = 0; i < coeff.size(); ++i)
            for (std::size_t j = 0; j < coeff[i].size(); ++j) {
                if (coeff[i][j] == 0) continue;
                long long t = coeff[i][j];
                for (std::size_t k = 0; k < i; ++k) t *= x;
                for (std::size_t k = 0; k < j; ++k) t *= y;
                acc += t;
            }
        return acc;
    }
    std::string str(const std::string& xv = "x", const std::string& yv = "y") const;
};

namespace detail {

struct MinorKey {
    std::uint32_t alive;
    std::vector<std::uint32_t> bases;
    bool operator<(const MinorKey& o) const {
        if (alive != o.alive) return alive < o.alive;
        return bases < o.bases;
    }
};

inline BivariatePoly tutte_rec(std::uint32_t alive, std::vector<std::uint32_t> bases,
                               std::map<MinorKey, BivariatePoly>& memo) {
    if (alive == 0) {
        BivariatePoly one = BivariatePoly::zero(0, 0);
        one.coeff[0][0] = 1;
        return one;
    }
    MinorKey key{alive, bases};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    std::uint32_t e = alive & -alive; // lowest alive element
    bool in_some = false, in_all = true;
    for (std::uint32_t b : bases) {
        if (b & e) in_some = true;
        else in_all = false;
    }
    BivariatePoly result;
    if (!in_some) {
        // loop: multiply by y, delete
        std::vector<std::uint32_t> del = bases; // bases unchanged
        BivariatePoly sub = tutte_rec(alive & ~e, std::move(del), memo);
        result = BivariatePoly::zero(0, 0);
        result.coeff.assign(1, {});
        result.add_in(sub, 0, 1);
    } else if (in_all) {
        // coloop: multiply by x, contract
        std::vector<std::uint32_t> con;
        con.reserve(bases.size());
        for (std::uint32_t b : bases) con.push_back(b & ~e);
        std::sort(con.begin(), con.end());
        BivariatePoly sub = tutte_rec(alive & ~e, std::move(con), memo);
        result = BivariatePoly::zero(0, 0);
        result.coeff.assign(1, {});
        result.add_in(sub, 1, 0);
    } else {
        std::vector<std::uint32_t> del, con;
        for (std::uint32_t b : bases) {
            if (b & e) con.push_back(b & ~e);
            else del.push_back(b);
        }
        std::sort(con.begin(), con.end());
        con.erase(std::unique(con.begin(), con.end()), con.end());
        BivariatePoly a = tutte_rec(alive & ~e, std::move(del), memo);
        BivariatePoly b = tutte_rec(alive & ~e, std::move(con), memo);
        result = a;
        result.add_in(b, 0, 0);
    }
    memo.emplace(std::move(key), result);
    return result;
}

} // namespace detail

inline BivariatePoly tutte_polynomial(const Matroid& m) {
    std::uint32_t alive = (m.ground_size == 31) ? 0x7fffffffu : ((1u << m.ground_size) - 1);
    std::map<detail::MinorKey, BivariatePoly> memo;
    return detail::tutte_rec(alive, m.bases, memo);
}

// --- h-vector and Möbius number ----------------------------------------------

inline long long binomial_ll(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// h-vector (h_0..h_{r-1}) from the broken circuit f-vector, cross-checked
// against the Tutte evaluation z^r T(1/z, 0).
inline std::vector<long long> h_vector(const Matroid& m) {
    int r = m.rank;
    std::uint32_t covered = 0;
    for (std::uint32_t b : m.bases) covered |= b;
    std::uint32_t full = (m.ground_size == 31) ? 0x7fffffffu : ((1u << m.ground_size) - 1);
    if (covered != full) // a loop: every h entry vanishes (and T(x,0) = 0)
        return std::vector<long long>(static_cast<std::size_t>(r), 0);
    std::vector<long long> f = broken_circuit_fvector(m);
    std::vector<long long> h(static_cast<std::size_t>(r), 0);
    // sum_i f_{i-1} z^i (1-z)^{r-i} = sum_k h_k z^k
    for (int i = 0; i <= r; ++i) {
        long long fi = (i < static_cast<int>(f.size())) ? f[i] : 0;
        if (fi == 0) continue;
        for (int j = 0; j + i <= r; ++j) {
            long long term = fi * binomial_ll(r - i, j) * ((j % 2) ? -1 : 1);
            int k = i + j;
            if (k < r) h[static_cast<std::size_t>(k)] += term;
            else if (term != 0 && k == r) {
                // top coefficient must vanish for matroids with no coloop-free
                // top face mismatch; accumulate and check below
                h.resize(static_cast<std::size_t>(r) + 1, 0);
                h[static_cast<std::size_t>(r)] += term;
            }
        }
    }
    if (h.size() > static_cast<std::size_t>(r)) {
        if (h[static_cast<std::size_t>(r)] != 0)
            throw InternalInconsistency("h-vector has a nonzero term beyond degree r-1");
        h.resize(static_cast<std::size_t>(r));
    }
    // independent route: z^r T(1/z, 0) has coefficient of z^k equal to the
    // coefficient of x^{r-k} in T(x, 0)
    BivariatePoly t = tutte_polynomial(m);
    for (int k = 0; k < r; ++k) {
        long long via_tutte = t.at(static_cast<std::size_t>(r - k), 0);
        if (via_tutte != h[static_cast<std::size_t>(k)])
            throw InternalInconsistency("h-vector: broken-circuit and Tutte computations disagree at index " +
                                        std::to_string(k));
    }
    if (r > 0 && t.at(0, 0) != 0)
        throw InternalInconsistency("T(x,0) has a constant term for a positive-rank matroid");
    return h;
}

inline long long mobius_number(const Matroid& m) {
    std::vector<long long> h = h_vector(m);
    long long s = 0;
    for (long long v : h) s += v;
    return s;
}

inline std::string BivariatePoly::str(const std::string& xv, const std::string& yv) const {
    std::string out;
    for (std::size_t i = coeff.size(); i-- > 0;) {
        for (std::size_t j = (i < coeff.size() ? coeff[i].size() : 0); j-- > 0;) {
            long long c = coeff[i][j];
            if (c == 0) continue;
            std::string term;
            long long a = c < 0 ? -c : c;
            if (a != 1 || (i == 0 && j == 0)) term += std::to_string(a);
            if (i > 0) {
                if (!term.empty()) term += "*";
                term += xv;
                if (i > 1) term += "^" + std::to_string(i);
            }
            if (j > 0) {
                if (!term.empty()) term += "*";
                term += yv;
                if (j > 1) term += "^" + std::to_string(j);
            }
            if (out.empty()) out = (c < 0 ? "-" : "") + term;
            else out += (c < 0 ? " - " : " + ") + term;
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace centralcurve
