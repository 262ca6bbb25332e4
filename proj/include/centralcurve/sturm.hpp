#pragma once

#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace centralcurve {

// Univariate polynomial as a coefficient vector, index = power of t.
using UniPoly = std::vector<Rational>;

inline void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}
inline int uni_degree(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }
inline bool uni_is_zero(const UniPoly& p) { return p.empty(); }

inline UniPoly uni_derivative(const UniPoly& p) {
    UniPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * p[i]);
    uni_trim(d);
    return d;
}

inline UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    uni_trim(r);
    return r;
}

inline UniPoly uni_scale(const Rational& s, UniPoly p) {
    for (auto& c : p) c *= s;
    uni_trim(p);
    return p;
}

// Divide by the positive content so coefficients are integers with gcd 1;
// the (positive) scaling preserves all signs, which Sturm counting needs.
inline UniPoly uni_primitive(const UniPoly& p0) {
    UniPoly p = p0;
    uni_trim(p);
    if (p.empty()) return p;
    mpz_class den_lcm = 1;
    for (const auto& c : p) {
        if (c.is_zero()) continue;
        mpz_class d = c.den(), g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    mpz_class num_gcd = 0;
    for (const auto& c : p) {
        if (c.is_zero()) continue;
        mpz_class z = c.num() * (den_lcm / c.den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), z.get_mpz_t());
    }
    Rational scale(mpq_class(den_lcm) / mpq_class(num_gcd));
    return uni_scale(scale, p);
}

// Remainder of a by b (exact rational division algorithm).
inline UniPoly uni_rem(UniPoly a, const UniPoly& b) {
    uni_trim(a);
    if (b.empty()) throw Error("polynomial division by zero");
    while (!a.empty() && a.size() >= b.size()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        uni_trim(a);
        if (!a.empty() && a.size() >= b.size() && (a.back() / b.back()).is_zero())
            throw InternalInconsistency("division made no progress");
    }
    return a;
}

// Exact quotient; throws if the division is not exact.
inline UniPoly uni_div_exact(UniPoly a, const UniPoly& b) {
    uni_trim(a);
    if (b.empty()) throw Error("polynomial division by zero");
    UniPoly q(a.size() > b.size() ? a.size() - b.size() + 1 : 1);
    while (!a.empty() && a.size() >= b.size()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        uni_trim(a);
    }
    if (!a.empty()) throw InternalInconsistency("inexact polynomial division");
    uni_trim(q);
    return q;
}

inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        UniPoly r = uni_primitive(uni_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    return uni_primitive(a);
}

inline Rational uni_eval(const UniPoly& p, const Rational& t) {
    Rational acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
    return acc;
}

// Sturm chain with primitive-part reduction at each step.
inline std::vector<UniPoly> sturm_chain(const UniPoly& p0) {
    std::vector<UniPoly> chain;
    UniPoly p = uni_primitive(p0);
    if (p.empty()) return chain;
    chain.push_back(p);
    UniPoly d = uni_derivative(p);
    if (d.empty()) return chain;
    chain.push_back(uni_primitive(d));
    while (true) {
        const UniPoly& a = chain[chain.size() - 2];
        const UniPoly& b = chain.back();
        UniPoly r = uni_rem(a, b);
        if (r.empty()) break;
        r = uni_primitive(r);
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

namespace detail {
// sign of p at +inf (dir=+1) or -inf (dir=-1)
inline int sign_at_infinity(const UniPoly& p, int dir) {
    if (p.empty()) return 0;
    int s = p.back().sign();
    if (dir < 0 && (uni_degree(p) % 2) == 1) s = -s;
    return s;
}
inline int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}
} // namespace detail

// Number of distinct real roots in the open interval (a, b); the whole line
// when no interval is given.
inline int count_distinct_real_roots(const UniPoly& p) {
    std::vector<UniPoly> chain = sturm_chain(p);
    if (chain.empty()) return 0;
    std::vector<int> lo, hi;
    for (const auto& q : chain) {
        lo.push_back(detail::sign_at_infinity(q, -1));
        hi.push_back(detail::sign_at_infinity(q, +1));
    }
    return detail::variations(lo) - detail::variations(hi);
}

inline int count_distinct_real_roots_in(const UniPoly& p, const Rational& a, const Rational& b) {
    std::vector<UniPoly> chain = sturm_chain(p);
    if (chain.empty()) return 0;
    std::vector<int> lo, hi;
    for (const auto& q : chain) {
        lo.push_back(uni_eval(q, a).sign());
        hi.push_back(uni_eval(q, b).sign());
    }
    return detail::variations(lo) - detail::variations(hi);
}

// Yun's algorithm: square-free decomposition p = prod_i factor_i^{mult_i}
// (up to a constant), factors pairwise coprime and square-free.
inline std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p0) {
    UniPoly p = uni_primitive(p0);
    std::vector<std::pair<UniPoly, int>> out;
    if (uni_degree(p) < 1) return out;
    UniPoly dp = uni_derivative(p);
    UniPoly a = uni_gcd(p, dp);
    if (uni_degree(a) < 1) {
        out.emplace_back(p, 1);
        return out;
    }
    UniPoly b = uni_div_exact(p, a);
    UniPoly c = uni_div_exact(dp, a);
    UniPoly d;
    {
        UniPoly db = uni_derivative(b);
        d = c;
        // d = c - b'
        if (d.size() < db.size()) d.resize(db.size());
        for (std::size_t i = 0; i < db.size(); ++i) d[i] -= db[i];
        uni_trim(d);
    }
    int mult = 1;
    while (uni_degree(b) >= 1) {
        UniPoly f = uni_gcd(b, d);
        if (uni_degree(f) >= 1) out.emplace_back(uni_primitive(f), mult);
        UniPoly nb = uni_degree(f) >= 1 ? uni_div_exact(b, f) : b;
        UniPoly q = uni_degree(f) >= 1 ? uni_div_exact(d, f) : d;
        UniPoly dnb = uni_derivative(nb);
        UniPoly nd = q;
        if (nd.size() < dnb.size()) nd.resize(dnb.size());
        for (std::size_t i = 0; i < dnb.size(); ++i) nd[i] -= dnb[i];
        uni_trim(nd);
        b = std::move(nb);
        d = std::move(nd);
        ++mult;
    }
    return out;
}

// Real roots counted with multiplicity.
inline int count_real_roots_with_multiplicity(const UniPoly& p) {
    int total = 0;
    for (const auto& [f, mult] : squarefree_decomposition(p))
        total += mult * count_distinct_real_roots(f);
    return total;
}

} // namespace centralcurve
