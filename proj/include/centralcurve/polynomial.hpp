#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace centralcurve {

using Exponents = std::vector<int>;

// Term order: total degree first, ties broken lexicographically with the last
// variable dominant (so with variables (y1, y2), y2^4 sorts above y1*y2^3).
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = 0, db = 0;
        for (int v : a) da += v;
        for (int v : b) db += v;
        if (da != db) return da < db;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
};

// Multivariate polynomial over exact rationals, sparse in the monomials.
class SparsePolynomial {
  public:
    SparsePolynomial() = default;
    explicit SparsePolynomial(std::vector<std::string> variables)
        : vars_(std::move(variables)) {}

    static SparsePolynomial constant(std::vector<std::string> variables, const Rational& c) {
        SparsePolynomial p(std::move(variables));
        if (!c.is_zero()) p.terms_[Exponents(p.vars_.size(), 0)] = c;
        return p;
    }
    static SparsePolynomial monomial(std::vector<std::string> variables, Exponents e, const Rational& c) {
        SparsePolynomial p(std::move(variables));
        if (e.size() != p.vars_.size()) throw MismatchedShape("monomial exponent length");
        if (!c.is_zero()) p.terms_[std::move(e)] = c;
        return p;
    }
    static SparsePolynomial variable(std::vector<std::string> variables, std::size_t index) {
        Exponents e(variables.size(), 0);
        e[index] = 1;
        return monomial(std::move(variables), std::move(e), Rational(1));
    }

    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<Exponents, Rational, GradedLexLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int t = 0;
            for (int v : e) t += v;
            d = std::max(d, t);
        }
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int t = 0;
            for (int v : e) t += v;
            if (d < 0) d = t;
            else if (t != d) return false;
        }
        return true;
    }

    Rational coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Exponents& e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SparsePolynomial operator-() const {
        SparsePolynomial r(vars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend SparsePolynomial operator+(const SparsePolynomial& a, const SparsePolynomial& b) {
        a.check_same_vars(b);
        SparsePolynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend SparsePolynomial operator-(const SparsePolynomial& a, const SparsePolynomial& b) {
        a.check_same_vars(b);
        SparsePolynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
        a.check_same_vars(b);
        SparsePolynomial r(a.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend SparsePolynomial operator*(const Rational& s, const SparsePolynomial& p) {
        SparsePolynomial r(p.vars_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : p.terms_) r.terms_[e] = s * c;
        return r;
    }

    bool operator==(const SparsePolynomial& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }

    template <typename T>
    T evaluate(const std::vector<T>& point) const {
        if (point.size() != vars_.size()) throw MismatchedShape("evaluation point length");
        T acc{};
        bool first = true;
        for (const auto& [e, c] : terms_) {
            T t = coeff_as<T>(c);
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) t = t * point[i];
            if (first) { acc = t; first = false; }
            else acc = acc + t;
        }
        return first ? T{} : acc;
    }

    SparsePolynomial derivative(std::size_t var) const {
        SparsePolynomial r(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents ne = e;
            ne[var] -= 1;
            r.add_term(ne, Rational(e[var]) * c);
        }
        return r;
    }

    // Prepend a fresh variable and pad every term up to the total degree.
    SparsePolynomial homogenize(const std::string& new_var) const {
        int d = total_degree();
        std::vector<std::string> nv;
        nv.reserve(vars_.size() + 1);
        nv.push_back(new_var);
        for (const auto& v : vars_) nv.push_back(v);
        SparsePolynomial r(nv);
        for (const auto& [e, c] : terms_) {
            int t = 0;
            for (int v : e) t += v;
            Exponents ne(e.size() + 1);
            ne[0] = d - t;
            std::copy(e.begin(), e.end(), ne.begin() + 1);
            r.terms_[ne] = c;
        }
        return r;
    }

    // Substitute each listed variable by an affine (or any) polynomial in the
    // retained variables; result lives in the retained variables.
    SparsePolynomial substitute(const std::map<std::string, SparsePolynomial>& subs) const {
        std::vector<std::string> kept;
        for (const auto& v : vars_)
            if (!subs.count(v)) kept.push_back(v);
        for (const auto& [v, p] : subs) {
            if (std::find(vars_.begin(), vars_.end(), v) == vars_.end())
                throw MismatchedShape("substitution for unknown variable " + v);
            if (p.variables() != kept)
                throw MismatchedShape("substitution polynomial for " + v +
                                      " must use exactly the retained variables");
        }
        SparsePolynomial result(kept);
        std::vector<const SparsePolynomial*> image(vars_.size(), nullptr);
        std::vector<std::size_t> kept_index(vars_.size(), 0);
        {
            std::size_t ki = 0;
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                auto it = subs.find(vars_[i]);
                if (it != subs.end()) image[i] = &it->second;
                else kept_index[i] = ki++;
            }
        }
        for (const auto& [e, c] : terms_) {
            SparsePolynomial term = SparsePolynomial::constant(kept, c);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (image[i]) {
                    SparsePolynomial p = *image[i];
                    for (int k = 0; k < e[i]; ++k) term = term * p;
                } else {
                    Exponents me(kept.size(), 0);
                    me[kept_index[i]] = e[i];
                    term = term * monomial(kept, me, Rational(1));
                }
            }
            for (const auto& [te, tc] : term.terms_) result.add_term(te, tc);
        }
        return result;
    }

    // Primitive part: integer coprime coefficients, positive leading (largest
    // in term order) coefficient. Zero stays zero.
    SparsePolynomial primitive_normalized() const {
        if (terms_.empty()) return *this;
        mpz_class den_lcm = 1;
        for (const auto& [e, c] : terms_) {
            mpz_class d = c.den(), g;
            mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
            den_lcm = den_lcm / g * d;
        }
        mpz_class num_gcd = 0;
        for (const auto& [e, c] : terms_) {
            mpz_class z = c.num() * (den_lcm / c.den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), z.get_mpz_t());
        }
        Rational scale = Rational(mpq_class(den_lcm) / mpq_class(num_gcd));
        if (terms_.rbegin()->second.sign() < 0) scale = -scale;
        return scale * (*this);
    }

    bool equal_up_to_scalar(const SparsePolynomial& o) const {
        if (vars_.size() != o.vars_.size()) return false;
        return primitive_normalized().terms_ == o.primitive_normalized().terms_;
    }

    // Sum of |coefficient| as a double; scaling factor for residual tests.
    double coeff_one_norm() const {
        double s = 0;
        for (const auto& [e, c] : terms_) s += std::abs(c.to_double());
        return s;
    }

    // Canonical text: terms in graded-lex descending order, each as
    // `p/q*x1^a*x2^b` (coefficient always printed), joined by ` + ` / ` - `.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Rational c = it->second;
            std::string mag = abs(c).str();
            std::string term = mag;
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                int e = it->first[i];
                if (e == 0) continue;
                term += "*" + vars_[i];
                if (e > 1) term += "^" + std::to_string(e);
            }
            if (out.empty()) out = (c.sign() < 0 ? "-" : "") + term;
            else out += (c.sign() < 0 ? " - " : " + ") + term;
        }
        return out;
    }

    // Parse the canonical form back (whitespace-tolerant).
    static SparsePolynomial parse(const std::string& text, std::vector<std::string> variables);

  private:
    template <typename T>
    static T coeff_as(const Rational& c);

    void check_same_vars(const SparsePolynomial& o) const {
        if (vars_ != o.vars_) throw MismatchedShape("polynomials over different variable lists");
    }

    std::vector<std::string> vars_;
    std::map<Exponents, Rational, GradedLexLess> terms_;
};

template <>
inline Rational SparsePolynomial::coeff_as<Rational>(const Rational& c) { return c; }
template <>
inline double SparsePolynomial::coeff_as<double>(const Rational& c) { return c.to_double(); }

inline SparsePolynomial SparsePolynomial::parse(const std::string& text,
                                                std::vector<std::string> variables) {
    SparsePolynomial out(variables);
    std::size_t i = 0, n = text.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i < n && text.compare(i, 1, "0") == 0 && i + 1 == n) return out;
    int sign = 1;
    if (i < n && (text[i] == '-' || text[i] == '+')) {
        sign = text[i] == '-' ? -1 : 1;
        ++i;
    }
    while (i < n) {
        skip_ws();
        // coefficient
        std::size_t start = i;
        while (i < n && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
        if (start == i) throw ParseError("expected coefficient in polynomial at offset " + std::to_string(i));
        Rational c = Rational::parse(text.substr(start, i - start));
        Exponents e(variables.size(), 0);
        skip_ws();
        while (i < n && text[i] == '*') {
            ++i;
            skip_ws();
            std::size_t vs = i;
            while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
            std::string vname = text.substr(vs, i - vs);
            auto vit = std::find(variables.begin(), variables.end(), vname);
            if (vit == variables.end()) throw ParseError("unknown variable '" + vname + "'");
            int exp = 1;
            skip_ws();
            if (i < n && text[i] == '^') {
                ++i;
                std::size_t es = i;
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (es == i) throw ParseError("expected exponent at offset " + std::to_string(i));
                exp = std::stoi(text.substr(es, i - es));
            }
            e[static_cast<std::size_t>(vit - variables.begin())] += exp;
            skip_ws();
        }
        out.add_term(e, sign < 0 ? -c : c);
        skip_ws();
        if (i == n) break;
        if (text[i] == '+') sign = 1;
        else if (text[i] == '-') sign = -1;
        else throw ParseError("expected '+' or '-' at offset " + std::to_string(i));
        ++i;
        skip_ws();
    }
    return out;
}

} // namespace centralcurve
