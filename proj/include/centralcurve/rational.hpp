#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "errors.hpp"

namespace centralcurve {

// Exact rational number. Thin wrapper over GMP's mpq_class that keeps the
// value canonical (gcd(|num|, den) = 1, den >= 1) at all times and fixes the
// serialization to "p" / "p/q".
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}          // NOLINT: implicit by design
    Rational(int n) : v_(n) {}           // NOLINT
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw Error("zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}

    // Accepts "p", "-p", "p/q" with optional whitespace padding.
    static Rational parse(const std::string& text) {
        std::size_t a = 0, b = text.size();
        while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
        std::string t = text.substr(a, b - a);
        if (t.empty()) throw ParseError("empty rational literal");
        std::size_t slash = t.find('/');
        auto digits_ok = [](const std::string& s) {
            if (s.empty()) return false;
            std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
            if (i == s.size()) return false;
            for (; i < s.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
            return true;
        };
        try {
            if (slash == std::string::npos) {
                if (!digits_ok(t)) throw ParseError("bad rational literal '" + t + "'");
                return Rational(mpq_class(t));
            }
            std::string num = t.substr(0, slash), den = t.substr(slash + 1);
            if (!digits_ok(num) || !digits_ok(den)) throw ParseError("bad rational literal '" + t + "'");
            mpq_class q(num + "/" + den);
            if (q.get_den() == 0) throw ParseError("zero denominator in '" + t + "'");
            return Rational(q);
        } catch (const std::invalid_argument&) {
            throw ParseError("bad rational literal '" + t + "'");
        }
    }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    double to_double() const { return v_.get_d(); }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend Rational abs(const Rational& a) { return Rational(mpq_class(abs(a.v_))); }

    const mpq_class& raw() const { return v_; }

  private:
    mpq_class v_;
};

inline Rational pow_int(const Rational& base, unsigned e) {
    Rational r(1);
    Rational bb = base;
    for (unsigned k = e; k > 0; k >>= 1) {
        if (k & 1u) r *= bb;
        if (k > 1) bb *= bb;
    }
    return r;
}

} // namespace centralcurve
