#pragma once

// Exact arithmetic for all geometric computation: arbitrary-precision
// rationals and the real quadratic field Q(sqrt 5).  A Scalar is a value
// a + b*sqrt(5) with rational a, b; the sign under the real embedding
// (sqrt 5 > 0) is decided exactly, with no rounding anywhere.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace regionzeta {

using Integer = mpz_class;
using Rational = mpq_class;

class Scalar {
public:
    Scalar() : a_(0), b_(0) {}
    Scalar(int v) : a_(v), b_(0) {}
    Scalar(long v) : a_(static_cast<signed long>(v)), b_(0) {}
    Scalar(const Integer& v) : a_(v), b_(0) {}
    Scalar(const Rational& a) : a_(a), b_(0) {}
    Scalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static Scalar sqrt5() { return Scalar(Rational(0), Rational(1)); }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt5_coeff() const { return b_; }

    // The rational variant is exactly "b = 0"; values are kept canonical,
    // so the tag never goes stale.
    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    // Exact sign of a + b*sqrt(5).  When a and b disagree in sign the
    // comparison reduces to a^2 vs 5 b^2; equality there is impossible for
    // b != 0 since sqrt 5 is irrational.
    int sign() const {
        const int sa = sgn(a_);
        const int sb = sgn(b_);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        Rational lhs = a_ * a_;
        Rational rhs = 5 * b_ * b_;
        const int c = cmp(lhs, rhs);
        if (c == 0) throw Error("sqrt 5 cannot be rational: a^2 == 5 b^2 with b != 0");
        return c > 0 ? sa : sb;
    }

    Scalar operator-() const { return Scalar(-a_, -b_); }

    Scalar& operator+=(const Scalar& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        // (a + b r)(c + d r) = ac + 5bd + (ad + bc) r,  r = sqrt 5
        Rational a = a_ * o.a_ + 5 * b_ * o.b_;
        Rational b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw Error("division by zero scalar");
        if (o.b_ == 0) {
            a_ /= o.a_;
            b_ /= o.a_;
            return *this;
        }
        // 1/(c + d r) = (c - d r)/(c^2 - 5 d^2)
        Rational norm = o.a_ * o.a_ - 5 * o.b_ * o.b_;
        Rational a = (a_ * o.a_ - 5 * b_ * o.b_) / norm;
        Rational b = (b_ * o.a_ - a_ * o.b_) / norm;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }

    friend Scalar operator+(Scalar l, const Scalar& r) { return l += r; }
    friend Scalar operator-(Scalar l, const Scalar& r) { return l -= r; }
    friend Scalar operator*(Scalar l, const Scalar& r) { return l *= r; }
    friend Scalar operator/(Scalar l, const Scalar& r) { return l /= r; }

    friend bool operator==(const Scalar& l, const Scalar& r) {
        return l.a_ == r.a_ && l.b_ == r.b_;
    }
    friend bool operator!=(const Scalar& l, const Scalar& r) { return !(l == r); }
    friend bool operator<(const Scalar& l, const Scalar& r) { return (l - r).sign() < 0; }
    friend bool operator>(const Scalar& l, const Scalar& r) { return (l - r).sign() > 0; }
    friend bool operator<=(const Scalar& l, const Scalar& r) { return (l - r).sign() <= 0; }
    friend bool operator>=(const Scalar& l, const Scalar& r) { return (l - r).sign() >= 0; }

private:
    Rational a_;
    Rational b_;
};

inline int sign(const Scalar& s) { return s.sign(); }

// ---------------------------------------------------------------------------
// Text form.  Rationals print as `p` or `p/q`; quadratic values as
// `p/q+r/s*r5` with `r5` denoting sqrt 5 and either addend omissible.
// No spaces.

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline std::string to_string(const Scalar& s) {
    if (s.is_rational()) return to_string(s.rational_part());
    std::string out;
    if (s.rational_part() != 0) {
        out += to_string(s.rational_part());
        if (s.sqrt5_coeff() > 0) out += '+';
    }
    out += to_string(s.sqrt5_coeff());
    out += "*r5";
    return out;
}

inline Rational parse_rational(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational literal");
    std::string buf(text);
    try {
        Rational q(buf);
        if (q.get_den() == 0) throw ParseError("zero denominator in '" + buf + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal '" + buf + "'");
    }
}

inline Scalar parse_scalar(std::string_view text) {
    const size_t r5 = text.find("r5");
    if (r5 == std::string_view::npos) return Scalar(parse_rational(text));
    if (r5 + 2 != text.size())
        throw ParseError("trailing characters after r5 in '" + std::string(text) + "'");

    // Pull off the sqrt-5 addend: [rational *] r5, optionally preceded by
    // a rational addend and a sign.
    std::string_view head = text.substr(0, r5);
    std::string_view coeff;
    if (!head.empty() && head.back() == '*') {
        head.remove_suffix(1);
        // coefficient extends back to the separating +/- that is not a
        // leading sign and not part of an exponent-free rational
        size_t split = head.size();
        while (split > 0) {
            const char c = head[split - 1];
            if (c == '+' || c == '-') {
                --split;
                break;
            }
            if (c != '/' && !(c >= '0' && c <= '9')) throw ParseError("bad scalar literal '" + std::string(text) + "'");
            --split;
        }
        if (split == 0) {
            coeff = head;
            head = std::string_view();
        } else {
            coeff = head.substr(split);
            head = head.substr(0, split);
        }
    } else {
        // bare `r5` / `-r5` / `a+r5`
        std::string_view tail = head;
        if (!tail.empty() && (tail.back() == '+' || tail.back() == '-')) {
            coeff = tail.substr(tail.size() - 1);
            head = tail.substr(0, tail.size() - 1);
        } else if (tail.empty()) {
            coeff = "+";
            head = std::string_view();
        } else {
            throw ParseError("bad scalar literal '" + std::string(text) + "'");
        }
    }
    Rational b;
    if (coeff.empty() || coeff == "+")
        b = 1;
    else if (coeff == "-")
        b = -1;
    else if (coeff[0] == '+')
        b = parse_rational(coeff.substr(1));
    else
        b = parse_rational(coeff);
    Rational a = head.empty() ? Rational(0) : parse_rational(head);
    return Scalar(std::move(a), std::move(b));
}

// ---------------------------------------------------------------------------
// Vectors over Scalar.

using Vec = std::vector<Scalar>;

inline bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

inline bool is_quadratic(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_rational()) return true;
    return false;
}

inline Scalar dot(const Vec& u, const Vec& v) {
    Scalar acc;
    for (size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
    return acc;
}

inline Vec negated(Vec v) {
    for (auto& x : v) x = -x;
    return v;
}

inline Vec scaled(Vec v, const Scalar& c) {
    for (auto& x : v) x *= c;
    return v;
}

inline Vec sum(const Vec& u, const Vec& v) {
    Vec w(u.size());
    for (size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
    return w;
}

inline Vec difference(const Vec& u, const Vec& v) {
    Vec w(u.size());
    for (size_t i = 0; i < u.size(); ++i) w[i] = u[i] - v[i];
    return w;
}

inline int compare_lex(const Vec& u, const Vec& v) {
    for (size_t i = 0; i < u.size() && i < v.size(); ++i) {
        const int s = (u[i] - v[i]).sign();
        if (s != 0) return s;
    }
    if (u.size() != v.size()) return u.size() < v.size() ? -1 : 1;
    return 0;
}

// Unique representative of the line spanned by v: divide by the first
// nonzero coordinate, then clear denominators and remove integer content.
// Two vectors span the same hyperplane normal iff canonical forms agree.
inline Vec canonicalize_normal(Vec v) {
    size_t lead = v.size();
    for (size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) {
            lead = i;
            break;
        }
    }
    if (lead == v.size()) throw ZeroVector();
    const Scalar pivot = v[lead];
    for (auto& x : v) x /= pivot;

    Integer den(1);
    for (const auto& x : v) {
        den = lcm(den, x.rational_part().get_den());
        den = lcm(den, x.sqrt5_coeff().get_den());
    }
    Integer content(0);
    for (auto& x : v) {
        x *= Scalar(Rational(den));
        content = gcd(content, x.rational_part().get_num());
        content = gcd(content, x.sqrt5_coeff().get_num());
    }
    if (content > 1) {
        const Scalar inv(Rational(1, content));
        for (auto& x : v) x *= inv;
    }
    return v;
}

inline std::string to_string(const Vec& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += to_string(v[i]);
    }
    return out;
}

// Deterministic string key; used wherever vectors index hash maps.
inline std::string vec_key(const Vec& v) {
    std::string out;
    for (const auto& x : v) {
        out += x.rational_part().get_str();
        out += '|';
        out += x.sqrt5_coeff().get_str();
        out += ';';
    }
    return out;
}

} // namespace regionzeta
