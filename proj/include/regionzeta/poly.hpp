#pragma once

// Exact univariate polynomials over arbitrary-precision integers, stored
// low degree first with trailing zeros trimmed.  Hosts the products
// F(e_1,...,e_m) = prod_i (1 + t + ... + t^{e_i}) and the factorization
// test used for rank-generating functions.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"
#include "scalar.hpp"

namespace regionzeta {

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial constant(Integer v) { return Polynomial(std::vector<Integer>{std::move(v)}); }
    static Polynomial one() { return constant(1); }
    // t^k
    static Polynomial monomial(size_t k, Integer coeff = 1) {
        std::vector<Integer> c(k + 1, Integer(0));
        c[k] = std::move(coeff);
        return Polynomial(std::move(c));
    }
    // 1 + t + ... + t^e
    static Polynomial unit_range(size_t e) {
        return Polynomial(std::vector<Integer>(e + 1, Integer(1)));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is reported as -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return c_; }
    Integer coeff(size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }

    Integer operator()(const Integer& x) const {
        Integer acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Integer(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Integer(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial l, const Polynomial& r) { return l += r; }
    friend Polynomial operator-(Polynomial l, const Polynomial& r) { return l -= r; }

    friend Polynomial operator*(const Polynomial& l, const Polynomial& r) {
        if (l.is_zero() || r.is_zero()) return Polynomial();
        std::vector<Integer> out(l.c_.size() + r.c_.size() - 1, Integer(0));
        for (size_t i = 0; i < l.c_.size(); ++i) {
            if (l.c_[i] == 0) continue;
            for (size_t j = 0; j < r.c_.size(); ++j) out[i + j] += l.c_[i] * r.c_[j];
        }
        return Polynomial(std::move(out));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    // multiply by t^k
    Polynomial shifted(size_t k) const {
        if (is_zero()) return Polynomial();
        std::vector<Integer> out(c_.size() + k, Integer(0));
        for (size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
        return Polynomial(std::move(out));
    }

    bool palindromic() const {
        for (size_t i = 0, j = c_.size(); i < j; ++i)
            if (c_[i] != c_[j - 1 - i]) return false;
        return true;
    }

    // Exact division by (t - e); nullopt when e is not a root.
    std::optional<Polynomial> divide_linear(const Integer& e) const {
        if (is_zero()) return Polynomial();
        std::vector<Integer> q(c_.size() - 1, Integer(0));
        Integer carry(0);
        for (size_t i = c_.size(); i-- > 1;) {
            carry = c_[i] + e * carry;
            q[i - 1] = carry;
        }
        Integer rem = c_[0] + e * carry;
        if (rem != 0) return std::nullopt;
        return Polynomial(std::move(q));
    }

    friend bool operator==(const Polynomial& l, const Polynomial& r) { return l.c_ == r.c_; }
    friend bool operator!=(const Polynomial& l, const Polynomial& r) { return !(l == r); }
    friend bool operator<(const Polynomial& l, const Polynomial& r) {
        if (l.c_.size() != r.c_.size()) return l.c_.size() < r.c_.size();
        for (size_t i = l.c_.size(); i-- > 0;)
            if (l.c_[i] != r.c_[i]) return l.c_[i] < r.c_[i];
        return false;
    }

    // `c0 c1 c2 ...`, low degree first; the zero polynomial prints `0`.
    std::string coeff_list() const {
        if (c_.empty()) return "0";
        std::string out;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) out += ' ';
            out += c_[i].get_str();
        }
        return out;
    }

    // `1 + 2t + 2t^2 + t^3`
    std::string pretty() const {
        if (c_.empty()) return "0";
        std::string out;
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            Integer a = c_[i];
            if (first) {
                if (a < 0) out += "-";
                first = false;
            } else {
                out += (a < 0) ? " - " : " + ";
            }
            Integer mag = abs(a);
            if (mag != 1 || i == 0) out += mag.get_str();
            if (i >= 1) out += "t";
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Integer> c_;
};

// F(e_1,...,e_m): degree sum(e_i), value at 1 is prod(e_i + 1), palindromic.
inline Polynomial f_product(const std::vector<long>& exponents) {
    Polynomial out = Polynomial::one();
    for (long e : exponents) {
        if (e < 0) throw Error("negative exponent in F-product");
        out *= Polynomial::unit_range(static_cast<size_t>(e));
    }
    return out;
}

// Does zeta equal F(exponents) exactly?  Degree and value-at-1 prefilters
// avoid building the product in the common mismatch case.
inline bool factors_as(const Polynomial& zeta, const std::vector<long>& exponents) {
    long deg = 0;
    Integer count(1);
    for (long e : exponents) {
        deg += e;
        count *= Integer(e + 1);
    }
    if (zeta.degree() != deg) return false;
    if (zeta(1) != count) return false;
    return zeta == f_product(exponents);
}

inline Polynomial parse_coeff_list(const std::string& text) {
    std::vector<Integer> c;
    size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
        size_t end = pos;
        while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
        if (end > pos) {
            try {
                c.emplace_back(text.substr(pos, end - pos));
            } catch (const std::invalid_argument&) {
                throw ParseError("bad coefficient '" + text.substr(pos, end - pos) + "'");
            }
        }
        pos = end;
    }
    return Polynomial(std::move(c));
}

} // namespace regionzeta
