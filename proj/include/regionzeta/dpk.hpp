#pragma once

// The restricted type-D family D_p^k, 0 <= k <= p: hyperplanes
// x_i - x_j, x_i + x_j (i < j) and the last k coordinate hyperplanes
// x_{p-k+1}, ..., x_p.  Interpolates between the type-D arrangement (k = 0)
// and type B (k = p).
//
// Regions are encoded by integer points: tuples (x_1,...,x_p) with distinct
// magnitudes {1..p} and no -1 in the first p-k coordinates.  An entry of
// magnitude 1 in a coordinate without its hyperplane can flip sign without
// leaving the region, which is why codes are normalized to +1 there; each
// region then holds exactly one code.  Ranks against the base region of
// (p, p-1, ..., 1) are plain sign counts on integer points, no field
// arithmetic involved.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "arrangement.hpp"
#include "errors.hpp"
#include "poly.hpp"
#include "scalar.hpp"

namespace regionzeta::dpk {

struct Params {
    int p = 1;
    int k = 0;

    void validate() const {
        if (p < 1 || k < 0 || k > p)
            throw InputError("D_p^k requires p >= 1 and 0 <= k <= p");
    }
    std::string name() const { return "D:" + std::to_string(p) + ":" + std::to_string(k); }
};

using Code = std::vector<int>; // signed tuple, |x_i| a permutation of 1..p

struct CodeGuard {
    size_t max_codes = 10000000;
};

inline Arrangement build_arrangement(const Params& q) {
    q.validate();
    std::vector<Vec> normals;
    for (int i = 0; i < q.p; ++i)
        for (int j = i + 1; j < q.p; ++j) {
            Vec d(q.p, Scalar(0)), s(q.p, Scalar(0));
            d[i] = Scalar(1);
            d[j] = Scalar(-1);
            s[i] = Scalar(1);
            s[j] = Scalar(1);
            normals.push_back(std::move(d));
            normals.push_back(std::move(s));
        }
    for (int i = q.p - q.k; i < q.p; ++i) {
        Vec c(q.p, Scalar(0));
        c[i] = Scalar(1);
        normals.push_back(std::move(c));
    }
    return Arrangement::from_normals(q.p, normals);
}

inline bool code_valid(const Params& q, const Code& x) {
    if (static_cast<int>(x.size()) != q.p) return false;
    std::vector<bool> seen(q.p + 1, false);
    for (int i = 0; i < q.p; ++i) {
        const int mag = std::abs(x[i]);
        if (mag < 1 || mag > q.p || seen[mag]) return false;
        seen[mag] = true;
        if (x[i] == -1 && i < q.p - q.k) return false;
    }
    return true;
}

inline void require_valid(const Params& q, const Code& x) {
    if (!code_valid(q, x)) {
        std::string s;
        for (int v : x) s += std::to_string(v) + " ";
        throw CodeInvalid("not a region code of " + q.name() + ": " + s);
    }
}

// A magnitude-1 entry in a coordinate with no hyperplane stays in the same
// region under sign flip; the canonical code takes +1 there.
inline Code normalize_code(const Params& q, Code x) {
    for (int i = 0; i < q.p - q.k; ++i)
        if (x[i] == -1) x[i] = 1;
    return x;
}

inline Integer code_count(const Params& q) {
    // 2^{p-1} (p-1)! (p+k)
    Integer c(1);
    mpz_mul_2exp(c.get_mpz_t(), c.get_mpz_t(), q.p - 1);
    for (int i = 2; i <= q.p - 1; ++i) c *= i;
    c *= (q.p + q.k);
    return c;
}

// All region codes in lexicographic order.
inline std::vector<Code> codes(const Params& q, const CodeGuard& guard = {}) {
    q.validate();
    const Integer expected = code_count(q);
    if (expected > Integer(static_cast<unsigned long>(guard.max_codes)))
        throw TooManyCodes("code guard: |M| = " + expected.get_str() + " exceeds " +
                           std::to_string(guard.max_codes));
    std::vector<Code> out;
    Code cur(q.p, 0);
    std::vector<bool> used(q.p + 1, false);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == q.p) {
            out.push_back(cur);
            return;
        }
        for (int mag = 1; mag <= q.p; ++mag) {
            if (used[mag]) continue;
            used[mag] = true;
            for (int s : {-1, +1}) {
                const int v = s * mag;
                if (v == -1 && i < q.p - q.k) continue;
                cur[i] = v;
                self(self, i + 1);
            }
            used[mag] = false;
        }
        cur[i] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    if (Integer(static_cast<unsigned long>(out.size())) != expected)
        throw Error("code count mismatch (internal error)");
    return out;
}

inline Code base_code(const Params& q) {
    Code y(q.p);
    for (int i = 0; i < q.p; ++i) y[i] = q.p - i;
    return y;
}

// Number of hyperplanes whose defining form separates x from the base
// (p, p-1, ..., 1): differences x_i < x_j, sums x_i + x_j < 0, and negative
// entries among the last k coordinates.
inline size_t code_rank(const Params& q, const Code& x) {
    require_valid(q, x);
    size_t rank = 0;
    for (int i = 0; i < q.p; ++i)
        for (int j = i + 1; j < q.p; ++j) {
            if (x[i] < x[j]) ++rank;
            if (x[i] + x[j] < 0) ++rank;
        }
    for (int i = q.p - q.k; i < q.p; ++i)
        if (x[i] < 0) ++rank;
    return rank;
}

// Wall of a region, identified by its defining form.
struct Wall {
    enum Kind { difference, sum, coordinate } kind;
    int i = 0; // 0-based; for difference/sum i < j
    int j = 0;

    friend bool operator<(const Wall& l, const Wall& r) {
        if (l.kind != r.kind) return l.kind < r.kind;
        if (l.i != r.i) return l.i < r.i;
        return l.j < r.j;
    }
    friend bool operator==(const Wall& l, const Wall& r) {
        return l.kind == r.kind && l.i == r.i && l.j == r.j;
    }

    Vec normal(int p) const {
        Vec v(p, Scalar(0));
        switch (kind) {
        case difference:
            v[i] = Scalar(1);
            v[j] = Scalar(-1);
            break;
        case sum:
            v[i] = Scalar(1);
            v[j] = Scalar(1);
            break;
        case coordinate: v[i] = Scalar(1); break;
        }
        return v;
    }

    std::string str() const {
        switch (kind) {
        case difference: return "x" + std::to_string(i + 1) + "-x" + std::to_string(j + 1);
        case sum: return "x" + std::to_string(i + 1) + "+x" + std::to_string(j + 1);
        default: return "x" + std::to_string(i + 1);
        }
    }
};

namespace detail {

// Wall rules on a raw grid point (not necessarily normalized): values
// differing by one share a difference wall and swap; values summing to +-1
// apart share a sum wall and swap magnitudes keeping signs; a magnitude-1
// entry over its own coordinate hyperplane flips.
inline void collect_rule_walls(const Params& q, const Code& y,
                               std::vector<std::pair<Wall, Code>>& out) {
    for (int i = 0; i < q.p; ++i)
        for (int j = i + 1; j < q.p; ++j) {
            if (y[j] == y[i] + 1 || y[j] == y[i] - 1) {
                Code z = y;
                std::swap(z[i], z[j]);
                out.push_back({Wall{Wall::difference, i, j}, normalize_code(q, std::move(z))});
            }
            if (y[j] == -(y[i] + 1) || y[j] == -(y[i] - 1)) {
                Code z = y;
                const int si = y[i] > 0 ? 1 : -1;
                const int sj = y[j] > 0 ? 1 : -1;
                z[i] = si * std::abs(y[j]);
                z[j] = sj * std::abs(y[i]);
                out.push_back({Wall{Wall::sum, i, j}, normalize_code(q, std::move(z))});
            }
        }
    for (int i = q.p - q.k; i < q.p; ++i) {
        if (y[i] == 1 || y[i] == -1) {
            Code z = y;
            z[i] = -z[i];
            out.push_back({Wall{Wall::coordinate, i, 0}, normalize_code(q, std::move(z))});
        }
    }
}

} // namespace detail

// All wall-adjacent regions of x.  Rules are applied to every grid point of
// the region: the code itself, plus the sign-flipped twin when a +1 sits in
// a coordinate without its hyperplane.
inline std::vector<std::pair<Wall, Code>> neighbors(const Params& q, const Code& x) {
    require_valid(q, x);
    std::vector<std::pair<Wall, Code>> raw;
    detail::collect_rule_walls(q, x, raw);
    for (int i = 0; i < q.p - q.k; ++i) {
        if (x[i] == 1) {
            Code twin = x;
            twin[i] = -1;
            detail::collect_rule_walls(q, twin, raw);
        }
    }
    std::map<Wall, Code> dedup;
    for (auto& [w, z] : raw) {
        auto [it, inserted] = dedup.emplace(w, z);
        if (!inserted && !(it->second == z))
            throw Error("wall with two distinct neighbors (internal error)");
    }
    std::vector<std::pair<Wall, Code>> out(dedup.begin(), dedup.end());
    return out;
}

inline Polynomial zeta_bruteforce(const Params& q, const CodeGuard& guard = {}) {
    std::vector<Integer> coeff;
    for (const Code& x : codes(q, guard)) {
        const size_t r = code_rank(q, x);
        if (coeff.size() <= r) coeff.resize(r + 1, Integer(0));
        coeff[r] += 1;
    }
    return Polynomial(std::move(coeff));
}

// exp(D_p^k) = {1, 3, ..., 2p-3} together with p+k-1.
inline std::vector<long> exponent_multiset(const Params& q) {
    q.validate();
    std::vector<long> e;
    if (q.p == 1) {
        if (q.k == 1) e.push_back(1);
        return e;
    }
    for (int i = 1; i <= 2 * q.p - 3; i += 2) e.push_back(i);
    e.push_back(q.p + q.k - 1);
    std::sort(e.begin(), e.end());
    return e;
}

// Closed form of the rank-generating function: the product F over the
// exponent multiset.  Valid on the whole parameter range 0 <= k <= p; the
// endpoints k >= p-2 are the supersolvable/factored regimes and the band
// in between is covered by the slice recursion, which the test suite
// verifies against brute force.
inline Polynomial zeta_closed(const Params& q) {
    q.validate();
    if (q.p < 2) throw InputError("closed form requires p >= 2; p = 1 is handled by enumeration");
    return f_product(exponent_multiset(q));
}

// zeta for any p, small cases by direct enumeration.
inline Polynomial zeta_of(const Params& q) {
    q.validate();
    if (q.p == 1) return q.k == 1 ? Polynomial(std::vector<Integer>{1, 1}) : Polynomial::one();
    return zeta_closed(q);
}

// The two-factor combination sum_{i<=p-k}(t^{i-1}+t^{2p-i-1}) F(p+k-2)
//   + sum_{i>p-k}(t^{i-1}+t^{2p-i}) F(p+k-3); always equals F(p+k-1, 2p-3).
inline Polynomial delta(int p, int k) {
    if (p < 3 || k < 0 || k > p) throw InputError("delta requires p >= 3 and 0 <= k <= p");
    Polynomial acc;
    const Polynomial f_long = f_product({p + k - 2});
    const Polynomial f_short = f_product({p + k - 3});
    for (int i = 1; i <= p - k; ++i) {
        Polynomial t = Polynomial::monomial(i - 1) + Polynomial::monomial(2 * p - i - 1);
        acc += t * f_long;
    }
    for (int i = p - k + 1; i <= p; ++i) {
        Polynomial t = Polynomial::monomial(i - 1) + Polynomial::monomial(2 * p - i);
        acc += t * f_short;
    }
    const Polynomial expected = f_product({p + k - 1, 2 * p - 3});
    if (acc != expected)
        throw Error("delta identity failed for p=" + std::to_string(p) + " k=" + std::to_string(k) +
                    " (internal error)");
    return acc;
}

// Brute-force sum of t^{rank} over the slice x_i = +p or -p, asserted equal
// to its closed form: the slice is a shifted copy of the (p-1)-parameter
// family, with k dropping by one when coordinate i carries a hyperplane.
inline Polynomial slice_sum(const Params& q, int i, int sgn, const CodeGuard& guard = {}) {
    q.validate();
    if (q.p < 2 || i < 1 || i > q.p || (sgn != 1 && sgn != -1))
        throw InputError("slice_sum requires p >= 2, 1 <= i <= p, sign in {+1,-1}");
    std::vector<Integer> coeff;
    for (const Code& x : codes(q, guard)) {
        if (x[i - 1] != sgn * q.p) continue;
        const size_t r = code_rank(q, x);
        if (coeff.size() <= r) coeff.resize(r + 1, Integer(0));
        coeff[r] += 1;
    }
    Polynomial brute{std::move(coeff)};

    const bool inner = i <= q.p - q.k; // coordinate i has no hyperplane
    Params smaller{q.p - 1, inner ? q.k : q.k - 1};
    size_t shift;
    if (sgn > 0)
        shift = static_cast<size_t>(i - 1);
    else
        shift = static_cast<size_t>(inner ? 2 * q.p - i - 1 : 2 * q.p - i);
    const Polynomial closed = zeta_of(smaller).shifted(shift);
    if (brute != closed)
        throw Error("slice closed form failed for " + q.name() + " i=" + std::to_string(i) +
                    " sign=" + std::to_string(sgn) + " (internal error)");
    return brute;
}

} // namespace regionzeta::dpk
