#pragma once

// Regions of a central arrangement: enumeration by incremental insertion
// with an exact feasibility oracle, separating sets, walls, and the
// rank-generating function of the poset of regions for a chosen base.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "arrangement.hpp"
#include "errors.hpp"
#include "lp.hpp"
#include "poly.hpp"

namespace regionzeta {

// Packed sign vector: bit 0 encodes '+', bit 1 encodes '-'.  Rank queries
// against a base are Hamming distances, the hot loop of the base search.
struct SignVec {
    size_t n = 0;
    std::vector<uint64_t> bits;

    explicit SignVec(size_t size = 0) : n(size), bits((size + 63) / 64, 0) {}

    bool minus(size_t i) const { return (bits[i >> 6] >> (i & 63)) & 1; }
    void set_minus(size_t i, bool v) {
        if (v)
            bits[i >> 6] |= uint64_t(1) << (i & 63);
        else
            bits[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }
    int sign_at(size_t i) const { return minus(i) ? -1 : +1; }

    SignVec flipped(size_t i) const {
        SignVec s = *this;
        s.bits[i >> 6] ^= uint64_t(1) << (i & 63);
        return s;
    }

    SignVec complement() const {
        SignVec s = *this;
        for (auto& w : s.bits) w = ~w;
        const size_t tail = n & 63;
        if (!s.bits.empty() && tail) s.bits.back() &= (uint64_t(1) << tail) - 1;
        return s;
    }

    size_t hamming(const SignVec& o) const {
        size_t acc = 0;
        for (size_t w = 0; w < bits.size(); ++w)
            acc += static_cast<size_t>(__builtin_popcountll(bits[w] ^ o.bits[w]));
        return acc;
    }

    // '+' sorts before '-'
    bool lex_less(const SignVec& o) const {
        for (size_t i = 0; i < n; ++i) {
            const bool a = minus(i), b = o.minus(i);
            if (a != b) return b;
        }
        return false;
    }

    std::string str() const {
        std::string s(n, '+');
        for (size_t i = 0; i < n; ++i)
            if (minus(i)) s[i] = '-';
        return s;
    }

    static SignVec parse(const std::string& s) {
        SignVec v(s.size());
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '-')
                v.set_minus(i, true);
            else if (s[i] != '+')
                throw ParseError("bad sign character '" + std::string(1, s[i]) + "'");
        }
        return v;
    }

    friend bool operator==(const SignVec& l, const SignVec& r) {
        return l.n == r.n && l.bits == r.bits;
    }
};

struct SignVecHash {
    size_t operator()(const SignVec& s) const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t w : s.bits) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h ^ s.n);
    }
};

struct Chamber {
    SignVec signs;
    Vec witness; // ambient coordinates, strictly off every hyperplane
};

struct ChamberGuards {
    size_t max_hyperplanes = 130;
    size_t max_chambers = 5000000;
};

struct ChamberSet {
    Arrangement arrangement;
    Essentialization essential;
    std::vector<Chamber> chambers; // canonical order: lexicographic sign vectors
    std::unordered_map<SignVec, size_t, SignVecHash> index;

    size_t size() const { return chambers.size(); }

    size_t find(const SignVec& s) const {
        auto it = index.find(s);
        return it == index.end() ? Arrangement::npos : it->second;
    }

    // Chamber whose interior contains the given ambient point; the point
    // must be strictly off every hyperplane.
    size_t locate(const Vec& point) const {
        SignVec s(arrangement.size());
        for (size_t i = 0; i < arrangement.size(); ++i) {
            const int sg = dot(arrangement.normals[i], point).sign();
            if (sg == 0)
                throw BaseNotAChamber("point lies on hyperplane " + std::to_string(i));
            s.set_minus(i, sg < 0);
        }
        const size_t at = find(s);
        if (at == Arrangement::npos)
            throw Error("realizable sign vector missing from chamber set (internal error)");
        return at;
    }

    size_t antipode(size_t i) const {
        const size_t at = find(chambers[i].signs.complement());
        if (at == Arrangement::npos) throw Error("antipodal chamber missing (internal error)");
        return at;
    }
};

inline ChamberSet enumerate_chambers(const Arrangement& a, const ChamberGuards& g = {}) {
    if (a.size() > g.max_hyperplanes)
        throw TooManyChambers("chamber guard: " + std::to_string(a.size()) +
                              " hyperplanes, max " + std::to_string(g.max_hyperplanes));

    ChamberSet cs;
    cs.arrangement = a;
    cs.essential = essentialize(a);
    const auto& normals = cs.essential.normals;

    struct Partial {
        SignVec signs;
        Vec witness; // essential coordinates
    };
    std::vector<Partial> regions{{SignVec(a.size()), Vec(cs.essential.rank, Scalar(0))}};

    std::vector<Vec> prefix;
    std::vector<int> want;
    for (size_t h = 0; h < a.size(); ++h) {
        prefix.push_back(normals[h]);
        std::vector<Partial> next;
        next.reserve(regions.size() * 2);
        for (Partial& r : regions) {
            want.assign(h + 1, 0);
            for (size_t i = 0; i < h; ++i) want[i] = r.signs.sign_at(i);
            const int at_witness = dot(normals[h], r.witness).sign();
            for (int side : {+1, -1}) {
                Partial ext;
                ext.signs = r.signs;
                ext.signs.set_minus(h, side < 0);
                if (side == at_witness) {
                    ext.witness = r.witness;
                } else {
                    want[h] = side;
                    auto w = feasible_interior_point(prefix, want);
                    if (!w) continue;
                    ext.witness = std::move(*w);
                }
                next.push_back(std::move(ext));
            }
        }
        regions = std::move(next);
        if (regions.size() > g.max_chambers)
            throw TooManyChambers("chamber guard: more than " + std::to_string(g.max_chambers) +
                                  " regions");
    }

    std::sort(regions.begin(), regions.end(),
              [](const Partial& l, const Partial& r) { return l.signs.lex_less(r.signs); });
    cs.chambers.reserve(regions.size());
    for (Partial& r : regions) {
        Chamber c;
        c.signs = std::move(r.signs);
        c.witness = cs.essential.to_ambient(r.witness);
        cs.index.emplace(c.signs, cs.chambers.size());
        cs.chambers.push_back(std::move(c));
    }
    return cs;
}

inline std::vector<size_t> separating_set(const ChamberSet& cs, size_t r, size_t s) {
    std::vector<size_t> out;
    const SignVec& a = cs.chambers[r].signs;
    const SignVec& b = cs.chambers[s].signs;
    for (size_t i = 0; i < a.n; ++i)
        if (a.minus(i) != b.minus(i)) out.push_back(i);
    return out;
}

// zeta(P(A, B), t): coefficient of t^r counts regions separated from the
// base by exactly r hyperplanes.
inline Polynomial zeta(const ChamberSet& cs, size_t base) {
    if (base >= cs.size()) throw BaseNotAChamber("base index out of range");
    std::vector<Integer> coeff(cs.arrangement.size() + 1, Integer(0));
    const SignVec& b = cs.chambers[base].signs;
    for (const Chamber& c : cs.chambers) coeff[b.hamming(c.signs)] += 1;
    return Polynomial(std::move(coeff));
}

inline Polynomial zeta(const ChamberSet& cs, const SignVec& base) {
    const size_t at = cs.find(base);
    if (at == Arrangement::npos) throw BaseNotAChamber("sign vector is not a chamber: " + base.str());
    return zeta(cs, at);
}

// Walls of a region: flipping the sign of a wall yields a realizable sign
// vector.  With the full chamber set in hand this is a lookup; the LP
// variant below decides realizability from scratch and is kept as an
// independent route for cross-checks.
inline std::vector<size_t> walls(const ChamberSet& cs, size_t region) {
    std::vector<size_t> out;
    const SignVec& s = cs.chambers[region].signs;
    for (size_t i = 0; i < cs.arrangement.size(); ++i)
        if (cs.find(s.flipped(i)) != Arrangement::npos) out.push_back(i);
    return out;
}

inline std::vector<size_t> walls_by_lp(const ChamberSet& cs, size_t region) {
    std::vector<size_t> out;
    const SignVec& s = cs.chambers[region].signs;
    std::vector<int> want(cs.arrangement.size());
    for (size_t i = 0; i < cs.arrangement.size(); ++i) want[i] = s.sign_at(i);
    for (size_t i = 0; i < cs.arrangement.size(); ++i) {
        want[i] = -want[i];
        if (feasible_interior_point(cs.essential.normals, want)) out.push_back(i);
        want[i] = -want[i];
    }
    return out;
}

inline std::string export_chambers(const ChamberSet& cs) {
    std::string out;
    for (const Chamber& c : cs.chambers) {
        out += c.signs.str();
        if (!c.witness.empty()) {
            out += ' ';
            out += to_string(c.witness);
        }
        out += '\n';
    }
    return out;
}

} // namespace regionzeta
