#pragma once

// Finite root systems and Coxeter groups realized in exact coordinates:
// crystallographic families in their standard realizations (identity inner
// product), H3/H4/I2(5) in the geometric representation over Q(sqrt 5) with
// the Gram matrix of -cos(pi/m) bonds.  Provides simple roots, positive
// roots by closure, reflection actions as root permutations, length-graded
// group enumeration, and Coxeter-graph type recognition.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "arrangement.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "scalar.hpp"

namespace regionzeta {

// ---------------------------------------------------------------------------
// Type labels.

struct SimpleType {
    char family = 'A'; // A B C D E F G H I
    int rank = 1;
    int bond = 0; // I2(m) only

    friend bool operator==(const SimpleType& l, const SimpleType& r) {
        return l.family == r.family && l.rank == r.rank && l.bond == r.bond;
    }
    friend bool operator<(const SimpleType& l, const SimpleType& r) {
        if (l.family != r.family) return l.family < r.family;
        if (l.rank != r.rank) return l.rank < r.rank;
        return l.bond < r.bond;
    }
};

struct TypeLabel {
    std::vector<SimpleType> factors; // canonical: expanded and sorted

    int total_rank() const {
        int r = 0;
        for (const auto& f : factors) r += f.rank;
        return r;
    }
    friend bool operator==(const TypeLabel& l, const TypeLabel& r) {
        return l.factors == r.factors;
    }
};

inline std::string to_string(const SimpleType& t) {
    if (t.family == 'I') return "I2(" + std::to_string(t.bond) + ")";
    return std::string(1, t.family) + std::to_string(t.rank);
}

inline std::string to_string(const TypeLabel& t) {
    std::string out;
    for (size_t i = 0; i < t.factors.size(); ++i) {
        if (i) out += 'x';
        out += to_string(t.factors[i]);
    }
    return out.empty() ? "1" : out;
}

// Equivalences between labels naming the same Coxeter type.
inline void append_canonical(std::vector<SimpleType>& out, SimpleType t) {
    if (t.family == 'C') t.family = 'B';
    if (t.family == 'B' && t.rank == 1) t.family = 'A';
    if (t.family == 'D') {
        if (t.rank == 1) t.family = 'A';
        if (t.rank == 2) {
            out.push_back({'A', 1, 0});
            out.push_back({'A', 1, 0});
            return;
        }
        if (t.rank == 3) t = {'A', 3, 0};
    }
    if (t.family == 'H' && t.rank == 2) t = {'I', 2, 5};
    if (t.family == 'I') {
        switch (t.bond) {
        case 2:
            out.push_back({'A', 1, 0});
            out.push_back({'A', 1, 0});
            return;
        case 3: t = {'A', 2, 0}; break;
        case 4: t = {'B', 2, 0}; break;
        case 6: t = {'G', 2, 0}; break;
        default: break;
        }
    }
    out.push_back(t);
}

inline TypeLabel canonical_label(const std::vector<SimpleType>& raw) {
    TypeLabel out;
    for (const auto& t : raw) append_canonical(out.factors, t);
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

inline void validate_simple_type(const SimpleType& t) {
    switch (t.family) {
    case 'A':
        if (t.rank >= 1) return;
        break;
    case 'B':
    case 'C':
    case 'D':
        if (t.rank >= 2) return;
        break;
    case 'E':
        if (t.rank >= 6 && t.rank <= 8) return;
        break;
    case 'F':
        if (t.rank == 4) return;
        break;
    case 'G':
        if (t.rank == 2) return;
        break;
    case 'H':
        if (t.rank == 3 || t.rank == 4) return;
        break;
    case 'I':
        if (t.rank == 2 && t.bond >= 2 && t.bond <= 6) return;
        throw UnsupportedType("I2(m) is supported for m in {2,3,4,5,6} only");
    default: break;
    }
    throw UnsupportedType("unsupported type " + to_string(t));
}

namespace detail {

// Syntax only; semantic validation happens after canonicalization.
inline std::vector<SimpleType> parse_type_tokens(const std::string& text) {
    std::vector<SimpleType> factors;
    size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == 'x' || text[pos] == 'X') {
            ++pos;
            continue;
        }
        const char fam = text[pos];
        if (fam < 'A' || fam > 'I') throw ParseError("bad type label '" + text + "'");
        ++pos;
        SimpleType t{fam, 0, 0};
        if (fam == 'I') {
            if (text.compare(pos, 2, "2(") != 0) throw ParseError("bad type label '" + text + "'");
            pos += 2;
            size_t close = text.find(')', pos);
            if (close == std::string::npos) throw ParseError("bad type label '" + text + "'");
            t.rank = 2;
            try {
                t.bond = std::stoi(text.substr(pos, close - pos));
            } catch (...) {
                throw ParseError("bad type label '" + text + "'");
            }
            pos = close + 1;
        } else {
            size_t end = pos;
            while (end < text.size() && text[end] >= '0' && text[end] <= '9') ++end;
            if (end == pos) throw ParseError("bad type label '" + text + "'");
            t.rank = std::stoi(text.substr(pos, end - pos));
            pos = end;
        }
        factors.push_back(t);
    }
    if (factors.empty()) throw ParseError("empty type label");
    return factors;
}

} // namespace detail

// Parses `A3`, `I2(5)`, and products `A1xA2` or `A1A2`.  Aliases naming the
// same Coxeter type (C4, D3, H2, I2(4), ...) are accepted and canonicalized.
inline TypeLabel parse_type_label(const std::string& text) {
    const TypeLabel out = canonical_label(detail::parse_type_tokens(text));
    for (const SimpleType& t : out.factors) validate_simple_type(t);
    return out;
}

inline Integer group_order(const SimpleType& t) {
    auto factorial = [](int n) {
        Integer f(1);
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    switch (t.family) {
    case 'A': return factorial(t.rank + 1);
    case 'B':
    case 'C': {
        Integer f = factorial(t.rank);
        mpz_mul_2exp(f.get_mpz_t(), f.get_mpz_t(), t.rank);
        return f;
    }
    case 'D': {
        Integer f = factorial(t.rank);
        mpz_mul_2exp(f.get_mpz_t(), f.get_mpz_t(), t.rank - 1);
        return f;
    }
    case 'E':
        if (t.rank == 6) return Integer(51840);
        if (t.rank == 7) return Integer(2903040);
        return Integer(696729600);
    case 'F': return Integer(1152);
    case 'G': return Integer(12);
    case 'H': return t.rank == 3 ? Integer(120) : Integer(14400);
    case 'I': return Integer(2 * t.bond);
    default: throw UnsupportedType("unsupported type " + to_string(t));
    }
}

// ---------------------------------------------------------------------------
// Root systems.

struct RootSystem {
    SimpleType type;
    int rank = 0;
    int dim = 0;
    bool euclidean = true; // gram is the identity
    Mat gram;              // ambient inner product
    std::vector<Vec> simple;
    std::vector<Vec> roots;            // positives first, then mirrored negatives
    size_t positive_count = 0;         // roots[0..positive_count) are positive
    std::vector<std::vector<uint16_t>> simple_perm; // action of s_i on root ids
    std::unordered_map<std::string, size_t> root_ids;

    Scalar ip(const Vec& u, const Vec& v) const {
        if (euclidean) return dot(u, v);
        return dot(u, mat_vec(gram, v));
    }

    // Normal functional of the reflecting hyperplane of a root: x lies on
    // the hyperplane iff dot(functional, x) = 0.
    Vec hyperplane_functional(const Vec& root) const {
        return euclidean ? root : mat_vec(gram, root);
    }

    Vec reflect(const Vec& root, const Vec& v) const {
        const Scalar c = Scalar(2) * ip(root, v) / ip(root, root);
        Vec out = v;
        for (int i = 0; i < dim; ++i) out[i] -= c * root[i];
        return out;
    }

    Mat reflection_matrix(const Vec& root) const {
        Mat m = identity_matrix(dim);
        const Vec functional = hyperplane_functional(root);
        const Scalar f = Scalar(2) / ip(root, root);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) m[i][j] -= f * root[i] * functional[j];
        return m;
    }

    size_t id_of(const Vec& root) const {
        auto it = root_ids.find(vec_key(root));
        if (it == root_ids.end()) throw Error("vector is not a root (internal error)");
        return it->second;
    }

    size_t negate_id(size_t id) const {
        return id < positive_count ? id + positive_count : id - positive_count;
    }
    bool is_positive_id(size_t id) const { return id < positive_count; }
    size_t num_positive() const { return positive_count; }
    const Vec& positive(size_t i) const { return roots[i]; }
};

namespace detail {

inline Vec unit(int dim, int i) {
    Vec v(dim, Scalar(0));
    v[i] = Scalar(1);
    return v;
}

inline Vec make_vec(int dim, std::initializer_list<std::pair<int, Rational>> entries) {
    Vec v(dim, Scalar(0));
    for (const auto& [i, val] : entries) v[i] = Scalar(val);
    return v;
}

inline std::vector<Vec> simple_roots_of(const SimpleType& t, int& dim, Mat& gram, bool& euclidean) {
    euclidean = true;
    std::vector<Vec> s;
    switch (t.family) {
    case 'A': {
        dim = t.rank + 1;
        for (int i = 0; i < t.rank; ++i)
            s.push_back(make_vec(dim, {{i, 1}, {i + 1, -1}}));
        break;
    }
    case 'B':
    case 'C': {
        dim = t.rank;
        for (int i = 0; i + 1 < t.rank; ++i) s.push_back(make_vec(dim, {{i, 1}, {i + 1, -1}}));
        s.push_back(t.family == 'B' ? make_vec(dim, {{t.rank - 1, 1}})
                                    : make_vec(dim, {{t.rank - 1, 2}}));
        break;
    }
    case 'D': {
        dim = t.rank;
        for (int i = 0; i + 1 < t.rank; ++i) s.push_back(make_vec(dim, {{i, 1}, {i + 1, -1}}));
        s.push_back(make_vec(dim, {{t.rank - 2, 1}, {t.rank - 1, 1}}));
        break;
    }
    case 'E': {
        dim = 8;
        Vec a1(8, Scalar(Rational(-1, 2)));
        a1[0] = Scalar(Rational(1, 2));
        a1[7] = Scalar(Rational(1, 2));
        s.push_back(a1);
        s.push_back(make_vec(8, {{0, 1}, {1, 1}}));
        for (int i = 0; i + 1 < t.rank - 1; ++i)
            s.push_back(make_vec(8, {{i, -1}, {i + 1, 1}}));
        break;
    }
    case 'F': {
        dim = 4;
        s.push_back(make_vec(4, {{1, 1}, {2, -1}}));
        s.push_back(make_vec(4, {{2, 1}, {3, -1}}));
        s.push_back(make_vec(4, {{3, 1}}));
        s.push_back(make_vec(4, {{0, Rational(1, 2)},
                                 {1, Rational(-1, 2)},
                                 {2, Rational(-1, 2)},
                                 {3, Rational(-1, 2)}}));
        break;
    }
    case 'G': {
        dim = 3;
        s.push_back(make_vec(3, {{0, 1}, {1, -1}}));
        s.push_back(make_vec(3, {{0, -2}, {1, 1}, {2, 1}}));
        break;
    }
    case 'H':
    case 'I': {
        // geometric representation: basis vectors with Gram entries
        // -cos(pi/m) on the bonds
        const int n = t.rank;
        dim = n;
        euclidean = false;
        gram = identity_matrix(n);
        const Scalar cos5(Rational(1, 4), Rational(1, 4)); // cos(pi/5) = (1+sqrt5)/4
        const Scalar cos3(Rational(1, 2));
        for (int i = 0; i + 1 < n; ++i) {
            Scalar c = cos3;
            if (t.family == 'H' && i == 0) c = cos5;
            if (t.family == 'I') c = cos5; // only I2(5) lands here
            gram[i][i + 1] = -c;
            gram[i + 1][i] = -c;
        }
        for (int i = 0; i < n; ++i) s.push_back(unit(n, i));
        break;
    }
    default: throw UnsupportedType("unsupported type " + to_string(t));
    }
    if (euclidean) gram = identity_matrix(dim);
    return s;
}

} // namespace detail

inline RootSystem build_root_system(SimpleType t) {
    validate_simple_type(t);
    // crystallographic realizations for the small dihedral types
    SimpleType realized = t;
    if (t.family == 'I') {
        switch (t.bond) {
        case 3: realized = {'A', 2, 0}; break;
        case 4: realized = {'B', 2, 0}; break;
        case 6: realized = {'G', 2, 0}; break;
        default: break;
        }
    }
    RootSystem rs;
    rs.type = t;
    rs.rank = t.rank;

    if (t.family == 'I' && t.bond == 2) {
        rs.dim = 2;
        rs.euclidean = true;
        rs.gram = identity_matrix(2);
        rs.simple = {detail::unit(2, 0), detail::unit(2, 1)};
    } else {
        rs.simple = detail::simple_roots_of(realized, rs.dim, rs.gram, rs.euclidean);
    }

    // Closure of the simple roots under the simple reflections.
    std::unordered_map<std::string, Vec> closure;
    std::vector<Vec> frontier = rs.simple;
    for (const Vec& v : frontier) closure.emplace(vec_key(v), v);
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const Vec& v : frontier)
            for (const Vec& a : rs.simple) {
                Vec w = rs.reflect(a, v);
                auto [it, inserted] = closure.emplace(vec_key(w), w);
                if (inserted) next.push_back(it->second);
            }
        frontier = std::move(next);
    }

    std::vector<Vec> positives;
    for (auto& [key, v] : closure) {
        auto coeff = solve_columns(rs.simple, v);
        if (!coeff) throw Error("root outside simple span (internal error)");
        bool nonneg = true, nonpos = true;
        for (const Scalar& c : *coeff) {
            const int s = c.sign();
            if (s < 0) nonneg = false;
            if (s > 0) nonpos = false;
        }
        if (nonneg == nonpos) throw Error("root with mixed simple coefficients (internal error)");
        if (nonneg) positives.push_back(v);
    }
    std::sort(positives.begin(), positives.end(),
              [](const Vec& u, const Vec& v) { return compare_lex(u, v) < 0; });
    rs.positive_count = positives.size();
    rs.roots = positives;
    for (const Vec& v : positives) rs.roots.push_back(negated(v));
    for (size_t i = 0; i < rs.roots.size(); ++i) rs.root_ids.emplace(vec_key(rs.roots[i]), i);

    rs.simple_perm.assign(rs.rank, std::vector<uint16_t>(rs.roots.size(), 0));
    for (int i = 0; i < rs.rank; ++i)
        for (size_t r = 0; r < rs.roots.size(); ++r)
            rs.simple_perm[i][r] = static_cast<uint16_t>(rs.id_of(rs.reflect(rs.simple[i], rs.roots[r])));
    return rs;
}

inline RootSystem build_root_system(const std::string& label) {
    // parse without canonicalization: `I2(2)` builds as requested even
    // though the label names a reducible Coxeter type
    const std::vector<SimpleType> tokens = detail::parse_type_tokens(label);
    if (tokens.size() != 1)
        throw UnsupportedType("root system construction expects an irreducible type, got '" + label +
                              "'");
    return build_root_system(tokens[0]);
}

// A(W): reflecting hyperplanes of all reflections, one per positive root.
inline Arrangement coxeter_arrangement(const RootSystem& rs) {
    std::vector<Vec> normals;
    normals.reserve(rs.num_positive());
    for (size_t i = 0; i < rs.num_positive(); ++i)
        normals.push_back(rs.hyperplane_functional(rs.positive(i)));
    return Arrangement::from_normals(rs.dim, normals);
}

// Point q in the span of the simple roots with ip(a_i, q) = 0 for i in
// `zeroed` and ip(a_i, q) = 1 otherwise.  With `zeroed` empty this is a
// dominant-chamber interior point; in general it is interior to the face
// fixed exactly by the parabolic of `zeroed`.
inline Vec fundamental_face_point(const RootSystem& rs, const std::vector<int>& zeroed = {}) {
    Mat g(rs.rank, Vec(rs.rank, Scalar(0)));
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) g[i][j] = rs.ip(rs.simple[i], rs.simple[j]);
    Vec rhs(rs.rank, Scalar(1));
    for (int i : zeroed) rhs[i] = Scalar(0);
    std::vector<Vec> cols(rs.rank);
    for (int j = 0; j < rs.rank; ++j) {
        cols[j].resize(rs.rank);
        for (int i = 0; i < rs.rank; ++i) cols[j][i] = g[i][j];
    }
    auto c = solve_columns(cols, rhs);
    if (!c) throw Error("degenerate simple-root Gram matrix (internal error)");
    Vec q(rs.dim, Scalar(0));
    for (int j = 0; j < rs.rank; ++j)
        for (int i = 0; i < rs.dim; ++i) q[i] += (*c)[j] * rs.simple[j][i];
    return q;
}

inline Vec dominant_point(const RootSystem& rs) { return fundamental_face_point(rs); }

// ---------------------------------------------------------------------------
// Length-graded enumeration.

struct GroupGuard {
    Integer max_order = Integer(10000000);
};

namespace detail {

inline std::string perm_fingerprint(const RootSystem& rs, const std::vector<uint16_t>& perm) {
    // images of the simple roots determine the element
    std::string key;
    key.reserve(2 * rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
        const uint16_t img = perm[rs.id_of(rs.simple[i])];
        key.push_back(static_cast<char>(img & 0xff));
        key.push_back(static_cast<char>(img >> 8));
    }
    return key;
}

template <class Visit>
inline void bfs_group(const RootSystem& rs, const GroupGuard& guard, Visit&& visit) {
    const Integer order = group_order(rs.type);
    if (order > guard.max_order)
        throw GroupTooLarge("group guard: |W| = " + order.get_str() + " exceeds " +
                            guard.max_order.get_str());
    const size_t nroots = rs.roots.size();
    std::vector<uint16_t> id(nroots);
    for (size_t i = 0; i < nroots; ++i) id[i] = static_cast<uint16_t>(i);

    std::unordered_set<std::string> seen;
    seen.insert(perm_fingerprint(rs, id));
    std::vector<std::vector<uint16_t>> frontier{id};
    int length = 0;
    Integer total(0);
    while (!frontier.empty()) {
        total += static_cast<unsigned long>(frontier.size());
        for (const auto& w : frontier) visit(w, length);
        std::vector<std::vector<uint16_t>> next;
        for (const auto& w : frontier) {
            for (int i = 0; i < rs.rank; ++i) {
                std::vector<uint16_t> sw(nroots);
                const auto& sp = rs.simple_perm[i];
                for (size_t r = 0; r < nroots; ++r) sw[r] = sp[w[r]];
                if (seen.insert(perm_fingerprint(rs, sw)).second) next.push_back(std::move(sw));
            }
        }
        frontier = std::move(next);
        ++length;
    }
    if (total != order)
        throw Error("group enumeration found " + total.get_str() + " elements, expected " +
                    order.get_str() + " (internal error)");
}

} // namespace detail

// W(t) = sum over the group of t^{length}, graded by Cayley-graph distance
// from the identity.
inline Polynomial poincare_polynomial(const RootSystem& rs, const GroupGuard& guard = {}) {
    std::vector<Integer> coeff;
    detail::bfs_group(rs, guard, [&](const std::vector<uint16_t>&, int len) {
        if (coeff.size() <= static_cast<size_t>(len)) coeff.resize(len + 1, Integer(0));
        coeff[len] += 1;
    });
    return Polynomial(std::move(coeff));
}

// Number of positive roots sent negative; equals the BFS length.
inline size_t inversion_count(const RootSystem& rs, const std::vector<uint16_t>& perm) {
    size_t inv = 0;
    for (size_t i = 0; i < rs.num_positive(); ++i)
        if (!rs.is_positive_id(perm[i])) ++inv;
    return inv;
}

template <class Visit>
inline void for_each_group_element(const RootSystem& rs, Visit&& visit,
                                   const GroupGuard& guard = {}) {
    detail::bfs_group(rs, guard, visit);
}

// ---------------------------------------------------------------------------
// Coxeter-graph type recognition.

// Bond order m(u, v) from the exact angle: cos^2 of pi/m.
inline int coxeter_bond(const RootSystem& rs, const Vec& u, const Vec& v) {
    const Scalar num = rs.ip(u, v) * rs.ip(u, v);
    const Scalar den = rs.ip(u, u) * rs.ip(v, v);
    const Scalar c2 = num / den;
    if (c2 == Scalar(0)) return 2;
    if (c2 == Scalar(Rational(1, 4))) return 3;
    if (c2 == Scalar(Rational(1, 2))) return 4;
    if (c2 == Scalar(Rational(3, 4))) return 6;
    if (c2 == Scalar(Rational(3, 8), Rational(1, 8))) return 5; // (3+sqrt5)/8
    throw UnsupportedType("bond angle outside the supported Coxeter types");
}

// Dynkin/Coxeter type of a simple system, from its Coxeter graph.
inline TypeLabel recognize_simple_system(const RootSystem& rs, const std::vector<Vec>& simples) {
    const size_t k = simples.size();
    std::vector<std::vector<std::pair<size_t, int>>> adj(k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
            const int m = coxeter_bond(rs, simples[i], simples[j]);
            if (m >= 3) {
                adj[i].push_back({j, m});
                adj[j].push_back({i, m});
            }
        }

    std::vector<SimpleType> factors;
    std::vector<bool> used(k, false);
    for (size_t start = 0; start < k; ++start) {
        if (used[start]) continue;
        std::vector<size_t> comp{start};
        used[start] = true;
        for (size_t q = 0; q < comp.size(); ++q)
            for (auto [nb, m] : adj[comp[q]])
                if (!used[nb]) {
                    used[nb] = true;
                    comp.push_back(nb);
                }
        const size_t n = comp.size();
        size_t edges = 0;
        size_t max_deg = 0, branch = comp[0];
        for (size_t v : comp) {
            edges += adj[v].size();
            if (adj[v].size() > max_deg) {
                max_deg = adj[v].size();
                branch = v;
            }
        }
        edges /= 2;
        if (edges != n - 1) throw UnsupportedType("Coxeter graph contains a cycle");

        if (n == 1) {
            factors.push_back({'A', 1, 0});
            continue;
        }
        if (max_deg <= 2) {
            // a path; read off the bond sequence from one endpoint
            size_t end = comp[0];
            for (size_t v : comp)
                if (adj[v].size() == 1) {
                    end = v;
                    break;
                }
            std::vector<int> bonds;
            size_t prev = static_cast<size_t>(-1), cur = end;
            for (size_t step = 0; step + 1 < n; ++step) {
                for (auto [nb, m] : adj[cur]) {
                    if (nb == prev) continue;
                    bonds.push_back(m);
                    prev = cur;
                    cur = nb;
                    break;
                }
            }
            std::vector<int> sorted = bonds;
            std::sort(sorted.begin(), sorted.end());
            const int big = sorted.back();
            const size_t big_count =
                static_cast<size_t>(std::count(bonds.begin(), bonds.end(), big));
            if (big == 3) {
                factors.push_back({'A', static_cast<int>(n), 0});
            } else if (big_count != 1) {
                throw UnsupportedType("path with several marked bonds is not a finite type");
            } else if (big == 4) {
                if (bonds.front() == 4 || bonds.back() == 4)
                    factors.push_back({'B', static_cast<int>(n), 0});
                else if (n == 4 && bonds[1] == 4)
                    factors.push_back({'F', 4, 0});
                else
                    throw UnsupportedType("4-bond in the interior of a long path");
            } else if (big == 5) {
                if (n == 2)
                    factors.push_back({'I', 2, 5});
                else if ((bonds.front() == 5 || bonds.back() == 5) && (n == 3 || n == 4))
                    factors.push_back({'H', static_cast<int>(n), 0});
                else
                    throw UnsupportedType("5-bond arrangement is not a finite type");
            } else if (big == 6) {
                if (n == 2)
                    factors.push_back({'G', 2, 0});
                else
                    throw UnsupportedType("6-bond in a path of length > 1");
            } else {
                factors.push_back({'I', 2, big});
            }
            continue;
        }
        if (max_deg == 3) {
            for (size_t v : comp)
                for (auto [nb, m] : adj[v])
                    if (m != 3) throw UnsupportedType("marked bond in a branched graph");
            size_t deg3 = 0;
            for (size_t v : comp)
                if (adj[v].size() == 3) ++deg3;
            if (deg3 != 1) throw UnsupportedType("graph with several branch points");
            // leg lengths from the branch vertex
            std::vector<int> legs;
            for (auto [nb, m] : adj[branch]) {
                int len = 1;
                size_t prev = branch, cur = nb;
                while (adj[cur].size() == 2) {
                    for (auto [nxt, mm] : adj[cur])
                        if (nxt != prev) {
                            prev = cur;
                            cur = nxt;
                            break;
                        }
                    ++len;
                }
                legs.push_back(len);
            }
            std::sort(legs.begin(), legs.end());
            if (legs[0] == 1 && legs[1] == 1)
                factors.push_back({'D', static_cast<int>(n), 0});
            else if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4)
                factors.push_back({'E', static_cast<int>(n), 0});
            else
                throw UnsupportedType("branched graph is not a finite type");
            continue;
        }
        throw UnsupportedType("vertex of degree > 3 in the Coxeter graph");
    }
    return canonical_label(factors);
}

// All subsets J of the simple roots whose induced sub-root-system has the
// requested Dynkin/Coxeter type.
inline std::vector<std::vector<int>> simple_subsets_of_type(const RootSystem& rs,
                                                            const TypeLabel& t) {
    const int want = t.total_rank();
    std::vector<std::vector<int>> out;
    if (want <= 0 || want > rs.rank) return out;
    std::vector<int> idx(want);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        std::vector<Vec> sub;
        for (int i : idx) sub.push_back(rs.simple[i]);
        try {
            if (recognize_simple_system(rs, sub) == t) out.push_back(idx);
        } catch (const UnsupportedType&) {
            // subset generates something outside the supported list; skip
        }
        int i = want - 1;
        while (i >= 0 && idx[i] == rs.rank - want + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < want; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

// Simple system of a (closed) subsystem given by a set of root ids with
// positivity inherited from the ambient system: alpha is simple iff its
// reflection permutes the other positive roots of the subsystem.
inline std::vector<Vec> subsystem_simple_system(const RootSystem& rs,
                                                const std::vector<size_t>& positive_ids) {
    std::unordered_set<size_t> members(positive_ids.begin(), positive_ids.end());
    std::vector<Vec> simples;
    for (size_t a : positive_ids) {
        bool simple = true;
        for (size_t b : positive_ids) {
            if (b == a) continue;
            const size_t img = rs.id_of(rs.reflect(rs.roots[a], rs.roots[b]));
            if (!rs.is_positive_id(img) || !members.count(img)) {
                simple = false;
                break;
            }
        }
        if (simple) simples.push_back(rs.roots[a]);
    }
    return simples;
}

} // namespace regionzeta
