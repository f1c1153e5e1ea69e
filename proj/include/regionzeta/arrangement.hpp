#pragma once

// Central hyperplane arrangements over an exact ordered field: canonical
// construction, localization and restriction at a flat, the intersection
// lattice with Mobius values, the characteristic polynomial, and exponents.

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "scalar.hpp"

namespace regionzeta {

enum class Field { rational, quadratic };

inline std::string to_string(Field f) { return f == Field::rational ? "Q" : "Qr5"; }

struct Arrangement {
    int dim = 0;
    Field field = Field::rational;
    std::vector<Vec> normals; // canonical forms, lexicographically sorted, distinct

    size_t size() const { return normals.size(); }

    // Canonicalize, deduplicate proportional normals, sort.  The resulting
    // hyperplane order is the reference order for every sign vector.
    static Arrangement from_normals(int dim, const std::vector<Vec>& raw) {
        Arrangement a;
        a.dim = dim;
        std::vector<Vec> canon;
        canon.reserve(raw.size());
        for (const Vec& v : raw) {
            if (static_cast<int>(v.size()) != dim)
                throw InputError("normal of wrong dimension");
            canon.push_back(canonicalize_normal(v));
        }
        std::sort(canon.begin(), canon.end(),
                  [](const Vec& u, const Vec& v) { return compare_lex(u, v) < 0; });
        canon.erase(std::unique(canon.begin(), canon.end(),
                                [](const Vec& u, const Vec& v) { return compare_lex(u, v) == 0; }),
                    canon.end());
        a.normals = std::move(canon);
        a.field = Field::rational;
        for (const Vec& v : a.normals)
            if (is_quadratic(v)) a.field = Field::quadratic;
        return a;
    }

    // Index of a canonical normal, or npos.
    size_t index_of(const Vec& canonical) const {
        auto it = std::lower_bound(normals.begin(), normals.end(), canonical,
                                   [](const Vec& u, const Vec& v) { return compare_lex(u, v) < 0; });
        if (it == normals.end() || compare_lex(*it, canonical) != 0) return npos;
        return static_cast<size_t>(it - normals.begin());
    }

    static constexpr size_t npos = static_cast<size_t>(-1);
};

// A flat X of the intersection lattice, represented by the RREF basis of
// X-perp (the span of the normals containing X).  Two flats are equal iff
// their representations are equal.
struct Flat {
    Mat span;                       // RREF rows spanning X-perp
    std::vector<size_t> pivots;     // pivot columns of span
    int dim = 0;                    // dim X = ambient - rank
    std::vector<size_t> hyperplanes; // sorted indices of hyperplanes containing X

    int rank() const { return static_cast<int>(span.size()); }
    std::string key() const { return mat_key(span); }
};

inline Flat flat_from_normal_span(const Arrangement& a, const std::vector<Vec>& spanning) {
    Flat x;
    x.span = spanning;
    x.pivots = rref(x.span);
    x.dim = a.dim - static_cast<int>(x.span.size());
    for (size_t i = 0; i < a.size(); ++i)
        if (in_rowspace(x.span, x.pivots, a.normals[i])) x.hyperplanes.push_back(i);
    return x;
}

inline Flat flat_from_hyperplanes(const Arrangement& a, const std::vector<size_t>& idxs) {
    std::vector<Vec> rows;
    for (size_t i : idxs) {
        if (i >= a.size()) throw FlatNotInLattice("hyperplane index out of range");
        rows.push_back(a.normals[i]);
    }
    return flat_from_normal_span(a, rows);
}

inline Flat ambient_flat(const Arrangement& a) { return flat_from_hyperplanes(a, {}); }

inline Flat center_flat(const Arrangement& a) {
    std::vector<size_t> all(a.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = i;
    return flat_from_hyperplanes(a, all);
}

// A_X: the hyperplanes containing X, in the same ambient space.
inline Arrangement localize(const Arrangement& a, const Flat& x) {
    std::vector<Vec> kept;
    for (size_t i : x.hyperplanes) kept.push_back(a.normals[i]);
    if (rank_of(kept) != static_cast<size_t>(x.rank()))
        throw FlatNotInLattice("flat is not an intersection of arrangement hyperplanes");
    return Arrangement::from_normals(a.dim, kept);
}

// A^X together with the basis of X used for its coordinates, so points of X
// can be moved between ambient and restricted coordinates.
struct Restriction {
    Arrangement arr;
    std::vector<Vec> basis; // basis of X, ambient coordinates, deterministic

    Vec to_ambient(const Vec& local) const {
        Vec out(basis.empty() ? 0 : basis[0].size(), Scalar(0));
        for (size_t j = 0; j < basis.size(); ++j)
            for (size_t i = 0; i < out.size(); ++i) out[i] += local[j] * basis[j][i];
        return out;
    }

    std::optional<Vec> to_local(const Vec& ambient) const {
        return solve_columns(basis, ambient);
    }
};

inline Restriction restrict_with_basis(const Arrangement& a, const Flat& x) {
    if (x.dim == 0) throw FlatNotInLattice("cannot restrict to the origin");
    if (rank_of([&] {
            std::vector<Vec> rows;
            for (size_t i : x.hyperplanes) rows.push_back(a.normals[i]);
            return rows;
        }()) != static_cast<size_t>(x.rank()))
        throw FlatNotInLattice("flat is not an intersection of arrangement hyperplanes");

    Restriction r;
    r.basis = kernel_basis(x.span, a.dim);
    std::vector<bool> contains(a.size(), false);
    for (size_t i : x.hyperplanes) contains[i] = true;
    std::vector<Vec> induced;
    for (size_t i = 0; i < a.size(); ++i) {
        if (contains[i]) continue;
        Vec u(r.basis.size(), Scalar(0));
        for (size_t j = 0; j < r.basis.size(); ++j) u[j] = dot(a.normals[i], r.basis[j]);
        induced.push_back(std::move(u)); // nonzero: H does not contain X
    }
    r.arr = Arrangement::from_normals(x.dim, induced);
    return r;
}

inline Arrangement restrict_to(const Arrangement& a, const Flat& x) {
    return restrict_with_basis(a, x).arr;
}

// Coordinates on the span of the normals; chamber counts and sign data are
// unchanged and the hyperplane order is preserved (normals are transformed
// in place, not re-sorted).
struct Essentialization {
    std::vector<Vec> normals; // index-aligned with the source arrangement
    std::vector<Vec> basis;   // rows spanning the normal space, ambient coords
    int rank = 0;

    Vec to_ambient(const Vec& local) const {
        Vec out(basis.empty() ? 0 : basis[0].size(), Scalar(0));
        for (size_t j = 0; j < basis.size(); ++j)
            for (size_t i = 0; i < out.size(); ++i) out[i] += local[j] * basis[j][i];
        return out;
    }
};

inline Essentialization essentialize(const Arrangement& a) {
    Essentialization e;
    Mat rows = a.normals;
    rref(rows);
    e.basis = rows;
    e.rank = static_cast<int>(rows.size());
    e.normals.reserve(a.size());
    for (const Vec& n : a.normals) {
        Vec u(e.rank, Scalar(0));
        for (int j = 0; j < e.rank; ++j) u[j] = dot(n, e.basis[j]);
        e.normals.push_back(std::move(u));
    }
    return e;
}

// ---------------------------------------------------------------------------
// Intersection lattice.

struct LatticeGuards {
    int max_rank = 6;
    size_t max_hyperplanes = 70;
    size_t max_flats = 500000;
};

struct FlatLattice {
    std::vector<Flat> flats;     // sorted by (rank, canonical key); flats[0] = V
    std::vector<Integer> mobius; // mu(V, X) per flat
};

inline FlatLattice intersection_lattice(const Arrangement& a, const LatticeGuards& g = {}) {
    if (a.size() > g.max_hyperplanes)
        throw LatticeTooLarge("lattice guard: arrangement has " + std::to_string(a.size()) +
                              " hyperplanes, max " + std::to_string(g.max_hyperplanes));
    {
        Mat rows = a.normals;
        if (rref(rows).size() > static_cast<size_t>(g.max_rank))
            throw LatticeTooLarge("lattice guard: rank exceeds " + std::to_string(g.max_rank));
    }

    std::map<std::string, Flat> seen;
    Flat top = ambient_flat(a);
    seen.emplace(top.key(), top);
    std::vector<Flat> frontier{top};
    while (!frontier.empty()) {
        std::vector<Flat> next;
        for (const Flat& f : frontier) {
            std::vector<bool> contains(a.size(), false);
            for (size_t i : f.hyperplanes) contains[i] = true;
            for (size_t h = 0; h < a.size(); ++h) {
                if (contains[h]) continue;
                Mat rows = f.span;
                rows.push_back(a.normals[h]);
                std::vector<size_t> pivots = rref(rows);
                const std::string key = mat_key(rows);
                if (seen.count(key)) continue; // dedup before the membership scan
                Flat cand;
                cand.span = std::move(rows);
                cand.pivots = std::move(pivots);
                cand.dim = a.dim - static_cast<int>(cand.span.size());
                for (size_t i = 0; i < a.size(); ++i)
                    if (in_rowspace(cand.span, cand.pivots, a.normals[i]))
                        cand.hyperplanes.push_back(i);
                auto [it, inserted] = seen.emplace(key, std::move(cand));
                if (inserted) {
                    next.push_back(it->second);
                    if (seen.size() > g.max_flats)
                        throw LatticeTooLarge("lattice guard: more than " +
                                              std::to_string(g.max_flats) + " flats");
                }
            }
        }
        frontier = std::move(next);
    }

    FlatLattice lat;
    for (auto& [key, f] : seen) lat.flats.push_back(std::move(f));
    std::stable_sort(lat.flats.begin(), lat.flats.end(),
                     [](const Flat& l, const Flat& r) { return l.rank() < r.rank(); });

    // mu(V, X) = -sum over Z strictly above X in the containment order;
    // Z <= X in L(A) is exactly hyperplanes(Z) subset-of hyperplanes(X).
    const size_t n = lat.flats.size();
    lat.mobius.assign(n, Integer(0));
    std::vector<std::vector<bool>> member(n, std::vector<bool>(a.size(), false));
    for (size_t i = 0; i < n; ++i)
        for (size_t h : lat.flats[i].hyperplanes) member[i][h] = true;
    auto below = [&](size_t z, size_t x) {
        for (size_t h : lat.flats[z].hyperplanes)
            if (!member[x][h]) return false;
        return true;
    };
    for (size_t x = 0; x < n; ++x) {
        Integer acc(0);
        for (size_t z = 0; z < n; ++z) {
            if (z == x || lat.flats[z].rank() >= lat.flats[x].rank()) continue;
            if (below(z, x)) acc += lat.mobius[z];
        }
        lat.mobius[x] = (x == 0) ? Integer(1) : -acc;
    }
    return lat;
}

// chi(A, t) = sum_X mu(V, X) t^{dim X}
inline Polynomial characteristic_polynomial(const Arrangement& a, const LatticeGuards& g = {}) {
    const FlatLattice lat = intersection_lattice(a, g);
    std::vector<Integer> c(static_cast<size_t>(a.dim) + 1, Integer(0));
    for (size_t i = 0; i < lat.flats.size(); ++i) c[lat.flats[i].dim] += lat.mobius[i];
    return Polynomial(std::move(c));
}

struct Exponents {
    std::vector<long> exps; // nonzero integer roots of chi, ascending, with multiplicity
    int nonessential = 0;   // multiplicity of the root 0 = dim of the center

    Integer chamber_count() const {
        Integer c(1);
        for (long e : exps) c *= Integer(e + 1);
        return c;
    }
};

// Roots of the characteristic polynomial.  Restrictions of reflection
// arrangements are free, so chi splits over the integers for everything in
// scope; NotIntegerSplit flags an input outside that world.
inline Exponents exponents(const Arrangement& a, const LatticeGuards& g = {}) {
    Polynomial chi = characteristic_polynomial(a, g);
    Exponents out;
    for (long e = 0; e <= static_cast<long>(a.size()); ++e) {
        for (;;) {
            auto q = chi.divide_linear(Integer(e));
            if (!q) break;
            chi = *q;
            if (e == 0)
                ++out.nonessential;
            else
                out.exps.push_back(e);
            if (chi.degree() <= 0) break;
        }
        if (chi.degree() <= 0) break;
    }
    if (chi != Polynomial::one())
        throw NotIntegerSplit("characteristic polynomial does not split over the integers: " +
                              chi.pretty());
    long total = 0;
    for (long e : out.exps) total += e;
    if (total != static_cast<long>(a.size()))
        throw Error("exponent sum mismatch (internal error)");
    return out;
}

// ---------------------------------------------------------------------------
// File format: line 1 `dim n field {Q|Qr5}`, then one normal per line in
// scalar syntax, whitespace separated.  Comments start with '#'.

inline std::string write_arrangement(const Arrangement& a) {
    std::string out = "dim " + std::to_string(a.dim) + " field " + to_string(a.field) + "\n";
    for (const Vec& n : a.normals) out += to_string(n) + "\n";
    return out;
}

inline Arrangement read_arrangement(std::istream& in, const std::string& name = "<stream>") {
    std::string line;
    size_t lineno = 0;
    auto next_content_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++lineno;
            const size_t hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            size_t a = line.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue;
            size_t b = line.find_last_not_of(" \t\r");
            out = line.substr(a, b - a + 1);
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_content_line(header)) throw ParseError(name + ": missing header line");
    std::istringstream hs(header);
    std::string kw1, kw2, fieldname;
    int dim = 0;
    if (!(hs >> kw1 >> dim >> kw2 >> fieldname) || kw1 != "dim" || kw2 != "field" || dim < 0)
        throw ParseError(name + ":" + std::to_string(lineno) + ": bad header '" + header + "'");
    Field field;
    if (fieldname == "Q")
        field = Field::rational;
    else if (fieldname == "Qr5")
        field = Field::quadratic;
    else
        throw ParseError(name + ":" + std::to_string(lineno) + ": unknown field '" + fieldname + "'");

    std::vector<Vec> normals;
    std::string content;
    while (next_content_line(content)) {
        std::istringstream ls(content);
        Vec v;
        std::string tok;
        while (ls >> tok) {
            try {
                v.push_back(parse_scalar(tok));
            } catch (const ParseError& e) {
                throw ParseError(name + ":" + std::to_string(lineno) + ": " + e.what());
            }
        }
        if (static_cast<int>(v.size()) != dim)
            throw ParseError(name + ":" + std::to_string(lineno) + ": expected " +
                             std::to_string(dim) + " coordinates, got " + std::to_string(v.size()));
        if (is_zero(v)) throw ZeroVector();
        if (field == Field::rational && is_quadratic(v))
            throw MixedField(name + ":" + std::to_string(lineno) +
                             ": quadratic coordinate in a file declared over Q");
        normals.push_back(std::move(v));
    }
    Arrangement a = Arrangement::from_normals(dim, normals);
    if (field == Field::quadratic) a.field = Field::quadratic;
    return a;
}

inline Arrangement read_arrangement_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open arrangement file '" + path + "'");
    return read_arrangement(in, path);
}

} // namespace regionzeta
