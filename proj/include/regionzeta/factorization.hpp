#pragma once

// Orchestration of the factorization question: build a named restriction
// A(W)^X from a parabolic preset, compute its exponents, and search the base
// regions for one whose rank-generating function equals the product
// F(e_1,...,e_n) over the exponents.  Positive verdicts short-circuit on the
// first witness; negative verdicts always exhaust the bases modulo the
// antipodal pairing.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "arrangement.hpp"
#include "chambers.hpp"
#include "errors.hpp"
#include "poly.hpp"
#include "roots.hpp"
#include "scalar.hpp"

namespace regionzeta {

struct RestrictionPreset {
    enum class Expect { yes, no, skip };

    std::string name; // e.g. "E6/A3"
    SimpleType ambient{};
    std::vector<int> simple_indices; // 0-based indices into the simple roots
    std::vector<int> root_indices;   // alternative: 0-based positive-root ids
    TypeLabel expected_type;
    Expect expect = Expect::yes;
    std::string note;
};

struct NamedRestriction {
    RootSystem group;
    Arrangement ambient_arrangement;
    Flat flat;
    Restriction restriction;
    std::vector<Vec> parabolic_roots;
};

// X is the common kernel of the preset's roots; the preset must generate the
// type it claims.
inline NamedRestriction restriction_by_preset(const RestrictionPreset& preset) {
    NamedRestriction out;
    out.group = build_root_system(preset.ambient);
    out.ambient_arrangement = coxeter_arrangement(out.group);

    if (!preset.simple_indices.empty()) {
        for (int j : preset.simple_indices) {
            if (j < 0 || j >= out.group.rank)
                throw InputError(preset.name + ": simple-root index out of range");
            out.parabolic_roots.push_back(out.group.simple[j]);
        }
    } else {
        for (int j : preset.root_indices) {
            if (j < 0 || static_cast<size_t>(j) >= out.group.num_positive())
                throw InputError(preset.name + ": positive-root index out of range");
            out.parabolic_roots.push_back(out.group.positive(j));
        }
    }
    const TypeLabel got = recognize_simple_system(out.group, out.parabolic_roots);
    if (!(got == preset.expected_type))
        throw PresetTypeMismatch(preset.name + ": roots generate " + to_string(got) +
                                 ", preset declares " + to_string(preset.expected_type));

    std::vector<size_t> hyperplanes;
    for (const Vec& r : out.parabolic_roots) {
        const size_t at =
            out.ambient_arrangement.index_of(canonicalize_normal(out.group.hyperplane_functional(r)));
        if (at == Arrangement::npos) throw Error("parabolic root missing from arrangement (internal error)");
        hyperplanes.push_back(at);
    }
    out.flat = flat_from_hyperplanes(out.ambient_arrangement, hyperplanes);
    out.restriction = restrict_with_basis(out.ambient_arrangement, out.flat);
    return out;
}

struct FactorizationReport {
    std::string name;
    size_t hyperplanes = 0;
    int rank = 0;
    std::vector<long> exps;
    size_t chambers = 0;
    bool witness_found = false;
    std::string witness_signs;       // empty when no witness exists
    size_t bases_tested = 0;         // antipodal representatives examined
    std::vector<Polynomial> distinct_zetas; // populated on a negative verdict
    long long millis = 0;
};

struct SearchOptions {
    ChamberGuards chamber_guards{};
    LatticeGuards lattice_guards{};
    unsigned threads = 1;
    // restrict the search to these chamber indices (candidate acceleration);
    // empty means all bases modulo antipodes
    std::vector<size_t> base_whitelist;
};

inline FactorizationReport search_factoring_base(const Arrangement& a, const ChamberSet& cs,
                                                 const Exponents& exps,
                                                 const SearchOptions& opt = {}) {
    const auto start = std::chrono::steady_clock::now();
    FactorizationReport rep;
    rep.hyperplanes = a.size();
    rep.exps = exps.exps;
    rep.rank = static_cast<int>(exps.exps.size());
    rep.chambers = cs.size();

    // one representative per antipodal pair: zeta(B) = zeta(-B)
    std::vector<size_t> bases;
    if (!opt.base_whitelist.empty()) {
        std::set<size_t> dedup;
        for (size_t i : opt.base_whitelist) {
            const size_t anti = cs.antipode(i);
            dedup.insert(std::min(i, anti));
        }
        bases.assign(dedup.begin(), dedup.end());
    } else {
        for (size_t i = 0; i < cs.size(); ++i) {
            const SignVec comp = cs.chambers[i].signs.complement();
            if (!comp.lex_less(cs.chambers[i].signs)) bases.push_back(i);
        }
    }
    rep.bases_tested = bases.size();

    const Polynomial target = f_product(exps.exps);
    const unsigned nthreads = std::max(1u, opt.threads);

    std::atomic<size_t> best{Arrangement::npos};
    std::vector<std::set<Polynomial>> zeta_pools(nthreads);

    auto worker = [&](unsigned tid) {
        std::vector<Integer> coeff(a.size() + 1);
        for (size_t at = tid; at < bases.size(); at += nthreads) {
            const size_t base = bases[at];
            if (base >= best.load(std::memory_order_relaxed)) {
                if (nthreads == 1) break; // bases ascend on the serial path
                continue;
            }
            std::fill(coeff.begin(), coeff.end(), Integer(0));
            const SignVec& b = cs.chambers[base].signs;
            for (const Chamber& c : cs.chambers) coeff[b.hamming(c.signs)] += 1;
            Polynomial z{std::vector<Integer>(coeff)};
            if (z == target) {
                size_t cur = best.load();
                while (base < cur && !best.compare_exchange_weak(cur, base)) {
                }
                if (nthreads == 1) break;
            } else {
                zeta_pools[tid].insert(std::move(z));
            }
        }
    };

    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    const size_t witness = best.load();
    if (witness != Arrangement::npos) {
        rep.witness_found = true;
        rep.witness_signs = cs.chambers[witness].signs.str();
    } else {
        std::set<Polynomial> all;
        for (auto& pool : zeta_pools) all.insert(pool.begin(), pool.end());
        rep.distinct_zetas.assign(all.begin(), all.end());
    }
    rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    return rep;
}

inline FactorizationReport search_factoring_base(const Arrangement& a,
                                                 const SearchOptions& opt = {}) {
    const ChamberSet cs = enumerate_chambers(a, opt.chamber_guards);
    const Exponents exps = exponents(a, opt.lattice_guards);
    return search_factoring_base(a, cs, exps, opt);
}

// ---------------------------------------------------------------------------
// Candidate bases from the restricted root system.
//
// For each subset K of the simple roots generating the same type as J0 and
// lying in the same orbit of root subsets, carry the fundamental face of K
// into X by a group element mapping K onto J0.  The resulting chambers of
// A^X hit every orbit of the restricted Weyl group action, so a witness
// exists iff one exists among them.  The exact orbit split between
// conjugacy-inequivalent subsets of equal type is delicate, so callers use
// this as an accelerator and never as sole evidence for a negative verdict.

inline std::vector<size_t> candidate_base_chambers(const NamedRestriction& nr,
                                                   const ChamberSet& cs,
                                                   const GroupGuard& guard = {}) {
    const RootSystem& rs = nr.group;
    const Integer order = group_order(rs.type);
    if (order > guard.max_order)
        throw GroupTooLarge("group guard: |W| = " + order.get_str() + " exceeds " +
                            guard.max_order.get_str());

    std::vector<int> j0;
    for (const Vec& r : nr.parabolic_roots) {
        const size_t id = rs.id_of(r);
        bool is_simple = false;
        for (int i = 0; i < rs.rank; ++i)
            if (rs.id_of(rs.simple[i]) == id) {
                j0.push_back(i);
                is_simple = true;
                break;
            }
        if (!is_simple)
            throw InputError("candidate bases require a preset pinned to simple roots");
    }

    const TypeLabel t = recognize_simple_system(rs, nr.parabolic_roots);
    const auto subsets = simple_subsets_of_type(rs, t);

    auto state_of = [&](const std::vector<int>& simple_idx) {
        std::vector<uint16_t> ids;
        for (int i : simple_idx) ids.push_back(static_cast<uint16_t>(rs.id_of(rs.simple[i])));
        std::sort(ids.begin(), ids.end());
        return ids;
    };
    auto key_of = [](const std::vector<uint16_t>& ids) {
        std::string k;
        for (uint16_t v : ids) {
            k.push_back(static_cast<char>(v & 0xff));
            k.push_back(static_cast<char>(v >> 8));
        }
        return k;
    };

    // BFS over the orbit of the root subset J0, recording one generator word
    // per visited subset.
    struct Origin {
        std::string parent;
        int gen = -1;
    };
    std::unordered_map<std::string, Origin> visited;
    const std::vector<uint16_t> start = state_of(j0);
    visited.emplace(key_of(start), Origin{});
    std::vector<std::vector<uint16_t>> frontier{start};
    const size_t state_cap = 20000000;
    while (!frontier.empty()) {
        std::vector<std::vector<uint16_t>> next;
        for (const auto& st : frontier) {
            const std::string pk = key_of(st);
            for (int g = 0; g < rs.rank; ++g) {
                std::vector<uint16_t> img(st.size());
                for (size_t i = 0; i < st.size(); ++i) img[i] = rs.simple_perm[g][st[i]];
                std::sort(img.begin(), img.end());
                auto [it, inserted] = visited.emplace(key_of(img), Origin{pk, g});
                if (inserted) {
                    next.push_back(std::move(img));
                    if (visited.size() > state_cap)
                        throw GroupTooLarge("subset orbit exceeded the state cap");
                }
            }
        }
        frontier = std::move(next);
    }

    std::set<size_t> out;
    for (const auto& k_subset : subsets) {
        const auto it = visited.find(key_of(state_of(k_subset)));
        if (it == visited.end()) continue; // different orbit: belongs to a sibling restriction

        // word from J0 to K, reconstructed leaf-to-root
        std::vector<int> word;
        std::string cur = key_of(state_of(k_subset));
        while (true) {
            const Origin& o = visited.at(cur);
            if (o.gen < 0) break;
            word.push_back(o.gen);
            cur = o.parent;
        }
        std::reverse(word.begin(), word.end());

        // K = g(J0) with g the word applied left to right; the map carrying
        // the face of K into X is g^{-1}, i.e. the reversed word as a matrix
        // product.
        Mat carry = identity_matrix(rs.dim);
        for (int g : word) carry = mat_mul(carry, rs.reflection_matrix(rs.simple[g]));

        const Vec face_point = fundamental_face_point(rs, k_subset);
        const Vec y = mat_vec(carry, face_point);
        const auto local = nr.restriction.to_local(y);
        if (!local) throw Error("carried face point left the flat (internal error)");

        SignVec s(nr.restriction.arr.size());
        for (size_t i = 0; i < nr.restriction.arr.size(); ++i) {
            const int sg = dot(nr.restriction.arr.normals[i], *local).sign();
            if (sg == 0) throw Error("carried face point lies on a restricted hyperplane (internal error)");
            s.set_minus(i, sg < 0);
        }
        const size_t at = cs.find(s);
        if (at == Arrangement::npos) throw Error("candidate base is not a chamber (internal error)");
        out.insert(at);
    }
    return std::vector<size_t>(out.begin(), out.end());
}

// ---------------------------------------------------------------------------
// Preset corpus file: tab- or whitespace-separated columns
//   name ambient j0 type expect note...
// with j0 of the form `s:1,3,4` (1-based simple-root indices) or
// `r:2,7` (1-based positive-root ids); `expect` one of yes/no/skip.

inline std::vector<RestrictionPreset> parse_corpus(std::istream& in,
                                                   const std::string& where = "<corpus>") {
    std::vector<RestrictionPreset> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string name, ambient, j0, type, expect;
        if (!(ls >> name)) continue;
        if (!(ls >> ambient >> j0 >> type >> expect))
            throw ParseError(where + ":" + std::to_string(lineno) + ": expected 5 columns");
        RestrictionPreset p;
        p.name = name;
        const TypeLabel amb = parse_type_label(ambient);
        if (amb.factors.size() != 1)
            throw ParseError(where + ":" + std::to_string(lineno) + ": ambient must be irreducible");
        p.ambient = amb.factors[0];
        p.expected_type = parse_type_label(type);

        if (j0.size() < 2 || j0[1] != ':' || (j0[0] != 's' && j0[0] != 'r'))
            throw ParseError(where + ":" + std::to_string(lineno) + ": bad index set '" + j0 + "'");
        std::vector<int>* dst = (j0[0] == 's') ? &p.simple_indices : &p.root_indices;
        std::istringstream is(j0.substr(2));
        std::string tok;
        while (std::getline(is, tok, ',')) {
            try {
                dst->push_back(std::stoi(tok) - 1);
            } catch (...) {
                throw ParseError(where + ":" + std::to_string(lineno) + ": bad index '" + tok + "'");
            }
        }

        if (expect == "yes")
            p.expect = RestrictionPreset::Expect::yes;
        else if (expect == "no")
            p.expect = RestrictionPreset::Expect::no;
        else if (expect == "skip")
            p.expect = RestrictionPreset::Expect::skip;
        else
            throw ParseError(where + ":" + std::to_string(lineno) + ": bad verdict '" + expect + "'");

        std::string rest;
        std::getline(ls, rest);
        const size_t first = rest.find_first_not_of(" \t");
        p.note = (first == std::string::npos) ? std::string() : rest.substr(first);
        out.push_back(std::move(p));
    }
    return out;
}

inline std::vector<RestrictionPreset> load_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open corpus file '" + path + "'");
    return parse_corpus(in, path);
}

struct TableRow {
    RestrictionPreset preset;
    bool skipped = false;
    std::optional<FactorizationReport> report;
    bool mismatch = false;
    std::string error;
};

// Root systems and their arrangements are shared across rows with the same
// ambient group.
inline std::vector<TableRow> run_table(const std::vector<RestrictionPreset>& corpus,
                                       const SearchOptions& opt = {}) {
    std::vector<TableRow> rows;
    for (const RestrictionPreset& p : corpus) {
        TableRow row;
        row.preset = p;
        if (p.expect == RestrictionPreset::Expect::skip) {
            row.skipped = true;
            rows.push_back(std::move(row));
            continue;
        }
        try {
            NamedRestriction nr = restriction_by_preset(p);
            FactorizationReport rep = search_factoring_base(nr.restriction.arr, opt);
            rep.name = p.name;
            row.mismatch = rep.witness_found != (p.expect == RestrictionPreset::Expect::yes);
            row.report = std::move(rep);
        } catch (const GuardExceeded&) {
            throw;
        } catch (const Error& e) {
            row.error = e.what();
            row.mismatch = true;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace regionzeta
