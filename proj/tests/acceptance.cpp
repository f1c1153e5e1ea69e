// Acceptance suite: one check per shipped guarantee, exact arithmetic
// throughout, a PASS/FAIL line per item.  Returns nonzero if anything fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "regionzeta.hpp"

using namespace regionzeta;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

Vec point_of(const dpk::Code& x) {
    Vec p;
    for (int v : x) p.push_back(Scalar(v));
    return p;
}

// ---------------------------------------------------------------------------

// For the reflection arrangement of each listed group, the rank-generating
// function from the dominant base, the length generating function of the
// group, and the exponent product agree exactly.
void criterion_solomon() {
    const char* groups[] = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "H3", "I2(5)", "I2(6)"};
    for (const char* label : groups) {
        const RootSystem rs = build_root_system(label);
        const Arrangement arr = coxeter_arrangement(rs);
        const ChamberSet cs = enumerate_chambers(arr);
        const Polynomial z = zeta(cs, cs.locate(dominant_point(rs)));
        const Polynomial w = poincare_polynomial(rs);
        const Polynomial f = f_product(exponents(arr).exps);
        require(z == w, std::string(label) + ": zeta(dominant) != Poincare polynomial");
        require(w == f, std::string(label) + ": Poincare polynomial != exponent product");
    }
}

// Closed form of the family rank-generating function across the whole
// parameter range, against brute-force code summation.
void criterion_family_closed_form() {
    for (int p = 2; p <= 7; ++p)
        for (int k = 0; k <= p; ++k) {
            const dpk::Params q{p, k};
            const Polynomial brute = dpk::zeta_bruteforce(q);
            const Polynomial closed = dpk::zeta_closed(q);
            std::vector<long> exps;
            for (int e = 1; e <= 2 * p - 3; e += 2) exps.push_back(e);
            exps.push_back(p + k - 1);
            require(brute == closed, q.name() + ": brute force != closed form");
            require(closed == f_product(exps), q.name() + ": closed form != exponent product");
        }
}

// Each coordinate slice of the code set sums to a shifted smaller-family
// zeta, and the 2p slices partition the whole.
void criterion_slices() {
    for (int p = 3; p <= 5; ++p)
        for (int k = 0; k <= p; ++k) {
            const dpk::Params q{p, k};
            Polynomial total;
            for (int i = 1; i <= p; ++i)
                for (int sgn : {+1, -1}) total += dpk::slice_sum(q, i, sgn); // asserts internally
            require(total == dpk::zeta_bruteforce(q), q.name() + ": slices do not partition zeta");
        }
}

// The two-factor combination identity over the stated parameter rectangle.
void criterion_delta_identity() {
    for (int p = 3; p <= 8; ++p)
        for (int k = 0; k <= p; ++k)
            require(dpk::delta(p, k) == f_product({p + k - 1, 2 * p - 3}),
                    "delta(" + std::to_string(p) + "," + std::to_string(k) + ") mismatch");
}

// Codes against geometry: counts, ranks as separating sets, wall rules as
// chamber adjacency.
void criterion_family_geometry() {
    for (int p = 1; p <= 4; ++p)
        for (int k = 0; k <= p; ++k) {
            const dpk::Params q{p, k};
            const Arrangement arr = dpk::build_arrangement(q);
            const ChamberSet cs = enumerate_chambers(arr);
            const auto all = dpk::codes(q);
            require(Integer(static_cast<unsigned long>(cs.size())) == dpk::code_count(q),
                    q.name() + ": chamber count != code-count formula");
            require(cs.size() == all.size(), q.name() + ": chamber count != code count");

            const size_t base = cs.locate(point_of(dpk::base_code(q)));
            for (const dpk::Code& x : all) {
                const size_t at = cs.locate(point_of(x));
                require(dpk::code_rank(q, x) == separating_set(cs, base, at).size(),
                        q.name() + ": code rank != separating-set size");
                const auto geo = walls(cs, at);
                const auto rules = dpk::neighbors(q, x);
                require(geo.size() == rules.size(), q.name() + ": wall count mismatch");
                for (const auto& [w, y] : rules) {
                    const size_t idx = arr.index_of(canonicalize_normal(w.normal(q.p)));
                    require(idx != Arrangement::npos, q.name() + ": wall normal missing");
                    require(std::find(geo.begin(), geo.end(), idx) != geo.end(),
                            q.name() + ": rule wall is not a geometric wall");
                }
            }
        }
}

RestrictionPreset make_preset(const std::string& name, const std::string& ambient,
                              std::vector<int> j0_one_based, const std::string& type) {
    RestrictionPreset p;
    p.name = name;
    p.ambient = parse_type_label(ambient).factors[0];
    for (int j : j0_one_based) p.simple_indices.push_back(j - 1);
    p.expected_type = parse_type_label(type);
    return p;
}

// The five desk-scale positive verdicts among exceptional restrictions.
void criterion_exceptional_positives() {
    const std::vector<RestrictionPreset> presets = {
        make_preset("E6/A3", "E6", {1, 3, 4}, "A3"),
        make_preset("E6/A1A2", "E6", {2, 5, 6}, "A1A2"),
        make_preset("E7/A4", "E7", {4, 5, 6, 7}, "A4"),
        make_preset("E7/D4", "E7", {2, 3, 4, 5}, "D4"),
        make_preset("E7/A2A2", "E7", {1, 3, 6, 7}, "A2A2"),
    };
    for (const RestrictionPreset& p : presets) {
        const NamedRestriction nr = restriction_by_preset(p);
        const FactorizationReport rep = search_factoring_base(nr.restriction.arr);
        require(rep.witness_found, p.name + ": expected a factoring base, found none");
        long sum = 0;
        for (long e : rep.exps) sum += e;
        require(sum == static_cast<long>(rep.hyperplanes), p.name + ": exponent sum != |A|");
    }
}

// The two rank-3 negatives: exhaustive search modulo antipodes, no witness.
void criterion_exceptional_negatives() {
    const std::vector<RestrictionPreset> presets = {
        make_preset("E8/A2A3", "E8", {1, 3, 5, 6, 7}, "A2A3"),
        make_preset("E8/A1A4", "E8", {2, 5, 6, 7, 8}, "A1A4"),
    };
    for (const RestrictionPreset& p : presets) {
        const NamedRestriction nr = restriction_by_preset(p);
        const ChamberSet cs = enumerate_chambers(nr.restriction.arr);
        const Exponents exps = exponents(nr.restriction.arr);
        const FactorizationReport rep = search_factoring_base(nr.restriction.arr, cs, exps);
        require(!rep.witness_found, p.name + ": unexpected factoring base " + rep.witness_signs);
        require(rep.bases_tested == (cs.size() + 1) / 2,
                p.name + ": search did not exhaust the antipodal representatives");
    }
    // the first negative is the classical 17-plane simplicial arrangement
    const NamedRestriction a417 = restriction_by_preset(presets[0]);
    require(a417.restriction.arr.size() == 17, "E8/A2A3 should have 17 hyperplanes");
}

// Every localization of a small reflection arrangement factors from the base
// chamber containing the dominant one.
void criterion_localizations() {
    for (const char* label : {"A3", "B3", "D4"}) {
        const RootSystem rs = build_root_system(label);
        const Arrangement arr = coxeter_arrangement(rs);
        const Vec q = dominant_point(rs);
        const FlatLattice lat = intersection_lattice(arr);
        for (const Flat& x : lat.flats) {
            const Arrangement local = localize(arr, x);
            const ChamberSet cs = enumerate_chambers(local);
            SignVec base(local.size());
            for (size_t i = 0; i < local.size(); ++i)
                base.set_minus(i, dot(local.normals[i], q).sign() < 0);
            const Polynomial z = zeta(cs, base);
            require(z == f_product(exponents(local).exps),
                    std::string(label) + ": localization zeta does not factor");
        }
    }
}

// Randomized structural battery; every check exact.
void criterion_structural_properties() {
    std::mt19937 rng(1234567);
    std::uniform_int_distribution<int> coord(-3, 3);
    std::uniform_int_distribution<int> nh(1, 7);
    std::uniform_int_distribution<int> nd(2, 4);
    size_t cases = 0;
    while (cases < 220) {
        const int dim = nd(rng);
        std::vector<Vec> normals;
        const int want = nh(rng);
        for (int i = 0; i < want; ++i) {
            Vec n(dim, Scalar(0));
            bool nz = false;
            for (int j = 0; j < dim; ++j) {
                const int v = coord(rng);
                nz = nz || v != 0;
                n[j] = Scalar(v);
            }
            if (nz) normals.push_back(std::move(n));
        }
        if (normals.empty()) continue;

        Arrangement a = Arrangement::from_normals(dim, normals);
        std::shuffle(normals.begin(), normals.end(), rng);
        require(Arrangement::from_normals(dim, normals).normals == a.normals,
                "canonical order depends on input order");

        const ChamberSet cs = enumerate_chambers(a);
        require(abs(characteristic_polynomial(a)(Integer(-1))) ==
                    Integer(static_cast<unsigned long>(cs.size())),
                "Zaslavsky count mismatch");

        std::uniform_int_distribution<size_t> pick(0, cs.size() - 1);
        const size_t b = pick(rng);
        const Polynomial z = zeta(cs, b);
        require(z.palindromic(), "zeta not palindromic");
        require(z.coeff(0) == 1, "zeta constant term != 1");
        require(z(1) == Integer(static_cast<unsigned long>(cs.size())), "zeta(1) != chamber count");
        require(z.coeff(1) == Integer(static_cast<unsigned long>(walls(cs, b).size())),
                "t-coefficient != wall count");
        require(zeta(cs, cs.antipode(b)) == z, "zeta changes under antipodal base");

        // restriction is independent of how the flat's hyperplanes are listed
        if (a.size() >= 2) {
            Flat x = flat_from_hyperplanes(a, {0});
            Flat x2 = flat_from_hyperplanes(a, {0, 0});
            require(restrict_to(a, x).normals == restrict_to(a, x2).normals,
                    "restriction depends on flat presentation");
        }
        ++cases;
    }
}

// Restrictions of the infinite classical families reproduce the same type
// one rank down, by an explicit change of basis.
void criterion_classical_self_similarity() {
    for (int n = 2; n <= 5; ++n) {
        const Arrangement big = coxeter_arrangement(build_root_system("A" + std::to_string(n)));
        const Arrangement small =
            coxeter_arrangement(build_root_system("A" + std::to_string(n - 1)));
        for (size_t h = 0; h < big.size(); ++h) {
            const Arrangement r = restrict_to(big, flat_from_hyperplanes(big, {h}));
            require(find_linear_isomorphism(r, small).has_value(),
                    "A" + std::to_string(n) + " restriction " + std::to_string(h) +
                        " is not A" + std::to_string(n - 1));
        }
    }
    for (int n = 2; n <= 4; ++n) {
        const Arrangement big = coxeter_arrangement(build_root_system("B" + std::to_string(n)));
        const Arrangement small =
            n == 2 ? coxeter_arrangement(build_root_system("A1"))
                   : coxeter_arrangement(build_root_system("B" + std::to_string(n - 1)));
        for (size_t h = 0; h < big.size(); ++h) {
            const Arrangement r = restrict_to(big, flat_from_hyperplanes(big, {h}));
            require(find_linear_isomorphism(r, small).has_value(),
                    "B" + std::to_string(n) + " restriction " + std::to_string(h) +
                        " is not B" + std::to_string(n - 1));
        }
    }
}

} // namespace

int main() {
    struct Item {
        int id;
        const char* label;
        std::function<void()> run;
    };
    const std::vector<Item> items = {
        {1, "Solomon coincidence (zeta = Poincare = exponent product)", criterion_solomon},
        {2, "family closed form D:p:k, 2 <= p <= 7", criterion_family_closed_form},
        {3, "slice recursion partitions zeta, 3 <= p <= 5", criterion_slices},
        {4, "two-factor identity, 3 <= p <= 8", criterion_delta_identity},
        {5, "family geometry: codes, ranks, walls, p <= 4", criterion_family_geometry},
        {6, "positive exceptional verdicts (E6, E7)", criterion_exceptional_positives},
        {7, "negative exceptional verdicts (E8 rank 3, exhaustive)", criterion_exceptional_negatives},
        {8, "localization factorization (A3, B3, D4)", criterion_localizations},
        {9, "structural invariants, 220 randomized arrangements", criterion_structural_properties},
        {10, "classical self-similarity under restriction (A and B series)",
         criterion_classical_self_similarity},
    };

    int failures = 0;
    for (const Item& item : items) {
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            item.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        if (error.empty()) {
            std::printf("PASS  %2d  %s  (%lld ms)\n", item.id, item.label,
                        static_cast<long long>(ms));
        } else {
            ++failures;
            std::printf("FAIL  %2d  %s: %s\n", item.id, item.label, error.c_str());
        }
        std::fflush(stdout);
    }

    // out-of-budget cases, documented rather than run
    std::printf("NOTE  skipped: (E8,A1) needs the Weyl-group-scale streaming computation; "
                "rank >= 4 E8 rows and rank >= 5 exceptional rows are listed as `skip` in "
                "data/theorem_corpus.tsv with run instructions\n");

    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all %zu criteria passed\n", items.size());
    return failures ? 1 : 0;
}
