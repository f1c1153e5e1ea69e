#include <doctest.h>

#include <algorithm>
#include <random>

#include "regionzeta/chambers.hpp"
#include "regionzeta/roots.hpp"

using namespace regionzeta;

namespace {

Vec vec(std::vector<int> v) {
    Vec out;
    for (int x : v) out.push_back(Scalar(x));
    return out;
}

std::vector<Arrangement> random_arrangements() {
    std::vector<Arrangement> out;
    std::mt19937 rng(314159);
    std::uniform_int_distribution<int> coord(-3, 3);
    std::uniform_int_distribution<int> nh(2, 7);
    std::uniform_int_distribution<int> nd(2, 4);
    while (out.size() < 40) {
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
        out.push_back(Arrangement::from_normals(dim, normals));
    }
    return out;
}

} // namespace

TEST_CASE("chamber counts of basic arrangements") {
    CHECK(enumerate_chambers(Arrangement::from_normals(3, {})).size() == 1);
    CHECK(enumerate_chambers(Arrangement::from_normals(2, {vec({1, 1})})).size() == 2);

    const Arrangement a2 = coxeter_arrangement(build_root_system("A2"));
    const ChamberSet cs = enumerate_chambers(a2);
    CHECK(cs.size() == 6);
    const Exponents e = exponents(a2);
    CHECK(Integer(static_cast<unsigned long>(cs.size())) == e.chamber_count());

    ChamberGuards tight;
    tight.max_chambers = 4;
    CHECK_THROWS_AS(enumerate_chambers(a2, tight), TooManyChambers);
    tight.max_chambers = 5000000;
    tight.max_hyperplanes = 2;
    CHECK_THROWS_AS(enumerate_chambers(a2, tight), TooManyChambers);
}

TEST_CASE("chamber invariants: witnesses, order, antipodes") {
    const Arrangement b3 = coxeter_arrangement(build_root_system("B3"));
    const ChamberSet cs = enumerate_chambers(b3);
    CHECK(cs.size() == 48);
    for (size_t i = 0; i < cs.size(); ++i) {
        CHECK(cs.locate(cs.chambers[i].witness) == i); // witness realizes the sign vector
        if (i + 1 < cs.size()) CHECK(cs.chambers[i].signs.lex_less(cs.chambers[i + 1].signs));
        CHECK(cs.antipode(cs.antipode(i)) == i);
    }
}

TEST_CASE("separating sets") {
    const Arrangement a2 = coxeter_arrangement(build_root_system("A2"));
    const ChamberSet cs = enumerate_chambers(a2);
    const size_t dom = cs.locate(dominant_point(build_root_system("A2")));
    CHECK(separating_set(cs, dom, dom).empty());
    CHECK(separating_set(cs, dom, cs.antipode(dom)).size() == a2.size());
    const auto ws = walls(cs, dom);
    for (size_t w : ws) {
        const size_t nb = cs.find(cs.chambers[dom].signs.flipped(w));
        REQUIRE(nb != Arrangement::npos);
        CHECK(separating_set(cs, dom, nb) == std::vector<size_t>{w});
    }
}

TEST_CASE("rank-generating functions of small arrangements") {
    CHECK(zeta(enumerate_chambers(Arrangement::from_normals(2, {})), size_t{0}) == Polynomial::one());

    const ChamberSet one = enumerate_chambers(Arrangement::from_normals(2, {vec({1, 0})}));
    CHECK(zeta(one, size_t{0}) == f_product({1}));
    CHECK(zeta(one, size_t{1}) == f_product({1}));

    const RootSystem a2 = build_root_system("A2");
    const ChamberSet cs = enumerate_chambers(coxeter_arrangement(a2));
    for (size_t b = 0; b < cs.size(); ++b) CHECK(zeta(cs, b) == f_product({1, 2}));
}

TEST_CASE("walls of small arrangements") {
    const ChamberSet one = enumerate_chambers(Arrangement::from_normals(2, {vec({1, 0})}));
    CHECK(walls(one, 0) == std::vector<size_t>{0});
    CHECK(walls(one, 1) == std::vector<size_t>{0});

    const ChamberSet boolean2 =
        enumerate_chambers(Arrangement::from_normals(2, {vec({1, 0}), vec({0, 1})}));
    for (size_t i = 0; i < 4; ++i) CHECK(walls(boolean2, i).size() == 2);

    const RootSystem a2 = build_root_system("A2");
    const ChamberSet cs = enumerate_chambers(coxeter_arrangement(a2));
    CHECK(walls(cs, cs.locate(dominant_point(a2))).size() == 2);
}

TEST_CASE("zeta is base-independent on reflection arrangements") {
    for (const char* label : {"A3", "B3", "H3"}) {
        const RootSystem rs = build_root_system(label);
        const ChamberSet cs = enumerate_chambers(coxeter_arrangement(rs));
        const Polynomial ref = zeta(cs, size_t{0});
        for (size_t b = 1; b < cs.size(); ++b) CHECK(zeta(cs, b) == ref);
        CHECK(ref == poincare_polynomial(rs));
    }
}

TEST_CASE("structural properties over random arrangements") {
    std::mt19937 rng(271828);
    for (const Arrangement& a : random_arrangements()) {
        const ChamberSet cs = enumerate_chambers(a);

        // Zaslavsky
        const Integer chi = characteristic_polynomial(a)(Integer(-1));
        CHECK(abs(chi) == Integer(static_cast<unsigned long>(cs.size())));

        std::uniform_int_distribution<size_t> pick(0, cs.size() - 1);
        for (int trial = 0; trial < 3; ++trial) {
            const size_t b = pick(rng);
            const Polynomial z = zeta(cs, b);
            CHECK(z.palindromic());
            CHECK(z.coeff(0) == 1);
            CHECK(z.degree() == static_cast<long>(a.size()));
            CHECK(z(1) == Integer(static_cast<unsigned long>(cs.size())));
            CHECK(z.coeff(1) == Integer(static_cast<unsigned long>(walls(cs, b).size())));
            CHECK(zeta(cs, cs.antipode(b)) == z);
        }
    }
}

TEST_CASE("lookup walls agree with the feasibility-oracle walls") {
    std::mt19937 rng(62832);
    const Arrangement corpus[] = {
        coxeter_arrangement(build_root_system("A3")),
        coxeter_arrangement(build_root_system("B2")),
        Arrangement::from_normals(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}),
                                      vec({1, 1, 1}), vec({1, -1, 0})}),
    };
    for (const Arrangement& a : corpus) {
        const ChamberSet cs = enumerate_chambers(a);
        std::uniform_int_distribution<size_t> pick(0, cs.size() - 1);
        for (int trial = 0; trial < 4; ++trial) {
            const size_t r = pick(rng);
            CHECK(walls(cs, r) == walls_by_lp(cs, r));
        }
    }
}

TEST_CASE("zeta by sign-vector base and error paths") {
    const Arrangement a2 = coxeter_arrangement(build_root_system("A2"));
    const ChamberSet cs = enumerate_chambers(a2);
    CHECK(zeta(cs, SignVec::parse("+++")) == f_product({1, 2}));
    CHECK_THROWS_AS(zeta(cs, SignVec::parse("++-")), BaseNotAChamber); // not realizable
    CHECK_THROWS_AS(cs.locate(vec({0, 0, 0})), BaseNotAChamber);
}

TEST_CASE("export format") {
    const ChamberSet one = enumerate_chambers(Arrangement::from_normals(2, {vec({1, 0})}));
    const std::string text = export_chambers(one);
    CHECK(text.find('+') != std::string::npos);
    CHECK(text.find('-') != std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == 2);
}
