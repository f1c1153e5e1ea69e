#include <doctest.h>

#include <random>

#include "regionzeta/linalg.hpp"
#include "regionzeta/lp.hpp"
#include "regionzeta/roots.hpp"

using namespace regionzeta;

namespace {
Vec vec(std::vector<int> v) {
    Vec out;
    for (int x : v) out.push_back(Scalar(x));
    return out;
}
} // namespace

TEST_CASE("rref, rank, kernel, solve, inverse") {
    Mat m = {vec({1, 2, 3}), vec({2, 4, 6}), vec({0, 1, 1})};
    const auto pivots = rref(m);
    CHECK(pivots.size() == 2);
    CHECK(m.size() == 2);

    CHECK(rank_of({vec({1, 0}), vec({0, 1}), vec({1, 1})}) == 2);

    const auto kernel = kernel_basis({vec({1, 1, 0}), vec({0, 1, 1})}, 3);
    REQUIRE(kernel.size() == 1);
    CHECK(dot(vec({1, 1, 0}), kernel[0]).is_zero());
    CHECK(dot(vec({0, 1, 1}), kernel[0]).is_zero());

    auto c = solve_columns({vec({1, 0}), vec({1, 1})}, vec({3, 2}));
    REQUIRE(c.has_value());
    CHECK((*c)[0] == Scalar(1));
    CHECK((*c)[1] == Scalar(2));
    CHECK_FALSE(solve_columns({vec({1, 0, 0}), vec({0, 1, 0})}, vec({0, 0, 1})).has_value());

    auto inv = inverse({vec({2, 1}), vec({1, 1})});
    REQUIRE(inv.has_value());
    CHECK(mat_mul(*inv, {vec({2, 1}), vec({1, 1})}) == identity_matrix(2));
    CHECK_FALSE(inverse({vec({1, 2}), vec({2, 4})}).has_value());
}

TEST_CASE("feasibility oracle on axis-aligned cones") {
    auto w = feasible_interior_point({vec({1, 0}), vec({0, 1})}, {1, 1});
    REQUIRE(w.has_value());
    CHECK(dot(vec({1, 0}), *w).sign() == 1);
    CHECK(dot(vec({0, 1}), *w).sign() == 1);

    CHECK_FALSE(feasible_interior_point({vec({1, 0}), vec({-1, 0})}, {1, 1}).has_value());
    CHECK(feasible_interior_point({vec({1, 0}), vec({-1, 0})}, {1, -1}).has_value());
    CHECK(feasible_interior_point({}, {}).has_value()); // whole space
}

TEST_CASE("feasibility oracle on the A2 dominant cone") {
    const RootSystem a2 = build_root_system("A2");
    const Arrangement arr = coxeter_arrangement(a2);
    const Essentialization ess = essentialize(arr);
    auto w = feasible_interior_point(ess.normals, {1, 1, 1});
    REQUIRE(w.has_value());
    const Vec ambient = ess.to_ambient(*w);
    for (const Vec& n : arr.normals) CHECK(dot(n, ambient).sign() == 1);
}

TEST_CASE("feasibility matches sign vectors of random points") {
    std::mt19937 rng(7771);
    std::uniform_int_distribution<int> coord(-5, 5);
    for (int iter = 0; iter < 60; ++iter) {
        const int dim = 2 + iter % 3;
        std::vector<Vec> normals;
        for (int i = 0; i < dim + 2; ++i) {
            Vec n(dim, Scalar(0));
            bool nz = false;
            for (int j = 0; j < dim; ++j) {
                const int v = coord(rng);
                nz = nz || v != 0;
                n[j] = Scalar(v);
            }
            if (nz) normals.push_back(std::move(n));
        }
        Vec p(dim, Scalar(0));
        for (int j = 0; j < dim; ++j) p[j] = Scalar(Rational(coord(rng) * 2 + 1, 2));
        std::vector<int> signs;
        bool on_hyperplane = false;
        for (const Vec& n : normals) {
            const int s = dot(n, p).sign();
            if (s == 0) on_hyperplane = true;
            signs.push_back(s);
        }
        if (on_hyperplane) continue;
        // the point itself realizes the vector, so the oracle must agree
        auto w = feasible_interior_point(normals, signs);
        REQUIRE(w.has_value());
        for (size_t i = 0; i < normals.size(); ++i)
            CHECK(dot(normals[i], *w).sign() == signs[i]);
        // and the all-contradicted variant of a single normal must fail
        std::vector<Vec> doubled = normals;
        doubled.push_back(negated(normals[0]));
        std::vector<int> bad = signs;
        bad.push_back(signs[0]);
        CHECK_FALSE(feasible_interior_point(doubled, bad).has_value());
    }
}

TEST_CASE("feasibility over the quadratic field") {
    // cone between the sqrt5 line and the x-axis
    const Vec n1 = {Scalar(Rational(-1)), Scalar(Rational(0), Rational(1))}; // -x + sqrt5 y
    const Vec n2 = {Scalar(1), Scalar(0)};
    auto w = feasible_interior_point({n1, n2}, {1, 1});
    REQUIRE(w.has_value());
    CHECK(dot(n1, *w).sign() == 1);
    CHECK(dot(n2, *w).sign() == 1);
}
