#include <doctest.h>

#include "regionzeta/poly.hpp"

using namespace regionzeta;

namespace {
Polynomial poly(std::vector<long> coeffs) {
    std::vector<Integer> c;
    for (long x : coeffs) c.emplace_back(x);
    return Polynomial(std::move(c));
}
} // namespace

TEST_CASE("F-products") {
    CHECK(f_product({}) == Polynomial::one());
    CHECK(f_product({1, 2}) == poly({1, 2, 2, 1}));
    CHECK(f_product({2, 1}) == poly({1, 2, 2, 1}));
    CHECK(f_product({0}) == Polynomial::one());
    CHECK(f_product({3}) == poly({1, 1, 1, 1}));
}

TEST_CASE("F(j-1) (1 + t^j) = F(2j-1)") {
    for (long j = 1; j <= 10; ++j) {
        Polynomial lhs = f_product({j - 1}) * (Polynomial::one() + Polynomial::monomial(j));
        CHECK(lhs == f_product({2 * j - 1}));
    }
}

TEST_CASE("degree, value at one, palindromicity of F-products") {
    const std::vector<long> sets[] = {{1, 2}, {1, 3, 5, 4}, {2, 2, 2}, {7}, {1, 1, 1, 1}};
    for (const auto& es : sets) {
        const Polynomial f = f_product(es);
        long deg = 0;
        Integer val(1);
        for (long e : es) {
            deg += e;
            val *= e + 1;
        }
        CHECK(f.degree() == deg);
        CHECK(f(1) == val);
        CHECK(f.palindromic());
    }
}

TEST_CASE("factorization test") {
    CHECK(factors_as(poly({1, 2, 2, 1}), {1, 2}));
    CHECK_FALSE(factors_as(poly({1, 2, 2, 1}), {1, 1, 1}));
    CHECK_FALSE(factors_as(poly({1, 3, 2, 1}), {1, 2}));
    CHECK(factors_as(Polynomial::one(), {}));
    CHECK_FALSE(factors_as(poly({1, 1}), {}));
}

TEST_CASE("arithmetic and canonical form") {
    CHECK(poly({0, 0, 0}) == Polynomial());
    CHECK(poly({1, 1}).degree() == 1);
    CHECK((poly({1, 1}) * poly({1, 1})) == poly({1, 2, 1}));
    CHECK((poly({1, 2, 1}) - poly({0, 2, 1})) == Polynomial::one());
    CHECK(poly({3, 1}).shifted(2) == poly({0, 0, 3, 1}));
    CHECK(poly({5})(Integer(100)) == 5);
    CHECK(poly({1, 2, 1})(Integer(-1)) == 0);
}

TEST_CASE("exact division by linear factors") {
    const Polynomial chi = poly({2, -3, 1}); // (t-1)(t-2)
    auto q = chi.divide_linear(Integer(1));
    REQUIRE(q.has_value());
    CHECK(*q == poly({-2, 1}));
    CHECK(q->divide_linear(Integer(2)).has_value());
    CHECK_FALSE(chi.divide_linear(Integer(5)).has_value());
}

TEST_CASE("text forms") {
    CHECK(poly({1, 2, 2, 1}).pretty() == "1 + 2t + 2t^2 + t^3");
    CHECK(poly({2, -3, 1}).pretty() == "2 - 3t + t^2");
    CHECK(poly({0, 1}).pretty() == "t");
    CHECK(Polynomial().pretty() == "0");
    CHECK(poly({1, 0, 4}).pretty() == "1 + 4t^2");
    CHECK(poly({1, 2, 2, 1}).coeff_list() == "1 2 2 1");
    CHECK(parse_coeff_list("1 2 2 1") == poly({1, 2, 2, 1}));
    CHECK(parse_coeff_list("") == Polynomial());
}
