#include <doctest.h>

#include <random>
#include <vector>

#include "regionzeta/scalar.hpp"

using namespace regionzeta;

namespace {

// Exact rational enclosure of sqrt 5 by Newton iteration from above;
// independent of Scalar::sign, which it is used to audit.
std::pair<Rational, Rational> sqrt5_bounds() {
    Rational hi(9, 4);
    for (int i = 0; i < 8; ++i) hi = (hi + 5 / hi) / 2;
    Rational lo = 5 / hi;
    return {lo, hi};
}

int interval_sign(const Scalar& s) {
    static const auto [lo, hi] = sqrt5_bounds();
    const Rational& a = s.rational_part();
    const Rational& b = s.sqrt5_coeff();
    const Rational lower = a + b * (sgn(b) >= 0 ? lo : hi);
    const Rational upper = a + b * (sgn(b) >= 0 ? hi : lo);
    if (sgn(lower) > 0) return 1;
    if (sgn(upper) < 0) return -1;
    REQUIRE(a == 0);
    REQUIRE(b == 0);
    return 0;
}

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(1, 23);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

Scalar random_scalar(std::mt19937& rng, bool quadratic) {
    Rational a = random_rational(rng);
    Rational b = quadratic ? random_rational(rng) : Rational(0);
    return Scalar(a, b);
}

} // namespace

TEST_CASE("sign of zero, rationals, and quadratic values") {
    CHECK(Scalar(0).sign() == 0);
    CHECK(Scalar(Rational(-7, 3)).sign() == -1);
    // -1 + (1/2) sqrt5 > 0 since 5 * 1^2 > 4 * 1^2
    CHECK(Scalar(Rational(-1), Rational(1, 2)).sign() == 1);
    // 9/4 - sqrt5 > 0 since (9/4)^2 = 81/16 > 80/16
    CHECK(Scalar(Rational(9, 4), Rational(-1)).sign() == 1);
    CHECK(Scalar(Rational(-9, 4), Rational(1)).sign() == -1);
    CHECK(Scalar::sqrt5().sign() == 1);
    CHECK((Scalar(Rational(2)) - Scalar::sqrt5()).sign() == -1);
}

TEST_CASE("arithmetic is exact and sign is multiplicative") {
    std::mt19937 rng(20240517);
    for (int i = 0; i < 500; ++i) {
        const Scalar s = random_scalar(rng, i % 2 == 0);
        const Scalar t = random_scalar(rng, i % 3 == 0);
        CHECK((s * t).sign() == s.sign() * t.sign());
        if (!t.is_zero()) {
            const Scalar q = s / t;
            CHECK(q * t == s);
        }
    }
}

TEST_CASE("sign of sums agrees with a rational interval enclosure of sqrt5") {
    std::mt19937 rng(987654321);
    for (int i = 0; i < 1000; ++i) {
        const Scalar s = random_scalar(rng, true);
        const Scalar t = random_scalar(rng, true);
        const Scalar sum = s + t;
        CHECK(sum.sign() == interval_sign(sum));
    }
}

TEST_CASE("canonicalize_normal picks a unique line representative") {
    auto vec = [](std::vector<int> v) {
        Vec out;
        for (int x : v) out.push_back(Scalar(x));
        return out;
    };
    CHECK(canonicalize_normal(vec({-2, 4, 0})) == vec({1, -2, 0}));
    CHECK(canonicalize_normal({Scalar(Rational(1, 2)), Scalar(Rational(1, 2))}) == vec({1, 1}));
    CHECK(canonicalize_normal(vec({0, -3, 6})) == vec({0, 1, -2}));
    CHECK_THROWS_AS(canonicalize_normal(vec({0, 0})), ZeroVector);
}

TEST_CASE("canonicalize_normal is idempotent and scale invariant") {
    std::mt19937 rng(424242);
    for (int i = 0; i < 300; ++i) {
        Vec v;
        bool nonzero = false;
        for (int j = 0; j < 4; ++j) {
            Scalar x = random_scalar(rng, i % 2 == 0);
            nonzero = nonzero || !x.is_zero();
            v.push_back(x);
        }
        if (!nonzero) continue;
        const Vec canon = canonicalize_normal(v);
        CHECK(canonicalize_normal(canon) == canon);

        Scalar lambda = random_scalar(rng, i % 5 == 0);
        if (lambda.is_zero()) lambda = Scalar(Rational(-3, 7));
        CHECK(canonicalize_normal(scaled(v, lambda)) == canon);
        CHECK(canonicalize_normal(negated(v)) == canon);
    }
}

TEST_CASE("scalar text syntax round-trips") {
    const char* samples[] = {"0",        "5",       "-7/3",       "1/2+3/4*r5", "-1/2-3*r5",
                             "2*r5",     "-1*r5",   "12+1*r5",    "3/2",        "-8"};
    for (const char* s : samples) {
        const Scalar v = parse_scalar(s);
        CHECK(parse_scalar(to_string(v)) == v);
    }
    // lenient input forms
    CHECK(parse_scalar("r5") == Scalar::sqrt5());
    CHECK(parse_scalar("-r5") == -Scalar::sqrt5());
    CHECK(parse_scalar("1+r5") == Scalar(Rational(1), Rational(1)));
    CHECK(parse_scalar("1-r5") == Scalar(Rational(1), Rational(-1)));
    CHECK(parse_scalar("5/3*r5") == Scalar(Rational(0), Rational(5, 3)));

    CHECK_THROWS_AS(parse_scalar(""), ParseError);
    CHECK_THROWS_AS(parse_scalar("x"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar("r5junk"), ParseError);
    CHECK_THROWS_AS(parse_scalar("3r5"), ParseError);
}

TEST_CASE("rational variant is used whenever b = 0") {
    CHECK(Scalar(Rational(3), Rational(0)).is_rational());
    const Scalar s = Scalar::sqrt5() * Scalar::sqrt5(); // 5
    CHECK(s.is_rational());
    CHECK(s == Scalar(5));
    const Scalar t = (Scalar(1) + Scalar::sqrt5()) - Scalar::sqrt5();
    CHECK(t.is_rational());
}
