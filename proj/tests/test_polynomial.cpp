#include "doctest.h"
#include "juggle/polynomial.hpp"

using namespace juggle;

namespace {

polynomial poly(std::vector<long> ascending) {
    std::vector<big_int> c(ascending.begin(), ascending.end());
    return polynomial(std::move(c));
}

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("product of linear factors") {
    const polynomial p = poly({-1, 1}) * poly({-2, 1});
    CHECK(p == poly({2, -3, 1}));
    CHECK(p.str() == "x^2-3x+2");
}

TEST_CASE("exact division recovers a factor") {
    const polynomial p = poly({-1, 1}) * poly({-2, 1});
    CHECK(exact_div(p, poly({-1, 1})) == poly({-2, 1}));
    CHECK(exact_div(p, poly({-2, 1})) == poly({-1, 1}));
}

TEST_CASE("inexact division reports the remainder") {
    try {
        exact_div(poly({1, 0, 1}), poly({-1, 1}));
        FAIL("expected not_divisible");
    } catch (const not_divisible& e) {
        CHECK(e.remainder == poly({2}));
    }
}

TEST_CASE("rendering") {
    CHECK(polynomial{}.str() == "0");
    CHECK(poly({-20, 27, -10, 1}).str() == "x^3-10x^2+27x-20");
    CHECK(poly({1, 1, 1}).str("q") == "q^2+q+1");
    CHECK(poly({2, 1, 1}).str("q") == "q^2+q+2");
    CHECK(poly({0, -1}).str() == "-x");
}

TEST_CASE("normalization and degree") {
    CHECK(polynomial(std::vector<big_int>{0, 0, 0}).is_zero());
    CHECK(polynomial{}.degree() == -1);
    CHECK(poly({5}).degree() == 0);
    CHECK(polynomial::monomial(3).degree() == 3);
    CHECK(polynomial::monomial(3, 0).is_zero());
}

TEST_CASE("evaluation") {
    const polynomial p = poly({-20, 27, -10, 1});
    CHECK(p(big_int(1)) == -2);
    CHECK(p(big_int(0)) == -20);
    big_int coeff_sum = 0;
    for (const auto& c : p.coefficients()) coeff_sum += c;
    CHECK(p(big_int(1)) == coeff_sum);
}

TEST_CASE("power") {
    CHECK(pow(poly({-1, 1}), 2) == poly({1, -2, 1}));
    CHECK(pow(poly({1, 1}), 0) == poly({1}));
}

TEST_CASE("stretching substitutes a power of the variable") {
    CHECK(poly({1, 2, 3}).stretched(2) == poly({1, 0, 2, 0, 3}));
    CHECK(poly({1, 2}).stretched(1) == poly({1, 2}));
    CHECK(polynomial{}.stretched(3).is_zero());
    const polynomial p = poly({4, 0, 7, 1});
    CHECK(p.stretched(3)(big_int(2)) == p(big_int(8)));
}

}  // TEST_SUITE
