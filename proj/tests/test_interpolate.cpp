#include "doctest.h"

#include "tautkit/interpolate.hpp"

#include <random>

using namespace tautkit;

TEST_CASE("monomial windows") {
    CHECK(monomials_in_window(2, 0, 1).size() == 3);   // 1, x, y
    CHECK(monomials_in_window(3, 2, 2).size() == 6);
    CHECK(monomials_in_window(1, 2, 4).size() == 3);
}

TEST_CASE("interpolation round trip is exact") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + trial % 3;
        const int degmin = trial % 2, degmax = degmin + 2;
        std::map<ExponentVector, Rational> truth;
        for (const auto& mono : monomials_in_window(n, degmin, degmax)) {
            Rational c(num(rng), den(rng));
            if (!c.is_zero()) truth[mono] = c;
        }
        std::vector<SymmetricPolySample> samples;
        for (const auto& pt : default_grid(n, 64))
            samples.push_back({pt, eval_poly(truth, pt)});
        CHECK(interpolate_poly(samples, n, degmin, degmax) == truth);
    }
}

TEST_CASE("underdetermined systems are rejected") {
    std::vector<SymmetricPolySample> samples{{{1, 1}, Rational(1)}};
    CHECK_THROWS_WITH(interpolate_poly(samples, 2, 0, 2), "insufficient samples");
}

TEST_CASE("samples outside the degree window are rejected") {
    // f(x) = x^3 cannot be matched by a polynomial of degree <= 2.
    std::vector<SymmetricPolySample> samples;
    for (int x = 1; x <= 6; ++x)
        samples.push_back({{x}, Rational(Integer(x) * x * x)});
    CHECK_THROWS_WITH(interpolate_poly(samples, 1, 0, 2), "degree bounds violated");
}

TEST_CASE("redundant consistent samples are fine") {
    std::map<ExponentVector, Rational> truth{{{2}, Rational(3, 2)}, {{0}, Rational(-1)}};
    std::vector<SymmetricPolySample> samples;
    for (int x = 1; x <= 9; ++x) samples.push_back({{x}, eval_poly(truth, {x})});
    CHECK(interpolate_poly(samples, 1, 0, 2) == truth);
}
