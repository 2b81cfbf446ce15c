#include "doctest.h"

#include "tautkit/correlators.hpp"
#include "tautkit/numeric.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

using namespace tautkit;

TEST_CASE("base intersection numbers") {
    IntersectionTable t;
    CHECK(t.correlator(0, {0, 0, 0}) == Rational(1));
    CHECK(t.correlator(1, {1}) == Rational(1, 24));
    CHECK(t.correlator(2, {4}) == Rational(1, 1152));
    CHECK(t.correlator(1, {0, 2}) == Rational(1, 24));
    CHECK(t.correlator(1, {1, 1}) == Rational(1, 24));
}

TEST_CASE("genus 0 correlators are multinomial") {
    IntersectionTable t;
    for (int n = 3; n <= 8; ++n) {
        std::vector<int> exps(n, 0);
        std::function<void(int, int)> walk = [&](int pos, int left) {
            if (pos == n - 1) {
                exps[pos] = left;
                CHECK(t.correlator(0, exps) == psi_genus0(exps));
                Rational multinomial(factorial(n - 3));
                for (int k : exps) multinomial /= Rational(factorial(k));
                CHECK(t.correlator(0, exps) == multinomial);
                return;
            }
            for (int k = 0; k <= left; ++k) {
                exps[pos] = k;
                walk(pos + 1, left - k);
            }
        };
        walk(0, n - 3);
    }
}

TEST_CASE("dimension gate") {
    IntersectionTable t;
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> genus(0, 3), count(1, 5), exp(0, 9);
    for (int trial = 0; trial < 200; ++trial) {
        int g = genus(rng), n = count(rng);
        std::vector<int> exps(n);
        int total = 0;
        for (int& k : exps) total += (k = exp(rng));
        if (total != 3 * g - 3 + n)
            CHECK(t.correlator(g, exps) == Rational(0));
    }
    CHECK(t.correlator(0, {0, 0}) == Rational(0));   // unstable
    CHECK(t.correlator(1, {}) == Rational(0));
}

TEST_CASE("string and dilaton equations close over the table") {
    IntersectionTable t;
    for (int g = 0; g <= 2; ++g) {
        for (int n = 1; n + 1 <= 5; ++n) {
            const int dim = 3 * g - 3 + n;
            if (dim < 0) continue;
            std::vector<int> exps(n, 0);
            std::function<void(int, int)> walk = [&](int pos, int left) {
                if (pos == n - 1) {
                    exps[pos] = left;
                    // String: append a tau_0.
                    std::vector<int> with0 = exps;
                    with0.push_back(0);
                    Rational sum(0);
                    for (int j = 0; j < n; ++j) {
                        if (exps[j] == 0) continue;
                        std::vector<int> red = exps;
                        --red[j];
                        sum += t.correlator(g, red);
                    }
                    CHECK(t.correlator(g, with0) == sum);
                    // Dilaton: append a tau_1.
                    std::vector<int> with1 = exps;
                    with1.push_back(1);
                    CHECK(t.correlator(g, with1) ==
                          Rational(2 * g - 2 + n) * t.correlator(g, exps));
                    return;
                }
                for (int k = 0; k <= left; ++k) {
                    exps[pos] = k;
                    walk(pos + 1, left - k);
                }
            };
            walk(0, dim);
        }
    }
}

TEST_CASE("correlators are symmetric in their arguments") {
    IntersectionTable t;
    CHECK(t.correlator(2, {3, 1}) == t.correlator(2, {1, 3}));
    CHECK(t.correlator(1, {2, 0, 1}) == t.correlator(1, {0, 1, 2}));
}

TEST_CASE("cache round trip") {
    IntersectionTable t;
    t.correlator(2, {4});
    t.correlator(1, {0, 2});
    std::ostringstream out;
    t.save(out);
    CHECK(t.size() > 0);

    IntersectionTable loaded;
    std::istringstream in(out.str());
    loaded.load(in);
    CHECK(loaded.size() == t.size());
    CHECK(loaded.correlator(2, {4}) == Rational(1, 1152));

    std::ostringstream again;
    loaded.save(again);
    CHECK(again.str() == out.str());
}
