#include "doctest.h"

#include "tautkit/errors.hpp"
#include "tautkit/hurwitz.hpp"
#include "tautkit/numeric.hpp"

#include <algorithm>
#include <numeric>

using namespace tautkit;

TEST_CASE("hyperelliptic series: H^g_(2) = 1/2 for all g") {
    for (int g = 0; g <= 3; ++g)
        CHECK(hurwitz_bruteforce({g, Partition({2}), true}) == Rational(1, 2));
}

TEST_CASE("genus 0 brute force matches the closed form") {
    for (int d = 1; d <= 4; ++d)
        for (const Partition& alpha : Partition::all_of(d))
            CHECK(hurwitz_bruteforce({0, alpha, true}) == hurwitz_genus0(alpha));
    CHECK(hurwitz_bruteforce({0, Partition({5}), true}) == hurwitz_genus0(Partition({5})));
}

TEST_CASE("class algebra route agrees with enumeration") {
    for (int d = 1; d <= 4; ++d)
        for (const Partition& alpha : Partition::all_of(d))
            for (int g = 0; g <= 2; ++g) {
                if (rh_branch_count(g, d, alpha.length()) > 9) continue;
                HurwitzQuery connected{g, alpha, true};
                HurwitzQuery all{g, alpha, false};
                CHECK(hurwitz_classalg(connected) == hurwitz_bruteforce(connected));
                CHECK(hurwitz_classalg(all) == hurwitz_bruteforce(all));
            }
}

TEST_CASE("class algebra reaches beyond the enumeration caps") {
    // Degree 8 would be far out of reach for tuple enumeration.
    Rational h = hurwitz_classalg({0, Partition({8}), true});
    CHECK(h == hurwitz_genus0(Partition({8})));
}

TEST_CASE("first-transposition buckets partition the count") {
    HurwitzQuery q{1, Partition({3, 1}), true};
    Integer total = hurwitz_tuple_count(q);
    auto buckets = hurwitz_tuple_count_buckets(q);
    Integer sum = std::accumulate(buckets.begin(), buckets.end(), Integer(0));
    CHECK(sum == total);
    CHECK(total > 0);
}

TEST_CASE("witness tuples satisfy the defining predicates") {
    HurwitzQuery q{1, Partition({2, 2}), true};
    const int d = 4;
    int seen = 0;
    TupleWitness check = [&](const std::vector<std::pair<int, int>>& tuple) {
        ++seen;
        PermWord prod = PermWord::identity(d);
        std::vector<int> comp(d);
        std::iota(comp.begin(), comp.end(), 0);
        for (auto [a, b] : tuple) {
            REQUIRE(0 <= a);
            REQUIRE(a < b);
            REQUIRE(b < d);
            prod = prod.times_transposition(a, b);
            int ca = comp[a];
            for (int& c : comp)
                if (c == ca) c = comp[b];
        }
        CHECK(prod.cycle_type() == q.alpha);
        CHECK(std::count(comp.begin(), comp.end(), comp[0]) == d);
    };
    Integer total = hurwitz_tuple_count(q, {}, &check);
    CHECK(Integer(seen) == total);
}

TEST_CASE("double Hurwitz numbers") {
    CHECK(double_hurwitz_bruteforce(0, Partition({2}), Partition({2})) == Rational(1, 2));
    CHECK(double_hurwitz_bruteforce(0, Partition({2}), Partition({1, 1})) == Rational(1));
    CHECK(double_hurwitz_bruteforce(0, Partition({1}), Partition({1})) == Rational(1));
    // A trivial profile over 0 reduces to the single Hurwitz number times d!.
    for (int g = 0; g <= 1; ++g)
        for (int d = 1; d <= 3; ++d)
            for (const Partition& alpha : Partition::all_of(d)) {
                Partition ones(std::vector<int>(d, 1));
                if (2 * g - 2 + alpha.length() + d > 8) continue;
                CHECK(double_hurwitz_bruteforce(g, alpha, ones) ==
                      Rational(factorial(d)) * hurwitz_bruteforce({g, alpha, true}));
            }
}

TEST_CASE("degree 1 covers exist only in genus 0") {
    CHECK(hurwitz_bruteforce({0, Partition({1}), true}) == Rational(1));
    CHECK(hurwitz_bruteforce({1, Partition({1}), true}) == Rational(0));
    CHECK(hurwitz_classalg({2, Partition({1}), true}) == Rational(0));
}

TEST_CASE("enumeration caps raise resource errors") {
    CHECK_THROWS_AS(hurwitz_bruteforce({0, Partition({7}), true}), ResourceCapError);
    CHECK_THROWS_AS(hurwitz_bruteforce({4, Partition({2, 2}), true}), ResourceCapError);
    // A widened cap is honored.
    EnumerationCaps wide{7, 10};
    CHECK(hurwitz_bruteforce({0, Partition({7}), true}, wide) ==
          hurwitz_genus0(Partition({7})));
}

TEST_CASE("Faber-Hurwitz socle coefficients") {
    // F^g_(1) is the generator itself; small cases stay consistent under
    // the cut/join recursion run in either profile order.
    CHECK(faber_hurwitz_coeff(2, Partition({1})) == Rational(1));
    Rational f2 = faber_hurwitz_coeff(2, Partition({2}));
    CHECK(f2 == Rational(1) + Rational(Integer(1) << 5, 2));  // 1 + 2^5/2
    CHECK(faber_hurwitz_coeff(2, Partition({1, 1})) == f2 + Rational(2));
    CHECK_THROWS_AS(faber_hurwitz_coeff(1, Partition({2})), std::invalid_argument);
}
