#include "doctest.h"

#include "tautkit/correlators.hpp"
#include "tautkit/hodge.hpp"
#include "tautkit/hurwitz.hpp"

#include <stdexcept>

using namespace tautkit;

namespace {

Rational lookup(const std::vector<HodgeIntegral>& table, const std::vector<int>& psi,
                int k) {
    for (const auto& e : table)
        if (e.psi_exps == psi && e.k == k) return e.value;
    throw std::runtime_error("entry not found");
}

}  // namespace

TEST_CASE("interpolation on one-pointed genus 1 recovers psi and lambda") {
    auto table = hodge_from_hurwitz(1, 1);
    CHECK(lookup(table, {1}, 0) == Rational(1, 24));
    CHECK(lookup(table, {0}, 1) == Rational(1, 24));
}

TEST_CASE("pure psi entries equal the KdV correlators") {
    IntersectionTable t;
    auto g2 = hodge_from_hurwitz(2, 1);
    CHECK(lookup(g2, {4}, 0) == t.correlator(2, {4}));
    auto g13 = hodge_from_hurwitz(1, 3);
    CHECK(lookup(g13, {3, 0, 0}, 0) == t.correlator(1, {3, 0, 0}));
    CHECK(lookup(g13, {1, 1, 1}, 0) == t.correlator(1, {1, 1, 1}));
    auto g03 = hodge_from_hurwitz(0, 3);
    CHECK(lookup(g03, {0, 0, 0}, 0) == Rational(1));
}

TEST_CASE("hodge tables are symmetric in the points") {
    auto table = hodge_from_hurwitz(1, 2);
    CHECK(lookup(table, {2, 0}, 0) == lookup(table, {0, 2}, 0));
    CHECK(lookup(table, {1, 0}, 1) == lookup(table, {0, 1}, 1));
}

TEST_CASE("forward ELSV reproduces Hurwitz numbers") {
    auto table11 = hodge_from_hurwitz(1, 1);
    CHECK(elsv_forward(1, Partition({1}), table11) == Rational(0));
    CHECK(elsv_forward(1, Partition({2}), table11) == Rational(1, 2));
    // Off the interpolation grid the polynomial must still be right.
    CHECK(elsv_forward(1, Partition({6}), table11) ==
          hurwitz_bruteforce({1, Partition({6}), true}, {6, 12}));

    auto table03 = hodge_from_hurwitz(0, 3);
    for (const Partition& alpha : Partition::all_of(5, 3))
        CHECK(elsv_forward(0, alpha, table03) == hurwitz_bruteforce({0, alpha, true}));
}

TEST_CASE("unstable targets are rejected") {
    CHECK_THROWS_AS(hurwitz_polynomial(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(hurwitz_polynomial(0, 0), std::invalid_argument);
}
