#include "doctest.h"

#include "tautkit/invariance.hpp"

using namespace tautkit;

namespace {

// Interchanges the last two legs of every term (the two tails created by
// the operator).
GraphSum swap_new_tails(const GraphSum& sum) {
    GraphSum out;
    for (const auto& [key, term] : sum.terms()) {
        DualGraph g = term.first;
        std::swap(g.legs[g.leg_count() - 2], g.legs[g.leg_count() - 1]);
        out.add(g, term.second);
    }
    return out;
}

GraphSum negated(const GraphSum& sum) { return sum.scaled(Rational(-1)); }

bool equal(const GraphSum& a, const GraphSum& b) {
    GraphSum diff = a;
    diff += negated(b);
    return diff.zero();
}

}  // namespace

TEST_CASE("graph sums cancel by canonical form") {
    DualGraph a = smooth_graph(1, 2);
    GraphSum s;
    s.add(a, Rational(2, 3));
    CHECK(s.term_count() == 1);
    s.add(a, Rational(-2, 3));
    CHECK(s.zero());
}

TEST_CASE("cross-ratio relation pulled back to five points") {
    GraphSum rel = cross_ratio_relation_m05();
    CHECK(rel.term_count() == 4);
    for (const auto& [key, term] : rel.terms()) {
        CHECK(term.first.total_genus() == 0);
        CHECK(term.first.dimension() == 1);
    }
}

TEST_CASE("r_1 annihilates the cross-ratio relation") {
    GraphSum image = rl_apply(cross_ratio_relation_m05(), 1);
    CHECK(image.zero());
}

TEST_CASE("a single boundary divisor is not invariant") {
    GraphSum one;
    DualGraph d;
    d.genus = {0, 0};
    d.edges = {{0, 1, 0, 0}};
    d.legs = {{0, 0}, {0, 0}, {1, 0}, {1, 0}, {1, 0}};
    one.add(d, Rational(1));
    CHECK(!rl_apply(one, 1).zero());
}

TEST_CASE("operator output lives in genus g-1 with n+2 legs, dimension -l") {
    DualGraph g = smooth_graph(2, 1);
    for (int l = 1; l <= 3; ++l) {
        GraphSum image = rl_apply(g, l);
        CHECK(!image.zero());
        for (const auto& [key, term] : image.terms()) {
            CHECK(term.first.total_genus() == 1);
            CHECK(term.first.leg_count() == 3);
            CHECK(term.first.dimension() == g.dimension() - l);
        }
    }
}

TEST_CASE("parity in the two new tails") {
    DualGraph smooth = smooth_graph(2, 1);
    DualGraph nodal;
    nodal.genus = {1};
    nodal.edges = {{0, 0, 0, 0}};
    nodal.legs = {{0, 1}};
    for (const DualGraph& g : {smooth, nodal}) {
        for (int l = 1; l <= 3; ++l) {
            GraphSum image = rl_apply(g, l);
            GraphSum swapped = swap_new_tails(image);
            if (l % 2 == 1)
                CHECK(equal(image, swapped));
            else
                CHECK(equal(image, negated(swapped)));
        }
    }
}

TEST_CASE("linearity") {
    DualGraph a = smooth_graph(1, 2);
    DualGraph b;
    b.genus = {0};
    b.edges = {{0, 0, 0, 0}};
    b.legs = {{0, 0}, {0, 0}};
    GraphSum s;
    s.add(a, Rational(3));
    s.add(b, Rational(-1, 2));
    GraphSum lhs = rl_apply(s, 2);
    GraphSum rhs = rl_apply(a, 2).scaled(Rational(3));
    rhs += rl_apply(b, 2).scaled(Rational(-1, 2));
    CHECK(equal(lhs, rhs));
}

TEST_CASE("json round trip") {
    GraphSum rel = cross_ratio_relation_m05();
    GraphSum back = GraphSum::from_json(rel.json());
    CHECK(equal(rel, back));
    CHECK(back.json() == rel.json());
}
