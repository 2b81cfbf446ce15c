#include "doctest.h"

#include "tautkit/numeric.hpp"
#include "tautkit/rational.hpp"

using namespace tautkit;

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 7) == 0);
}

TEST_CASE("double factorial matches its factorial form") {
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(1) == 1);
    CHECK(double_factorial(7) == 105);
    // (2k-1)!! = (2k)! / (2^k k!)
    for (int k = 0; k <= 12; ++k) {
        Integer lhs = double_factorial(2 * k - 1);
        Integer rhs = factorial(2 * k) / (pow_int(2, k) * factorial(k));
        CHECK(lhs == rhs);
    }
    CHECK_THROWS_AS(double_factorial(4), std::invalid_argument);
}

TEST_CASE("Bernoulli numbers") {
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    // Independent oracle: sum of m-th powers 1^m + ... + (N-1)^m equals
    // (1/(m+1)) sum_k C(m+1,k) B_k N^{m+1-k} with B_1 = -1/2.
    const int m = 8, N = 20;
    Rational lhs(0);
    for (int i = 1; i < N; ++i) lhs += Rational(pow_int(i, m));
    Rational rhs(0);
    for (int k = 0; k <= m; ++k) {
        Rational bk = k == 0 ? Rational(1)
                     : k == 1 ? Rational(-1, 2)
                     : k % 2  ? Rational(0)
                              : bernoulli(k);
        rhs += Rational(binomial(m + 1, k)) * bk * Rational(pow_int(N, m + 1 - k));
    }
    CHECK(lhs == rhs / Rational(m + 1));
}

TEST_CASE("partition automorphisms") {
    CHECK(aut_partition(Partition({2, 2, 2, 5, 5})) == 12);
    CHECK(aut_partition(Partition({3, 2, 1})) == 1);
    CHECK(aut_partition(Partition(std::vector<int>(5, 1))) == 120);
}

TEST_CASE("branch point count") {
    CHECK(rh_branch_count(0, 2, 1) == 1);
    CHECK(rh_branch_count(1, 2, 1) == 3);
    CHECK(rh_branch_count(0, 4, 4) == 6);
}

TEST_CASE("Euler characteristics of moduli of curves") {
    CHECK(euler_char_mgn(1, 1) == Rational(-1, 12));
    CHECK(euler_char_mgn(1, 2) == Rational(1, 12));
    CHECK(euler_char_mg(2) == Rational(-1, 240));
    // The closed n = 0 form agrees with the pointed formula.
    for (int g = 2; g <= 6; ++g) CHECK(euler_char_mg(g) == euler_char_mgn(g, 0));
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("22/7") == Rational(22, 7));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK(Rational(3, -6).str() == "-1/2");
}
