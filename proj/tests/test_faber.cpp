#include "doctest.h"

#include "tautkit/errors.hpp"
#include "tautkit/faber.hpp"
#include "tautkit/numeric.hpp"

using namespace tautkit;

TEST_CASE("socle coefficient closed form") {
    // g = 4, d = (1,1):  7! 7!! / (7! 3!! 3!!) = 105/9.
    CHECK(faber_coeff(4, {1, 1}) == Rational(35, 3));
    // The one-part coefficient is always 1.
    for (int g = 3; g <= 8; ++g)
        CHECK(faber_coeff(g, {g - 2}) == Rational(1));
}

TEST_CASE("cycle sums over the symmetric group") {
    auto rhs = faber_rhs({1, 1});
    CHECK(rhs.at(Partition({1, 1})) == 1);
    CHECK(rhs.at(Partition({2})) == 1);

    auto rhs3 = faber_rhs({1, 1, 1});
    CHECK(rhs3.at(Partition({1, 1, 1})) == 1);
    CHECK(rhs3.at(Partition({2, 1})) == 3);
    CHECK(rhs3.at(Partition({3})) == 2);

    Integer total = 0;
    for (const auto& [mono, count] : faber_rhs({2, 1, 1, 3})) total += count;
    CHECK(total == factorial(4));

    CHECK_THROWS_AS(faber_rhs(std::vector<int>(9, 1)), ResourceCapError);
}

TEST_CASE("kappa monomial evaluations") {
    auto g4 = kappa_solve(4);
    CHECK(g4.at(Partition({2})) == Rational(1));
    CHECK(g4.at(Partition({1, 1})) == Rational(32, 3));

    auto g5 = kappa_solve(5);
    CHECK(g5.at(Partition({3})) == Rational(1));
    CHECK(g5.at(Partition({2, 1})) == Rational(20));
    // kappa_1^{g-2} = (1/(g-1)) 2^{2g-5} (g-2)!^2 kappa_{g-2}
    CHECK(g5.at(Partition({1, 1, 1})) == Rational(288));
    for (int g = 3; g <= 7; ++g) {
        Rational predicted =
            Rational(pow_int(2, 2 * g - 5) * factorial(g - 2) * factorial(g - 2),
                     Integer(g - 1));
        CHECK(kappa_solve(g).at(Partition(std::vector<int>(g - 2, 1))) == predicted);
    }
    CHECK(kappa_solve(2).at(Partition()) == Rational(1));
}

TEST_CASE("pairing example from the two-index identity") {
    // kappa_{i-1} kappa_{g-i-1} + kappa_{g-2} = (2g-1)!!/((2i-1)!!(2g-2i-1)!!) k_{g-2}
    for (int g = 4; g <= 7; ++g)
        for (int i = 2; 2 * i <= g; ++i) {
            auto solved = kappa_solve(g);
            Rational lhs = solved.at(Partition({i - 1, g - i - 1})) + Rational(1);
            Rational rhs(double_factorial(2 * g - 1),
                         double_factorial(2 * i - 1) * double_factorial(2 * g - 2 * i - 1));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("psi-form coefficient") {
    // d_j = alpha_j - 1 reindexing.
    CHECK(faber_taketwo_coeff(4, Partition({2, 2})) == faber_coeff(4, {1, 1}));
    CHECK_THROWS_AS(faber_taketwo_coeff(4, Partition({3, 1})), std::invalid_argument);
    CHECK_THROWS_AS(faber_taketwo_coeff(4, Partition({2})), std::invalid_argument);
}
