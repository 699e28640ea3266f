#include <hyperohm/resistance.hpp>

#include <catch2/catch_amalgamated.hpp>

using hyperohm::Rational;
using hyperohm::resistance_pair;

TEST_CASE("long-diagonal resistances") {
    CHECK(hyperohm::resistance_diagonal(1) == Rational(1));
    CHECK(hyperohm::resistance_diagonal(3) == Rational(5, 6));
    CHECK(hyperohm::resistance_diagonal(7) == Rational(151, 420));
    CHECK_THROWS_AS(hyperohm::resistance_diagonal(0), std::domain_error);
    CHECK_THROWS_AS(hyperohm::resistance_diagonal_alt(0), std::domain_error);
}

TEST_CASE("diagonal table for n = 1..8") {
    const std::vector<Rational> expect = {{1},        {1},         {5, 6},  {2, 3},
                                          {8, 15},    {13, 30},    {151, 420}, {32, 105}};
    for (unsigned n = 1; n <= 8; ++n) CHECK(hyperohm::resistance_diagonal(n) == expect[n - 1]);
}

TEST_CASE("companion sums") {
    CHECK(hyperohm::companion_sum(0) == Rational(1));
    CHECK(hyperohm::companion_sum(6) == Rational(151, 60));
    CHECK(hyperohm::companion_sum(8) == Rational(83, 35));
}

TEST_CASE("companion table for n = 0..8") {
    const std::vector<Rational> expect = {{1},      {2},      {5, 2},     {8, 3},      {8, 3},
                                          {13, 5},  {151, 60}, {256, 105}, {83, 35}};
    for (unsigned n = 0; n <= 8; ++n) CHECK(hyperohm::companion_sum(n) == expect[n]);
}

TEST_CASE("both forms of R and S agree") {
    for (unsigned n = 1; n <= 150; ++n)
        CHECK(hyperohm::resistance_diagonal(n) == hyperohm::resistance_diagonal_alt(n));
    for (unsigned n = 0; n <= 150; ++n)
        CHECK(hyperohm::companion_sum(n) == hyperohm::companion_sum_alt(n));
}

TEST_CASE("linkage between the two families") {
    for (unsigned n = 1; n <= 200; ++n) {
        CHECK(hyperohm::resistance_diagonal(n) ==
              hyperohm::companion_sum(n - 1) / Rational(static_cast<int>(n)));
        CHECK(hyperohm::companion_sum(n - 1) ==
              Rational(static_cast<int>(n)) * hyperohm::resistance_diagonal(n));
    }
}

TEST_CASE("halving recurrence for R") {
    CHECK(hyperohm::resistance_diagonal(1) == Rational(1));
    for (unsigned n = 2; n <= 200; ++n)
        CHECK(hyperohm::resistance_diagonal(n) ==
              hyperohm::resistance_diagonal(n - 1) / Rational(2) +
                  Rational(1, static_cast<int>(n)));
}

TEST_CASE("scaling recurrence for S") {
    for (unsigned n = 1; n <= 200; ++n)
        CHECK(hyperohm::companion_sum(n) ==
              Rational(static_cast<int>(n + 1), static_cast<int>(2 * n)) *
                      hyperohm::companion_sum(n - 1) +
                  Rational(1));
}

TEST_CASE("general-distance resistances") {
    CHECK(resistance_pair(3, 3) == Rational(5, 6));
    CHECK(resistance_pair(3, 0) == Rational(0));
    CHECK(resistance_pair(9, 0) == Rational(0));
    CHECK(resistance_pair(3, 1) == Rational(7, 12));
    CHECK(resistance_pair(3, 2) == Rational(3, 4));
    CHECK_THROWS_AS(resistance_pair(3, 4), std::domain_error);
    CHECK_THROWS_AS(resistance_pair(0, 0), std::domain_error);
}

TEST_CASE("distance n recovers the long diagonal") {
    for (unsigned n = 1; n <= 40; ++n)
        CHECK(resistance_pair(n, n) == hyperohm::resistance_diagonal(n));
}

TEST_CASE("forward differences") {
    using hyperohm::forward_difference;
    CHECK(forward_difference(3, 1) == Rational(7, 12));
    CHECK(forward_difference(3, 3) == Rational(1, 12));
    CHECK_THROWS_AS(forward_difference(3, 0), std::domain_error);
    CHECK_THROWS_AS(forward_difference(3, 4), std::domain_error);

    for (unsigned n = 1; n <= 30; ++n)
        for (unsigned k = 1; k <= n; ++k) {
            CHECK(forward_difference(n, k) ==
                  resistance_pair(n, k) - resistance_pair(n, k - 1));
            CHECK(forward_difference(n, k) > Rational(0));
        }
}

TEST_CASE("resistance is concave in the distance") {
    for (unsigned n = 2; n <= 30; ++n)
        for (unsigned k = 2; k <= n; ++k) {
            Rational second = resistance_pair(n, k) -
                              Rational(2) * resistance_pair(n, k - 1) +
                              resistance_pair(n, k - 2);
            CHECK(second < Rational(0));
        }
}

// the binomial-tail inequality behind concavity:
// (n-2j-2)/(j+1) * sum_{i<=j} C(n,i) < C(n,j+1) for 0 <= j < n/2 - 1
TEST_CASE("binomial tail inequality") {
    using hyperohm::binomial;
    for (unsigned n = 1; n <= 30; ++n) {
        for (unsigned j = 0; 2 * (j + 1) < n; ++j) {
            hyperohm::Count prefix = 0;
            for (unsigned i = 0; i <= j; ++i) prefix += binomial(n, i);
            Rational lhs = Rational(static_cast<int>(n) - 2 * static_cast<int>(j) - 2,
                                    static_cast<int>(j) + 1) *
                           Rational(prefix);
            CHECK(lhs < Rational(binomial(n, j + 1)));
        }
    }
}
