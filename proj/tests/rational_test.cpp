#include <hyperohm/combinatorics.hpp>
#include <hyperohm/rational.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "brute_force.hpp"

using hyperohm::Count;
using hyperohm::Int;
using hyperohm::Rational;

TEST_CASE("canonical form is maintained by every constructor and operation") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(2, 4).num() == 1);
    CHECK(Rational(2, 4).den() == 2);

    // zero is 0/1
    Rational z(0, 7);
    CHECK(z.num() == 0);
    CHECK(z.den() == 1);

    // sign lives on the numerator
    Rational m(3, -6);
    CHECK(m.num() == -1);
    CHECK(m.den() == 2);
    CHECK(m.str() == "-1/2");

    CHECK((Rational(2, 4) + Rational(0)).str() == "1/2");
}

TEST_CASE("resistor puzzle arithmetic") {
    Rational total = Rational(1, 3) + Rational(1, 6) + Rational(1, 3);
    CHECK(total == Rational(5, 6));
    CHECK(total.str() == "5/6");
}

TEST_CASE("multiplicative identity and rendering") {
    Rational x(-7, 12);
    CHECK(x * Rational(1) == x);
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(-5).str() == "-5");
}

TEST_CASE("division by zero is an explicit error") {
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), std::domain_error);
}

TEST_CASE("ordering is exact") {
    CHECK(Rational(1, 3) < Rational(2, 5));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 12) > Rational(0));
    CHECK(Rational(3, 9) == Rational(1, 3));
}

TEST_CASE("commutativity probe on random inputs") {
    std::mt19937_64 rng(20240517);
    std::uniform_int_distribution<long long> num(-1000, 1000);
    std::uniform_int_distribution<long long> den(1, 1000);
    for (int i = 0; i < 200; ++i) {
        Rational a(Int(num(rng)), Int(den(rng)));
        Rational b(Int(num(rng)), Int(den(rng)));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        // field axioms that canonicalization must not disturb
        CHECK((a - b) + b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("floor and ceil") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(4).floor() == 4);
    CHECK(Rational(4).ceil() == 4);
}

TEST_CASE("decimal rendering rounds half to even on the exact value") {
    using hyperohm::decimal_string;
    CHECK(decimal_string(Rational(5, 6), 4) == "0.8333");
    CHECK(decimal_string(Rational(0), 3) == "0");
    // exact ties resolve to the even digit
    CHECK(decimal_string(Rational(1, 8), 2) == "0.12");   // 0.125 -> 0.12
    CHECK(decimal_string(Rational(3, 8), 2) == "0.38");   // 0.375 -> 0.38
    CHECK(decimal_string(Rational(25, 1000), 1) == "0.02");
    CHECK(decimal_string(Rational(35, 1000), 1) == "0.04");
    // carry across the leading digit
    CHECK(decimal_string(Rational(9999, 10000), 3) == "1");
    // negative values
    CHECK(decimal_string(Rational(-1, 300), 3) == "-0.00333");
    // scientific for extreme magnitudes
    CHECK(decimal_string(Rational(1, 100000), 3) == "1e-5");
    CHECK(decimal_string(Rational(12345678), 4) == "1.235e7");
    CHECK(decimal_string(Rational(151, 60), 6) == "2.51667");
}

TEST_CASE("binomial coefficients") {
    using hyperohm::binomial;
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(30, 15) == Count("155117520"));

    // Pascal-recurrence oracle
    for (unsigned n = 0; n <= 25; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == oracle::binomial_by_pascal(n, k));
}

TEST_CASE("binomial identities") {
    using hyperohm::binomial;
    for (unsigned n = 0; n <= 40; ++n)
        for (unsigned k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == binomial(n, static_cast<std::int64_t>(n - k)));
            if (k <= n - 1 && n >= 1)
                CHECK(binomial(n, k) * (n - k) == Count(n) * binomial(n - 1, k));
        }
    for (unsigned n = 0; n <= 64; ++n) {
        Count total = 0;
        for (unsigned k = 0; k <= n; ++k) total += binomial(n, k);
        CHECK(total == hyperohm::pow_int(2, n));
    }
}

TEST_CASE("factorial") {
    using hyperohm::factorial;
    CHECK(factorial(0) == 1);
    CHECK(factorial(3) == 6);
    CHECK(factorial(20) == Count("2432902008176640000"));
    for (unsigned n = 0; n <= 30; ++n)
        CHECK(factorial(n) == oracle::factorial_by_multiplication(n));
}

TEST_CASE("binomial rows and suffix sums") {
    auto row = hyperohm::binomial_row(4);
    CHECK(row == std::vector<Count>{1, 4, 6, 4, 1});
    auto suffix = hyperohm::binomial_suffix_sums(3);
    CHECK(suffix == std::vector<Count>{8, 7, 4, 1, 0});
}
