#include <hyperohm/asymptotics.hpp>

#include <catch2/catch_amalgamated.hpp>

using hyperohm::ExpansionTarget;
using hyperohm::Rational;

TEST_CASE("truncated expansion values") {
    using hyperohm::asym_partial;
    for (unsigned n : {1u, 5u, 17u}) {
        CHECK(asym_partial(ExpansionTarget::R, n, 0) == Rational(2, static_cast<int>(n)));
        CHECK(asym_partial(ExpansionTarget::S, n, 0) == Rational(2));
    }
    // (2/10)(1 + 1/10 + 3/100) with r_0, r_1, r_2 = 1, 1, 3
    CHECK(asym_partial(ExpansionTarget::R, 10, 2) == Rational(113, 500));
    CHECK_THROWS_AS(asym_partial(ExpansionTarget::R, 0, 2), std::domain_error);
    CHECK_THROWS_AS(asym_partial(ExpansionTarget::debruijn, 4, 1), std::invalid_argument);
}

TEST_CASE("normalized factorial sums") {
    using hyperohm::debruijn_sum;
    CHECK(debruijn_sum(1) == Rational(2));
    CHECK(debruijn_sum(2) == Rational(2));
    CHECK(debruijn_sum(3) == Rational(5, 3));
    CHECK_THROWS_AS(debruijn_sum(0), std::domain_error);
}

TEST_CASE("falling-power expansions match Stirling coefficients") {
    using hyperohm::falling_power_expansion_check;
    CHECK(falling_power_expansion_check(1, 6));   // plain geometric series
    CHECK(falling_power_expansion_check(2, 5));   // coefficients 2,6,14,30 = 2*{l,2}
    CHECK(falling_power_expansion_check(3, 3));   // leading coefficient 3!*{3,3} = 6
    CHECK(falling_power_expansion_check(4, 12));
    CHECK_THROWS_AS(falling_power_expansion_check(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(falling_power_expansion_check(3, 2), std::invalid_argument);

    // the first few second-kind coefficients behind those checks
    CHECK(hyperohm::stirling2(2, 2) * 2 == 2);
    CHECK(hyperohm::stirling2(3, 2) * 2 == 6);
    CHECK(hyperohm::stirling2(4, 2) * 2 == 14);
    CHECK(hyperohm::stirling2(5, 2) * 2 == 30);
}

TEST_CASE("truncation error of the R expansion is positive past the boundary regime") {
    auto r = hyperohm::fubini_table(7);
    for (unsigned n = 2; n <= 200; ++n)
        for (unsigned k = 0; k <= 6; ++k) {
            // positivity needs n comfortably past both k+2 and 2k; at the
            // boundary (6,3), (7,4), (8,5), (9,5), (9,6), (10,6) the sign
            // genuinely flips, so the regime below is the sharp one
            if (n <= std::max(k + 2, 2 * k)) continue;
            Rational err = hyperohm::resistance_diagonal(n) -
                           hyperohm::asym_partial(ExpansionTarget::R, n, k);
            CHECK(err > Rational(0));
        }
}

TEST_CASE("envelope reports") {
    using hyperohm::error_envelope;
    auto rep = error_envelope(ExpansionTarget::R, 3, {256});
    CHECK(rep.limiting_coefficient == 75);
    // within 10% of r_4 = 75
    Rational ratio = rep.scaled_errors.front() / Rational(rep.limiting_coefficient);
    CHECK(ratio > Rational(9, 10));
    CHECK(ratio < Rational(11, 10));

    CHECK_THROWS_AS(error_envelope(ExpansionTarget::R, 3, {}), std::invalid_argument);
    CHECK_THROWS_AS(error_envelope(ExpansionTarget::R, 3, {4}), std::domain_error);
    CHECK_THROWS_AS(error_envelope(ExpansionTarget::R, 3, {256, 0}), std::domain_error);
}

TEST_CASE("degenerate small sample is reported, not rejected") {
    // S_1/2 = 1 sits exactly one s_0/n step below the k = 0 partial sum
    auto rep = hyperohm::error_envelope(ExpansionTarget::S, 0, {1});
    CHECK(rep.scaled_errors.front() == Rational(1));
}

TEST_CASE("scaled errors settle onto the next coefficient") {
    const std::vector<unsigned> grid = {64, 128, 256, 512};
    for (ExpansionTarget target :
         {ExpansionTarget::R, ExpansionTarget::S, ExpansionTarget::debruijn}) {
        for (unsigned k = 0; k <= 4; ++k) {
            auto rep = hyperohm::error_envelope(target, k, grid);
            Rational limit(rep.limiting_coefficient);
            for (size_t i = 0; i + 1 < rep.scaled_errors.size(); ++i) {
                CHECK(rep.scaled_errors[i] > rep.scaled_errors[i + 1]);
                CHECK(rep.scaled_errors[i] > limit);
            }
            Rational ratio = rep.scaled_errors.back() / limit;
            CHECK(ratio >= Rational(9, 10));
            CHECK(ratio <= Rational(11, 10));
        }
    }
}

TEST_CASE("scaled error at n = 10^6 pins the first coefficient to within 1%") {
    auto rep = hyperohm::error_envelope(ExpansionTarget::R, 0, {1000000});
    Rational ratio = rep.scaled_errors.front() / Rational(rep.limiting_coefficient);
    CHECK(rep.limiting_coefficient == 1);
    CHECK(ratio > Rational(99, 100));
    CHECK(ratio < Rational(101, 100));
}
