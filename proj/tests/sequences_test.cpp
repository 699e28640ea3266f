#include <hyperohm/sequences.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "brute_force.hpp"

using hyperohm::Count;
using hyperohm::Rational;
using hyperohm::SequenceKind;

namespace {
const std::vector<Count> kBell = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
const std::vector<Count> kFubini = {1, 1, 3, 13, 75, 541, 4683, 47293, 545835};
const std::vector<Count> kBarred = {1, 2, 8, 44, 308, 2612, 25988, 296564, 3816548};
}  // namespace

TEST_CASE("second-kind Stirling numbers") {
    using hyperohm::stirling2;
    CHECK(stirling2(3, 1) == 1);
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(3, 3) == 1);
    CHECK(stirling2(9, 4) == 7770);
    CHECK(stirling2(12, 12) == 1);
    CHECK(stirling2(5, 0) == 0);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(4, -1) == 0);
    CHECK(stirling2(4, 5) == 0);
}

TEST_CASE("second-kind Stirling vs set-partition enumeration") {
    for (unsigned l = 0; l <= 9; ++l)
        for (unsigned k = 0; k <= l; ++k)
            CHECK(hyperohm::stirling2(l, k) == oracle::stirling2_by_enumeration(l, k));
}

TEST_CASE("first-kind Stirling numbers") {
    using hyperohm::stirling1_unsigned;
    CHECK(stirling1_unsigned(3, 1) == 2);
    CHECK(stirling1_unsigned(3, 2) == 3);
    CHECK(stirling1_unsigned(3, 3) == 1);
    CHECK(stirling1_unsigned(6, 3) == 225);
    CHECK(stirling1_unsigned(5, 0) == 0);
    CHECK(stirling1_unsigned(0, 0) == 1);
    CHECK(stirling1_unsigned(4, 7) == 0);
}

TEST_CASE("first-kind Stirling vs permutation cycle counting") {
    for (unsigned l = 0; l <= 7; ++l)
        for (unsigned k = 0; k <= l; ++k)
            CHECK(hyperohm::stirling1_unsigned(l, k) == oracle::stirling1_by_enumeration(l, k));
}

TEST_CASE("first-kind rows sum to l!") {
    for (unsigned l = 0; l <= 30; ++l) {
        Count total = 0;
        for (const Count& v : hyperohm::stirling1_row(l)) total += v;
        CHECK(total == hyperohm::factorial(l));
    }
}

// z^l = sum_k {l,k} z(z-1)...(z-k+1), checked pointwise at z = 0..12
TEST_CASE("second-kind reconstruction of powers from falling factorials") {
    for (unsigned l = 0; l <= 12; ++l) {
        auto row = hyperohm::stirling2_row(l);
        for (int z = 0; z <= 12; ++z) {
            Count rhs = 0;
            for (unsigned k = 0; k <= l; ++k) {
                Count falling = 1;
                for (unsigned i = 0; i < k; ++i) falling *= z - static_cast<int>(i);
                rhs += row[k] * falling;
            }
            CHECK(rhs == hyperohm::pow_int(z, l));
        }
    }
}

// z(z-1)...(z-l+1) = sum_k (-1)^(l-k) [l,k] z^k, compared as polynomials
TEST_CASE("first-kind expansion of the falling factorial") {
    using hyperohm::Int;
    for (unsigned l = 0; l <= 12; ++l) {
        // coefficients of z(z-1)...(z-l+1), built by repeated multiplication
        std::vector<Int> poly{1};
        for (unsigned j = 0; j < l; ++j) {
            std::vector<Int> next(poly.size() + 1, Int(0));
            for (size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] += poly[i];
                next[i] -= poly[i] * Int(j);
            }
            poly = std::move(next);
        }
        auto row = hyperohm::stirling1_row(l);
        for (unsigned k = 0; k <= l; ++k) {
            Int expected = ((l - k) % 2 == 0) ? Int(row[k]) : Int(-row[k]);
            CHECK(poly[k] == expected);
        }
    }
}

TEST_CASE("table values match the classical tables") {
    CHECK(hyperohm::bell_table(8) == kBell);
    CHECK(hyperohm::fubini_table(8) == kFubini);
    CHECK(hyperohm::barred_table(8) == kBarred);
    CHECK(hyperohm::bell(3) == 5);
    CHECK(hyperohm::bell(0) == 1);
    CHECK(hyperohm::fubini(3) == 13);
    CHECK(hyperohm::fubini(0) == 1);
    CHECK(hyperohm::barred(3) == 44);
    CHECK(hyperohm::barred(0) == 1);
}

TEST_CASE("fubini vs direct enumeration of ordered set partitions") {
    for (unsigned l = 0; l <= 7; ++l)
        CHECK(hyperohm::fubini(l) == oracle::fubini_by_enumeration(l));
}

TEST_CASE("recurrence and Stirling-sum routes agree") {
    const unsigned kMax = 120;
    auto d = hyperohm::bell_table(kMax);
    auto r = hyperohm::fubini_table(kMax);
    auto s = hyperohm::barred_table(kMax);
    for (unsigned l = 0; l <= kMax; ++l) {
        CHECK(hyperohm::stirling_sum(SequenceKind::bell, l) == d[l]);
        CHECK(hyperohm::stirling_sum(SequenceKind::fubini, l) == r[l]);
        CHECK(hyperohm::stirling_sum(SequenceKind::barred, l) == s[l]);
    }
}

TEST_CASE("infinite-sum route agrees with the recurrences") {
    auto d = hyperohm::bell_table(20);
    auto r = hyperohm::fubini_table(20);
    auto s = hyperohm::barred_table(20);
    for (unsigned l = 0; l <= 20; ++l) {
        CHECK(hyperohm::dobinski_sum(SequenceKind::bell, l) == d[l]);
        CHECK(hyperohm::dobinski_sum(SequenceKind::fubini, l) == r[l]);
        CHECK(hyperohm::dobinski_sum(SequenceKind::barred, l) == s[l]);
    }
}

TEST_CASE("infinite-sum examples") {
    CHECK(hyperohm::dobinski_sum(SequenceKind::fubini, 3) == 13);
    CHECK(hyperohm::dobinski_sum(SequenceKind::bell, 0) == 1);
    CHECK(hyperohm::dobinski_sum(SequenceKind::barred, 5) == 2612);
}

// 2 r_l = [l = 0] + sum_{j<=l} C(l,j) r_j: adding r_l to its own recurrence
TEST_CASE("doubling identity for the preferential arrangements") {
    const unsigned kMax = 120;
    auto r = hyperohm::fubini_table(kMax);
    for (unsigned l = 0; l <= kMax; ++l) {
        Count acc = (l == 0) ? 1 : 0;
        auto choose = hyperohm::binomial_row(l);
        for (unsigned j = 0; j <= l; ++j) acc += choose[j] * r[j];
        CHECK(acc == Count(2) * r[l]);
    }
}

// r_{l+1} = sum_k C(l,k) s_k and r_l + r_{l+1} = 2 s_l
TEST_CASE("identities linking r and s") {
    const unsigned kMax = 120;
    auto r = hyperohm::fubini_table(kMax + 1);
    auto s = hyperohm::barred_table(kMax);
    for (unsigned l = 0; l <= kMax; ++l) {
        Count conv = 0;
        auto choose = hyperohm::binomial_row(l);
        for (unsigned k = 0; k <= l; ++k) conv += choose[k] * s[k];
        CHECK(conv == r[l + 1]);
        CHECK(r[l] + r[l + 1] == Count(2) * s[l]);
    }
}

TEST_CASE("sequence tables for the CLI") {
    auto t = hyperohm::sequence_table("fubini", 9);
    CHECK(t.values == kFubini);
    CHECK(t.start_index == 0);
    // Stirling triangles come out flattened by rows
    auto s2 = hyperohm::sequence_table("stirling2", 10);
    CHECK(s2.values == std::vector<Count>{1, 0, 1, 0, 1, 1, 0, 1, 3, 1});
    auto s1 = hyperohm::sequence_table("stirling1", 10);
    CHECK(s1.values == std::vector<Count>{1, 0, 1, 0, 1, 1, 0, 2, 3, 1});
    CHECK_THROWS_AS(hyperohm::sequence_table("nope", 3), std::invalid_argument);
    CHECK_THROWS_AS(hyperohm::sequence_table("bell", 0), std::invalid_argument);
}
