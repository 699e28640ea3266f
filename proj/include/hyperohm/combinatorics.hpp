#pragma once
// combinatorics.hpp - binomial coefficients, factorials, binomial row sums.

#include <hyperohm/rational.hpp>

#include <cstdint>
#include <vector>

namespace hyperohm {

// C(n, k), zero outside 0 <= k <= n. Multiplicative formula with interleaved
// exact division; every intermediate quotient is itself a binomial
// coefficient, so the divisions are exact.
inline Count binomial(unsigned n, std::int64_t k) {
    if (k < 0 || k > static_cast<std::int64_t>(n)) return 0;
    auto kk = static_cast<unsigned>(k);
    if (kk > n - kk) kk = n - kk;
    Count result = 1;
    for (unsigned i = 0; i < kk; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

inline Count factorial(unsigned n) {
    Count result = 1;
    for (unsigned i = 2; i <= n; ++i) result *= i;
    return result;
}

// Row n of the arithmetic triangle: C(n, 0..n).
inline std::vector<Count> binomial_row(unsigned n) {
    std::vector<Count> row(n + 1);
    row[0] = 1;
    for (unsigned k = 1; k <= n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
    return row;
}

// suffix[j] = sum_{i=j}^{n} C(n, i); suffix has n+2 entries, suffix[n+1] = 0.
inline std::vector<Count> binomial_suffix_sums(unsigned n) {
    std::vector<Count> row = binomial_row(n);
    std::vector<Count> suffix(n + 2);
    suffix[n + 1] = 0;
    for (unsigned j = n + 1; j-- > 0;) suffix[j] = suffix[j + 1] + row[j];
    return suffix;
}

}  // namespace hyperohm
