#pragma once
// resistance.hpp - closed-form exact resistances of the n-dimensional
// hypercube of 1-ohm resistors: long-diagonal R_n, the companion sum S_n of
// reciprocal binomial coefficients, the general-distance R_{n,k}, and the
// forward difference in k.
//
// R_n and S_n each have two algebraically equivalent forms. The harmonic
// form sums reciprocal binomials; the power form sums 2^k over k (or k+1).
// The power form is evaluated by divide and conquer with the leading power
// of two factored out of each block, which keeps intermediate numerators
// proportional to the block width and makes single evaluations at n ~ 10^6
// cheap. Both forms are exposed and cross-checked in the tests.

#include <hyperohm/combinatorics.hpp>
#include <hyperohm/rational.hpp>

#include <stdexcept>

namespace hyperohm {

struct ResistanceQuery {
    unsigned n = 1;  // dimension, >= 1
    unsigned k = 0;  // Hamming distance, 0 <= k <= n
};

namespace detail {

// sum_{k=lo}^{hi} 2^(k-lo) / (k + shift), divide and conquer
inline Rational power_over_index_sum(unsigned lo, unsigned hi, unsigned shift) {
    if (lo == hi) return Rational(1, lo + shift);
    unsigned mid = lo + (hi - lo) / 2;
    Rational left = power_over_index_sum(lo, mid, shift);
    Rational right = power_over_index_sum(mid + 1, hi, shift);
    return left + Rational(pow_int(2, mid + 1 - lo)) * right;
}

}  // namespace detail

// R_n = (1/n) sum_{0<=k<=n-1} 1/C(n-1,k): the harmonic-triangle row sum.
inline Rational resistance_diagonal(unsigned n) {
    if (n == 0)
        throw std::domain_error(
            "resistance_diagonal: n must be >= 1 (the distance-0 query is resistance_pair "
            "with k = 0)");
    std::vector<Count> row = binomial_row(n - 1);
    Rational acc(0);
    for (unsigned k = 0; k < n; ++k) acc += Rational(Int(1), row[k]);
    return acc / Rational(n);
}

// R_n = (1/2^n) sum_{1<=k<=n} 2^k/k: the power form.
inline Rational resistance_diagonal_alt(unsigned n) {
    if (n == 0) throw std::domain_error("resistance_diagonal_alt: n must be >= 1");
    Rational sum = Rational(2) * detail::power_over_index_sum(1, n, 0);
    return sum / Rational(pow_int(2, n));
}

// S_n = sum_{0<=k<=n} 1/C(n,k).
inline Rational companion_sum(unsigned n) {
    std::vector<Count> row = binomial_row(n);
    Rational acc(0);
    for (unsigned k = 0; k <= n; ++k) acc += Rational(Int(1), row[k]);
    return acc;
}

// S_n = ((n+1)/2^n) sum_{0<=k<=n} 2^k/(k+1): the power form.
inline Rational companion_sum_alt(unsigned n) {
    Rational sum = detail::power_over_index_sum(0, n, 1);
    return Rational(Int(n) + 1, pow_int(2, n)) * sum;
}

// R_{n,k}: resistance between vertices at Hamming distance k in the
// n-dimensional hypercube,
//   R_{n,k} = (2/n) sum_{0<=j<=k-1} [1/C(n-1,j)] * [sum_{j<i<=n} C(n,i)] / 2^n.
// The two juxtaposed sums multiply termwise in j, with the 1/2^n factor
// applied to each inner suffix sum; the k = n case collapses to R_n, which
// the oracle suite confirms cell by cell.
inline Rational resistance_pair(const ResistanceQuery& q) {
    if (q.n == 0) throw std::domain_error("resistance_pair: n must be >= 1");
    if (q.k > q.n) throw std::domain_error("resistance_pair: k must satisfy 0 <= k <= n");
    if (q.k == 0) return Rational(0);
    std::vector<Count> outer = binomial_row(q.n - 1);
    std::vector<Count> suffix = binomial_suffix_sums(q.n);  // suffix[j] = sum_{i>=j} C(n,i)
    const Int two_n = pow_int(2, q.n);
    Rational acc(0);
    for (unsigned j = 0; j < q.k; ++j)
        acc += Rational(Int(1), outer[j]) * Rational(suffix[j + 1], two_n);
    return Rational(Int(2), Int(q.n)) * acc;
}

inline Rational resistance_pair(unsigned n, unsigned k) {
    return resistance_pair(ResistanceQuery{n, k});
}

// Forward difference R_{n,k} - R_{n,k-1} in closed form,
//   [1/(n 2^(n-1))] * [1/C(n-1,k-1)] * sum_{k<=i<=n} C(n,i),
// strictly positive for 1 <= k <= n.
inline Rational forward_difference(unsigned n, unsigned k) {
    if (n == 0 || k == 0 || k > n)
        throw std::domain_error("forward_difference: need 1 <= k <= n");
    std::vector<Count> suffix = binomial_suffix_sums(n);
    Rational coeff(Int(1), Int(n) * pow_int(2, n - 1));
    return coeff * Rational(suffix[k], binomial(n - 1, static_cast<std::int64_t>(k) - 1));
}

}  // namespace hyperohm
