#pragma once
// sequences.hpp - the integer coefficient families: Stirling numbers of both
// kinds, Bell numbers d_l, preferential arrangements r_l and barred
// preferential arrangements s_l.
//
// Each of d, r, s is computable by independent routes (recurrence,
// Stirling-number sum, truncated infinite sum) which are cross-checked in the
// test suite. All functions are pure; tables are returned by value, so
// concurrent callers never share state.

#include <hyperohm/combinatorics.hpp>
#include <hyperohm/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperohm {

enum class SequenceKind { bell, fubini, barred };

// ---------------------------------------------------------------------------
// Stirling triangles (additive recurrences, one row at a time)
// ---------------------------------------------------------------------------

// Row l of the second-kind triangle: {l,0}, {l,1}, ..., {l,l}.
inline std::vector<Count> stirling2_row(unsigned l) {
    std::vector<Count> row{1};  // {0,0} = 1
    for (unsigned m = 1; m <= l; ++m) {
        std::vector<Count> next(m + 1);
        next[0] = 0;
        for (unsigned k = 1; k < m; ++k) next[k] = Count(k) * row[k] + row[k - 1];
        next[m] = 1;
        row = std::move(next);
    }
    return row;
}

// Rows 0..lmax of the second-kind triangle.
inline std::vector<std::vector<Count>> stirling2_rows(unsigned lmax) {
    std::vector<std::vector<Count>> rows;
    rows.reserve(lmax + 1);
    rows.push_back({1});
    for (unsigned m = 1; m <= lmax; ++m) {
        const auto& prev = rows.back();
        std::vector<Count> next(m + 1);
        next[0] = 0;
        for (unsigned k = 1; k < m; ++k) next[k] = Count(k) * prev[k] + prev[k - 1];
        next[m] = 1;
        rows.push_back(std::move(next));
    }
    return rows;
}

// {l,k}: partitions of an l-set into k nonempty blocks; 0 outside 0 <= k <= l.
inline Count stirling2(unsigned l, std::int64_t k) {
    if (k < 0 || k > static_cast<std::int64_t>(l)) return 0;
    return stirling2_row(l)[static_cast<size_t>(k)];
}

// Row l of the unsigned first-kind triangle: [l,0], ..., [l,l].
inline std::vector<Count> stirling1_row(unsigned l) {
    std::vector<Count> row{1};  // [0,0] = 1
    for (unsigned m = 1; m <= l; ++m) {
        std::vector<Count> next(m + 1);
        next[0] = 0;
        for (unsigned k = 1; k < m; ++k) next[k] = Count(m - 1) * row[k] + row[k - 1];
        next[m] = 1;
        row = std::move(next);
    }
    return row;
}

// [l,k]: permutations of l elements with exactly k cycles; 0 outside range.
inline Count stirling1_unsigned(unsigned l, std::int64_t k) {
    if (k < 0 || k > static_cast<std::int64_t>(l)) return 0;
    return stirling1_row(l)[static_cast<size_t>(k)];
}

// ---------------------------------------------------------------------------
// Bell / preferential arrangement / barred preferential arrangement numbers
// ---------------------------------------------------------------------------

// d_0..d_lmax by the recurrence d_l = sum_{k<l} C(l-1,k) d_k, d_0 = 1.
inline std::vector<Count> bell_table(unsigned lmax) {
    std::vector<Count> d(lmax + 1);
    d[0] = 1;
    for (unsigned l = 1; l <= lmax; ++l) {
        std::vector<Count> choose = binomial_row(l - 1);
        Count acc = 0;
        for (unsigned k = 0; k < l; ++k) acc += choose[k] * d[k];
        d[l] = std::move(acc);
    }
    return d;
}

// r_0..r_lmax by the recurrence r_l = sum_{k<l} C(l,k) r_k, r_0 = 1.
inline std::vector<Count> fubini_table(unsigned lmax) {
    std::vector<Count> r(lmax + 1);
    r[0] = 1;
    for (unsigned l = 1; l <= lmax; ++l) {
        std::vector<Count> choose = binomial_row(l);
        Count acc = 0;
        for (unsigned k = 0; k < l; ++k) acc += choose[k] * r[k];
        r[l] = std::move(acc);
    }
    return r;
}

// s_0..s_lmax by the binomial convolution s_l = sum_k C(l,k) r_k r_{l-k}.
inline std::vector<Count> barred_table(unsigned lmax) {
    std::vector<Count> r = fubini_table(lmax);
    std::vector<Count> s(lmax + 1);
    for (unsigned l = 0; l <= lmax; ++l) {
        std::vector<Count> choose = binomial_row(l);
        Count acc = 0;
        for (unsigned k = 0; k <= l; ++k) acc += choose[k] * r[k] * r[l - k];
        s[l] = std::move(acc);
    }
    return s;
}

inline Count bell(unsigned l) { return bell_table(l).back(); }
inline Count fubini(unsigned l) { return fubini_table(l).back(); }
inline Count barred(unsigned l) { return barred_table(l).back(); }

// Independent routes through the second-kind Stirling row:
//   d_l = sum_k {l,k},  r_l = sum_k {l,k} k!,  s_l = sum_k {l,k} (k+1)!.
inline Count stirling_sum(SequenceKind kind, unsigned l) {
    std::vector<Count> row = stirling2_row(l);
    Count acc = 0;
    Count kfact = 1;  // k!
    for (unsigned k = 0; k <= l; ++k) {
        switch (kind) {
            case SequenceKind::bell: acc += row[k]; break;
            case SequenceKind::fubini: acc += row[k] * kfact; break;
            case SequenceKind::barred: acc += row[k] * kfact * (k + 1); break;
        }
        kfact *= k + 1;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Truncated infinite-sum route (Dobinski-type)
// ---------------------------------------------------------------------------
//
// Evaluates the infinite-sum representation of d_l, r_l, or s_l with a
// certified tail bound tight enough that the enclosure [partial, partial +
// tail] contains exactly one integer, and returns that integer.
//
//   r_l = (1/2) sum_{n>=0} n^l / 2^n
//   s_l = (1/4) sum_{n>=0} (n+1) n^l / 2^n
//   d_l = (1/e) sum_{n>=0} n^l / n!
//
// Tail bounds: with N >= max(2l, 16) the term ratios are monotone
// decreasing, so the tail after N is dominated by a geometric series.
//   fubini:  t_{n+1}/t_n = ((n+1)/n)^l / 2       <= q := ((N+1)/N)^l / 2,
//            and (1+1/N)^l <= e^(l/N) <= e^(1/2) < 2 gives q < 1.
//   barred:  extra factor (n+2)/(n+1) <= (N+2)/(N+1); q < 0.88 for N >= 16.
//   bell:    t_{n+1}/t_n = ((n+1)/n)^l / (n+1)   <= e^(1/2)/(N+1) < 0.1.
// In each case tail <= t_{N+1} / (1 - q), computed exactly.

namespace detail {

// Unique integer in [lo, hi]; throws when the enclosure holds none or many.
inline Count unique_integer_in(const Rational& lo, const Rational& hi) {
    Int c = lo.ceil();
    if (Rational(c) > hi)
        throw std::runtime_error("dobinski_sum: enclosure contains no integer");
    if (Rational(c + 1) <= hi)
        throw std::runtime_error("dobinski_sum: enclosure is too wide");
    return c;
}

// (1/2) sum n^l/2^n  or  (1/4) sum (n+1) n^l/2^n, certified.
inline Count dobinski_power_sum(SequenceKind kind, unsigned l) {
    const bool with_shift = (kind == SequenceKind::barred);
    unsigned N = std::max(2 * l, 16u);
    auto term = [&](unsigned n) {
        Int numerator = pow_int(n, l);
        if (with_shift) numerator *= n + 1;
        return Rational(numerator, pow_int(2, n));
    };
    // advance until the current term has dropped below 1/4 (terms are already
    // past their peak at N = 2l, so this decreases monotonically)
    while (term(N) >= Rational(1, 4)) ++N;

    Rational partial(0);
    for (unsigned n = 0; n <= N; ++n) {
        Int numerator = (n == 0) ? Int(l == 0 ? 1 : 0) : pow_int(n, l);
        if (with_shift) numerator *= n + 1;
        partial += Rational(numerator, pow_int(2, n));
    }
    partial = partial * (with_shift ? Rational(1, 4) : Rational(1, 2));

    Rational q(pow_int(N + 1, l), pow_int(N, l) * 2);
    if (with_shift) q = q * Rational(N + 2, N + 1);
    if (q >= Rational(1))
        throw std::runtime_error("dobinski_sum: geometric ratio not < 1");
    Rational tail = term(N + 1) / (Rational(1) - q);
    tail = tail * (with_shift ? Rational(1, 4) : Rational(1, 2));

    return unique_integer_in(partial, partial + tail);
}

// (1/e) sum n^l/n! with scaled-integer fixed point: all bounds are exact
// rationals built from floor/ceil of scale-multiplied terms. Precision grows
// until the enclosure pins a single integer.
inline Count dobinski_bell_sum(unsigned l) {
    for (unsigned bits = 64 + 4 * l;; bits *= 2) {
        const Int scale = pow_int(2, bits);

        unsigned N = std::max(2 * l, 16u);
        // e^(1/2)/(N+1) < 1/10 for N >= 16; keep a crude rational stand-in
        const Rational q(1, 10);

        // scaled partial sum of sum n^l/n!, floor and ceil per term
        Int lo = 0, hi = 0;
        Int nfact = 1;
        Rational last_term(0);
        for (unsigned n = 0; n <= N; ++n) {
            if (n > 0) nfact *= n;
            Int numerator = (n == 0) ? Int(l == 0 ? 1 : 0) : pow_int(n, l);
            Int scaled = scale * numerator;
            Int f = scaled / nfact;
            lo += f;
            hi += (f * nfact == scaled) ? f : f + 1;
            if (n == N) last_term = Rational(numerator, nfact);
        }
        // tail of the true (unscaled) series after N
        Rational tail = last_term * q / (Rational(1) - q);
        Rational sum_lo(lo, scale);
        Rational sum_hi = Rational(hi, scale) + tail;

        // enclosure of e = sum 1/m!, truncated where (M+1)! >= 4*scale so the
        // scaled tail 2*scale/(M+1)! is below one unit
        unsigned M = 0;
        Int mfact = 1;  // M!
        while (mfact * (M + 1) < scale * 4) {
            mfact *= M + 1;
            ++M;
        }
        Int e_lo = 0, e_hi = 0;
        mfact = 1;
        for (unsigned m = 0; m <= M; ++m) {
            if (m > 0) mfact *= m;
            Int f = scale / mfact;
            e_lo += f;
            e_hi += (f * mfact == scale) ? f : f + 1;
        }
        e_hi += 1;  // the truncated tail of e, rounded up to one scaled unit
        Rational e_low(e_lo, scale), e_high(e_hi, scale);

        Rational value_lo = sum_lo / e_high;
        Rational value_hi = sum_hi / e_low;
        if (value_hi - value_lo < Rational(1, 2))
            return unique_integer_in(value_lo, value_hi);
        // otherwise retry with doubled precision
    }
}

}  // namespace detail

inline Count dobinski_sum(SequenceKind kind, unsigned l) {
    if (kind == SequenceKind::bell) return detail::dobinski_bell_sum(l);
    return detail::dobinski_power_sum(kind, l);
}

// ---------------------------------------------------------------------------
// Named sequence tables
// ---------------------------------------------------------------------------

struct SequenceTable {
    std::string name;
    unsigned start_index = 0;
    std::vector<Count> values;
};

// First `count` values of a named integer sequence. The Stirling triangles
// are emitted flattened by rows (l >= 0, 0 <= k <= l), matching the usual
// b-file layout for triangles.
inline SequenceTable sequence_table(const std::string& name, unsigned count) {
    if (count == 0) throw std::invalid_argument("sequence_table: count must be >= 1");
    SequenceTable table{name, 0, {}};
    if (name == "bell") {
        table.values = bell_table(count - 1);
    } else if (name == "fubini") {
        table.values = fubini_table(count - 1);
    } else if (name == "barred") {
        table.values = barred_table(count - 1);
    } else if (name == "stirling1" || name == "stirling2") {
        const bool second = (name == "stirling2");
        for (unsigned l = 0; table.values.size() < count; ++l) {
            auto row = second ? stirling2_row(l) : stirling1_row(l);
            for (auto& v : row) {
                if (table.values.size() == count) break;
                table.values.push_back(std::move(v));
            }
        }
    } else {
        throw std::invalid_argument("sequence_table: unknown sequence '" + name + "'");
    }
    return table;
}

}  // namespace hyperohm
