#pragma once
// series.hpp - order-limited power series with exact rational coefficients.
//
// A TruncatedSeries of order m carries coefficients of z^0..z^m and is
// flagged ordinary or exponential. The flag changes nothing about the stored
// coefficients; it fixes how a sequence is read off: an ordinary series
// encodes a_l directly, an exponential one encodes a_l = l! * c_l. Combining
// two series truncates to the smaller order.

#include <hyperohm/rational.hpp>
#include <hyperohm/sequences.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hyperohm {

enum class SeriesKind { ordinary, exponential };

class TruncatedSeries {
public:
    TruncatedSeries(SeriesKind kind, std::vector<Rational> coefficients)
        : kind_(kind), coeff_(std::move(coefficients)) {
        if (coeff_.empty())
            throw std::invalid_argument("TruncatedSeries: needs at least the z^0 coefficient");
    }

    static TruncatedSeries zero(SeriesKind kind, unsigned order) {
        return TruncatedSeries(kind, std::vector<Rational>(order + 1));
    }
    static TruncatedSeries constant(SeriesKind kind, const Rational& c, unsigned order) {
        std::vector<Rational> v(order + 1);
        v[0] = c;
        return TruncatedSeries(kind, std::move(v));
    }

    SeriesKind kind() const noexcept { return kind_; }
    unsigned order() const noexcept { return static_cast<unsigned>(coeff_.size()) - 1; }
    const Rational& coeff(unsigned i) const { return coeff_.at(i); }
    const std::vector<Rational>& coefficients() const noexcept { return coeff_; }

    bool is_zero() const {
        return std::all_of(coeff_.begin(), coeff_.end(),
                           [](const Rational& c) { return c.is_zero(); });
    }

private:
    SeriesKind kind_;
    std::vector<Rational> coeff_;
};

namespace detail {
inline void require_same_kind(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.kind() != b.kind())
        throw std::invalid_argument("series kind mismatch (ordinary vs exponential)");
}
}  // namespace detail

inline TruncatedSeries truncated(const TruncatedSeries& s, unsigned order) {
    if (order >= s.order()) return s;
    std::vector<Rational> c(s.coefficients().begin(), s.coefficients().begin() + order + 1);
    return TruncatedSeries(s.kind(), std::move(c));
}

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    detail::require_same_kind(a, b);
    unsigned order = std::min(a.order(), b.order());
    std::vector<Rational> c(order + 1);
    for (unsigned i = 0; i <= order; ++i) c[i] = a.coeff(i) + b.coeff(i);
    return TruncatedSeries(a.kind(), std::move(c));
}

inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    detail::require_same_kind(a, b);
    unsigned order = std::min(a.order(), b.order());
    std::vector<Rational> c(order + 1);
    for (unsigned i = 0; i <= order; ++i) c[i] = a.coeff(i) - b.coeff(i);
    return TruncatedSeries(a.kind(), std::move(c));
}

// Truncated Cauchy product. For exponential series this realizes the
// binomial convolution of the encoded sequences.
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    detail::require_same_kind(a, b);
    unsigned order = std::min(a.order(), b.order());
    std::vector<Rational> c(order + 1);
    for (unsigned i = 0; i <= order; ++i)
        for (unsigned j = 0; i + j <= order; ++j)
            if (!a.coeff(i).is_zero() && !b.coeff(j).is_zero())
                c[i + j] += a.coeff(i) * b.coeff(j);
    return TruncatedSeries(a.kind(), std::move(c));
}

inline TruncatedSeries operator*(const Rational& scalar, const TruncatedSeries& s) {
    std::vector<Rational> c(s.coefficients());
    for (auto& x : c) x = x * scalar;
    return TruncatedSeries(s.kind(), std::move(c));
}

// log(1/(1 - c z)) = sum_{k>=1} c^k z^k / k, truncated.
inline TruncatedSeries log_inv_one_minus(const Rational& c, unsigned order,
                                         SeriesKind kind = SeriesKind::ordinary) {
    std::vector<Rational> v(order + 1);
    Rational ck(1);
    for (unsigned k = 1; k <= order; ++k) {
        ck = ck * c;
        v[k] = ck / Rational(k);
    }
    return TruncatedSeries(kind, std::move(v));
}

// Geometric series 1/(1 - c z), truncated.
inline TruncatedSeries geometric(const Rational& c, unsigned order,
                                 SeriesKind kind = SeriesKind::ordinary) {
    std::vector<Rational> v(order + 1);
    v[0] = Rational(1);
    for (unsigned k = 1; k <= order; ++k) v[k] = v[k - 1] * c;
    return TruncatedSeries(kind, std::move(v));
}

// Multiplicative inverse of a series with nonzero constant coefficient, by
// the direct convolution recurrence b_n = -(1/a_0) sum_{j=1..n} a_j b_{n-j}.
inline TruncatedSeries inverse(const TruncatedSeries& a) {
    if (a.coeff(0).is_zero())
        throw std::domain_error("series inverse: constant coefficient is zero");
    unsigned order = a.order();
    std::vector<Rational> b(order + 1);
    b[0] = Rational(1) / a.coeff(0);
    for (unsigned n = 1; n <= order; ++n) {
        Rational acc(0);
        for (unsigned j = 1; j <= n; ++j) acc += a.coeff(j) * b[n - j];
        b[n] = -acc / a.coeff(0);
    }
    return TruncatedSeries(a.kind(), std::move(b));
}

// exp of a series with zero constant coefficient, via the first-order ODE
// recurrence: B = exp(A) satisfies B' = A'B, i.e.
// (n+1) b_{n+1} = sum_{j=0..n} (j+1) a_{j+1} b_{n-j}.
inline TruncatedSeries exp_of(const TruncatedSeries& a) {
    if (!a.coeff(0).is_zero())
        throw std::domain_error("series exp: constant coefficient must be zero");
    unsigned order = a.order();
    std::vector<Rational> b(order + 1);
    b[0] = Rational(1);
    for (unsigned n = 0; n + 1 <= order; ++n) {
        Rational acc(0);
        for (unsigned j = 0; j <= n; ++j)
            acc += Rational(j + 1) * a.coeff(j + 1) * b[n - j];
        b[n + 1] = acc / Rational(n + 1);
    }
    return TruncatedSeries(a.kind(), std::move(b));
}

// Formal derivative; the result has order-1 (a constant differentiates to
// the zero series of order 0). On an exponential series this shifts the
// encoded sequence by one: the result encodes a_{l+1}.
inline TruncatedSeries derivative(const TruncatedSeries& s) {
    if (s.order() == 0) return TruncatedSeries::zero(s.kind(), 0);
    std::vector<Rational> c(s.order());
    for (unsigned n = 0; n + 1 <= s.order(); ++n)
        c[n] = Rational(n + 1) * s.coeff(n + 1);
    return TruncatedSeries(s.kind(), std::move(c));
}

// e^z truncated (exponential kind: it encodes the all-ones sequence).
inline TruncatedSeries exp_z(unsigned order) {
    std::vector<Rational> v(order + 1);
    Int fact = 1;
    v[0] = Rational(1);
    for (unsigned l = 1; l <= order; ++l) {
        fact *= l;
        v[l] = Rational(Int(1), fact);
    }
    return TruncatedSeries(SeriesKind::exponential, std::move(v));
}

// ---------------------------------------------------------------------------
// Sequence extraction
// ---------------------------------------------------------------------------

struct SeriesTerm {
    unsigned index;
    Rational coefficient;
    // For exponential series: l! * c_l when that is an integer.
    // For ordinary series: c_l itself when integral.
    std::optional<Count> sequence_value;
};

inline std::vector<SeriesTerm> extract_terms(const TruncatedSeries& s) {
    std::vector<SeriesTerm> out;
    out.reserve(s.order() + 1);
    Int fact = 1;
    for (unsigned l = 0; l <= s.order(); ++l) {
        if (l > 0) fact *= l;
        SeriesTerm t{l, s.coeff(l), std::nullopt};
        Rational scaled = (s.kind() == SeriesKind::exponential)
                              ? s.coeff(l) * Rational(fact)
                              : s.coeff(l);
        t.sequence_value = scaled.as_integer();
        out.push_back(std::move(t));
    }
    return out;
}

// l! * c_l of an exponential series, required to be an integer.
inline Count egf_sequence_value(const TruncatedSeries& s, unsigned l) {
    if (s.kind() != SeriesKind::exponential)
        throw std::invalid_argument("egf_sequence_value: series is not exponential");
    Rational scaled = s.coeff(l) * Rational(factorial(l));
    auto v = scaled.as_integer();
    if (!v) throw std::domain_error("egf_sequence_value: coefficient * l! is not an integer");
    return *v;
}

// ---------------------------------------------------------------------------
// The generating functions realized by this library
// ---------------------------------------------------------------------------

// R(z) = log(1/(1-z)) / (1 - z/2); coefficient n is the long-diagonal
// hypercube resistance R_n.
inline TruncatedSeries gf_r(unsigned order) {
    return geometric(Rational(1, 2), order) * log_inv_one_minus(Rational(1), order);
}

// S(z) = 1/((1-z)(1-z/2)) + log(1/(1-z)) / (2 (1-z/2)^2); coefficient n is
// the reciprocal-binomial sum S_n. Equals the derivative of R(z).
inline TruncatedSeries gf_s(unsigned order) {
    TruncatedSeries half_geo = geometric(Rational(1, 2), order);
    TruncatedSeries first = geometric(Rational(1), order) * half_geo;
    TruncatedSeries second = half_geo * half_geo * log_inv_one_minus(Rational(1), order);
    return first + Rational(1, 2) * second;
}

// Exponential generating functions e^(e^z - 1), 1/(2 - e^z), 1/(2 - e^z)^2
// for the Bell, preferential-arrangement, and barred families.
inline TruncatedSeries egf_family(SequenceKind which, unsigned order) {
    switch (which) {
        case SequenceKind::bell: {
            TruncatedSeries expm1 = exp_z(order) - TruncatedSeries::constant(
                                        SeriesKind::exponential, Rational(1), order);
            return exp_of(expm1);
        }
        case SequenceKind::fubini: {
            TruncatedSeries two_minus_exp =
                TruncatedSeries::constant(SeriesKind::exponential, Rational(2), order) -
                exp_z(order);
            return inverse(two_minus_exp);
        }
        case SequenceKind::barred: {
            TruncatedSeries r = egf_family(SequenceKind::fubini, order);
            return r * r;
        }
    }
    throw std::logic_error("egf_family: unreachable");
}

// Residual of r'(z) + r(z) - 2 r(z)^2 where r(z) = 1/(2 - e^z). The returned
// series has order `order` - 1 (the derivative consumes the top coefficient);
// every returned coefficient is exactly zero.
inline TruncatedSeries riccati_residual(unsigned order) {
    if (order == 0)
        throw std::invalid_argument("riccati_residual: order must be >= 1");
    TruncatedSeries r = egf_family(SequenceKind::fubini, order);
    TruncatedSeries dr = derivative(r);               // order-1
    TruncatedSeries r2 = truncated(r * r, order - 1);
    return dr + truncated(r, order - 1) - Rational(2) * r2;
}

}  // namespace hyperohm
