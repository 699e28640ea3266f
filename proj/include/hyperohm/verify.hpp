#pragma once
// verify.hpp - the runnable verification suites behind `hyperohm verify`.
//
// Each suite returns one CheckResult per property, with the bound it ran at
// and the first counterexample when it fails. Every comparison is exact; no
// check consumes a floating-point tolerance.

#include <hyperohm/asymptotics.hpp>
#include <hyperohm/laplacian.hpp>
#include <hyperohm/resistance.hpp>
#include <hyperohm/sequences.hpp>
#include <hyperohm/series.hpp>

#include <functional>
#include <string>
#include <vector>

namespace hyperohm {

struct CheckResult {
    std::string name;
    std::string bound;
    bool pass = true;
    std::string counterexample;  // empty when passing
};

namespace detail {

// Run `body` over a half-open integer range, recording the first failure.
inline CheckResult scan_check(std::string name, std::string bound, unsigned lo, unsigned hi,
                              const std::function<bool(unsigned, std::string&)>& body) {
    CheckResult r{std::move(name), std::move(bound), true, {}};
    for (unsigned i = lo; i <= hi && r.pass; ++i) {
        std::string why;
        if (!body(i, why)) {
            r.pass = false;
            r.counterexample = why;
        }
    }
    return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// identities suite
// ---------------------------------------------------------------------------

struct IdentityBounds {
    unsigned max_n = 200;  // index bound for R_n / S_n recurrences
    unsigned max_l = 300;  // index bound for sequence identities
    unsigned order = 64;   // truncation order for series identities
};

inline std::vector<CheckResult> verify_identities(const IdentityBounds& b = {}) {
    std::vector<CheckResult> out;
    const std::string n_bound = "n <= " + std::to_string(b.max_n);
    const std::string l_bound = "l <= " + std::to_string(b.max_l);
    const std::string o_bound = "order " + std::to_string(b.order);

    // R_n = S_{n-1}/n and S_n = (n+1) R_{n+1}
    out.push_back(detail::scan_check(
        "linkage", n_bound, 1, b.max_n, [](unsigned n, std::string& why) {
            if (resistance_diagonal(n) != companion_sum(n - 1) / Rational(Int(n))) {
                why = "R_n != S_(n-1)/n at n=" + std::to_string(n);
                return false;
            }
            if (companion_sum(n - 1) != Rational(Int(n)) * resistance_diagonal(n)) {
                why = "S_(n-1) != n R_n at n=" + std::to_string(n);
                return false;
            }
            return true;
        }));

    // R_n = R_{n-1}/2 + 1/n, base R_1 = 1
    out.push_back(detail::scan_check(
        "halving-recurrence-R", n_bound, 1, b.max_n, [](unsigned n, std::string& why) {
            Rational expect = (n == 1) ? Rational(1)
                                       : resistance_diagonal(n - 1) / Rational(2) +
                                             Rational(Int(1), Int(n));
            if (resistance_diagonal(n) != expect) {
                why = "n=" + std::to_string(n);
                return false;
            }
            return true;
        }));

    // S_n = ((n+1)/2n) S_{n-1} + 1, base S_0 = 1
    out.push_back(detail::scan_check(
        "scaling-recurrence-S", n_bound, 0, b.max_n, [](unsigned n, std::string& why) {
            Rational expect = (n == 0) ? Rational(1)
                                       : Rational(Int(n) + 1, Int(2) * Int(n)) *
                                                 companion_sum(n - 1) +
                                             Rational(1);
            if (companion_sum(n) != expect) {
                why = "n=" + std::to_string(n);
                return false;
            }
            return true;
        }));

    // harmonic form == power form, for both families
    out.push_back(detail::scan_check(
        "power-form-R", n_bound, 1, b.max_n, [](unsigned n, std::string& why) {
            if (resistance_diagonal(n) != resistance_diagonal_alt(n)) {
                why = "n=" + std::to_string(n);
                return false;
            }
            return true;
        }));
    out.push_back(detail::scan_check(
        "power-form-S", n_bound, 0, b.max_n, [](unsigned n, std::string& why) {
            if (companion_sum(n) != companion_sum_alt(n)) {
                why = "n=" + std::to_string(n);
                return false;
            }
            return true;
        }));

    // sequence identities over d, r, s
    {
        std::vector<Count> r = fubini_table(b.max_l + 1);
        std::vector<Count> s = barred_table(b.max_l);
        CheckResult conv{"binomial-convolution-rs", l_bound, true, {}};
        CheckResult pair{"pair-sum-rs", l_bound, true, {}};
        for (unsigned l = 0; l <= b.max_l && (conv.pass || pair.pass); ++l) {
            if (conv.pass) {
                std::vector<Count> choose = binomial_row(l);
                Count acc = 0;
                for (unsigned k = 0; k <= l; ++k) acc += choose[k] * s[k];
                if (acc != r[l + 1]) {
                    conv.pass = false;
                    conv.counterexample = "l=" + std::to_string(l);
                }
            }
            if (pair.pass && r[l] + r[l + 1] != Count(2) * s[l]) {
                pair.pass = false;
                pair.counterexample = "l=" + std::to_string(l);
            }
        }
        out.push_back(std::move(conv));
        out.push_back(std::move(pair));
    }

    // cross-route agreement: recurrence vs Stirling sums (and vs the
    // truncated infinite sums up to l = 20)
    {
        auto rows = stirling2_rows(b.max_l);
        std::vector<Count> d = bell_table(b.max_l);
        std::vector<Count> r = fubini_table(b.max_l);
        std::vector<Count> s = barred_table(b.max_l);

        // 2 r_l = [l = 0] + sum_{0<=j<=l} C(l,j) r_j, the coefficient form of
        // the functional equation 2 r(z) = 1 + e^z r(z)
        CheckResult doubling{"doubling-identity-r", l_bound, true, {}};
        for (unsigned l = 0; l <= b.max_l && doubling.pass; ++l) {
            std::vector<Count> choose = binomial_row(l);
            Count acc = (l == 0) ? 1 : 0;
            for (unsigned j = 0; j <= l; ++j) acc += choose[j] * r[j];
            if (acc != Count(2) * r[l]) {
                doubling.pass = false;
                doubling.counterexample = "l=" + std::to_string(l);
            }
        }
        out.push_back(std::move(doubling));
        CheckResult route{"cross-route-stirling", l_bound, true, {}};
        for (unsigned l = 0; l <= b.max_l && route.pass; ++l) {
            Count db = 0, rb = 0, sb = 0, kfact = 1;
            for (unsigned k = 0; k <= l; ++k) {
                db += rows[l][k];
                rb += rows[l][k] * kfact;
                sb += rows[l][k] * kfact * (k + 1);
                kfact *= k + 1;
            }
            if (db != d[l] || rb != r[l] || sb != s[l]) {
                route.pass = false;
                route.counterexample = "l=" + std::to_string(l);
            }
        }
        out.push_back(std::move(route));

        unsigned dob_max = std::min(b.max_l, 20u);
        out.push_back(detail::scan_check(
            "cross-route-infinite-sum", "l <= " + std::to_string(dob_max), 0, dob_max,
            [&](unsigned l, std::string& why) {
                if (dobinski_sum(SequenceKind::bell, l) != d[l] ||
                    dobinski_sum(SequenceKind::fubini, l) != r[l] ||
                    dobinski_sum(SequenceKind::barred, l) != s[l]) {
                    why = "l=" + std::to_string(l);
                    return false;
                }
                return true;
            }));
    }

    // series identities at fixed truncation order
    if (b.order >= 1) {
        TruncatedSeries r = egf_family(SequenceKind::fubini, b.order);
        TruncatedSeries s = egf_family(SequenceKind::barred, b.order);
        TruncatedSeries lhs = Rational(2) * r;
        TruncatedSeries rhs =
            TruncatedSeries::constant(SeriesKind::exponential, Rational(1), b.order) +
            exp_z(b.order) * r;
        CheckResult functional{"egf-functional-equation", o_bound,
                               lhs.coefficients() == rhs.coefficients(), {}};
        if (!functional.pass) functional.counterexample = "2 r(z) != 1 + e^z r(z)";
        out.push_back(std::move(functional));

        CheckResult square{"egf-square", o_bound, (r * r).coefficients() == s.coefficients(), {}};
        if (!square.pass) square.counterexample = "r(z)^2 != s(z)";
        out.push_back(std::move(square));

        CheckResult riccati{"riccati-residual", o_bound, riccati_residual(b.order).is_zero(), {}};
        if (!riccati.pass) riccati.counterexample = "r' + r - 2r^2 != 0";
        out.push_back(std::move(riccati));
    }

    return out;
}

// ---------------------------------------------------------------------------
// oracle suite
// ---------------------------------------------------------------------------

struct OracleBounds {
    unsigned max_n = 6;
    unsigned spot_checks = 3;
    bool allow_large = false;
};

inline std::vector<CheckResult> verify_oracle(const OracleBounds& b = {}) {
    FormulaReport report = verify_formula(b.max_n, b.spot_checks, b.allow_large);
    std::vector<CheckResult> out;
    for (const auto& cell : report.cells) {
        CheckResult r;
        r.name = "oracle-R[" + std::to_string(cell.n) + "," + std::to_string(cell.k) + "]";
        r.bound = std::to_string(1 + cell.spot_checks) + " pair(s)";
        r.pass = cell.match;
        if (!cell.match)
            r.counterexample =
                "formula " + cell.formula.str() + " vs oracle " + cell.oracle.str();
        out.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------
// asymptotics suite
// ---------------------------------------------------------------------------

struct AsymptoticBounds {
    unsigned max_k = 4;
    std::vector<unsigned> grid = default_sample_grid();
};

// Scaled truncation errors must decrease toward the limiting coefficient
// along the grid and land within [0.9, 1.1] of it at the last sample.
inline std::vector<CheckResult> verify_asymptotics(const AsymptoticBounds& b = {}) {
    std::vector<CheckResult> out;
    for (ExpansionTarget target :
         {ExpansionTarget::R, ExpansionTarget::S, ExpansionTarget::debruijn}) {
        for (unsigned k = 0; k <= b.max_k; ++k) {
            ExpansionReport rep = error_envelope(target, k, b.grid);
            CheckResult r;
            r.name = "envelope-" + to_string(target) + "-k" + std::to_string(k);
            r.bound = "n = " + std::to_string(b.grid.front()) + ".." +
                      std::to_string(b.grid.back());
            Rational limit(rep.limiting_coefficient);
            for (size_t i = 0; i + 1 < rep.scaled_errors.size() && r.pass; ++i) {
                if (!(rep.scaled_errors[i] > rep.scaled_errors[i + 1])) {
                    r.pass = false;
                    r.counterexample =
                        "not decreasing at n=" + std::to_string(rep.sample_ns[i]);
                }
            }
            Rational ratio = rep.scaled_errors.back() / limit;
            if (r.pass && !(ratio >= Rational(9, 10) && ratio <= Rational(11, 10))) {
                r.pass = false;
                r.counterexample = "final ratio " + decimal_string(ratio) +
                                   " outside [0.9, 1.1]";
            }
            out.push_back(std::move(r));
        }
    }
    return out;
}

// Single-point envelope measurement: the scaled error at one (target, k, n)
// and its ratio to the limiting coefficient, reported as a pass/fail against
// [0.9, 1.1].
inline CheckResult asymptotics_point(ExpansionTarget target, unsigned k, unsigned n) {
    ExpansionReport rep = error_envelope(target, k, {n});
    Rational ratio = rep.scaled_errors.front() / Rational(rep.limiting_coefficient);
    CheckResult r;
    r.name = "envelope-" + to_string(target) + "-k" + std::to_string(k);
    r.bound = "n = " + std::to_string(n);
    r.pass = ratio >= Rational(9, 10) && ratio <= Rational(11, 10);
    r.counterexample = "scaled error " + decimal_string(rep.scaled_errors.front()) +
                       ", ratio " + decimal_string(ratio) + " to coefficient " +
                       rep.limiting_coefficient.str();
    if (r.pass) r.counterexample = "ratio " + decimal_string(ratio);
    return r;
}

// ---------------------------------------------------------------------------
// series suite
// ---------------------------------------------------------------------------

struct SeriesBounds {
    unsigned order = 64;
};

inline std::vector<CheckResult> verify_series(const SeriesBounds& b = {}) {
    std::vector<CheckResult> out;
    const std::string o_bound = "order " + std::to_string(b.order);

    TruncatedSeries r_series = gf_r(b.order);
    out.push_back(detail::scan_check(
        "gf-R-coefficients", o_bound, 0, b.order, [&](unsigned n, std::string& why) {
            Rational expect = (n == 0) ? Rational(0) : resistance_diagonal(n);
            if (r_series.coeff(n) != expect) {
                why = "n=" + std::to_string(n);
                return false;
            }
            return true;
        }));

    TruncatedSeries s_series = gf_s(b.order);
    out.push_back(detail::scan_check(
        "gf-S-coefficients", o_bound, 0, b.order, [&](unsigned n, std::string& why) {
            if (s_series.coeff(n) != companion_sum(n)) {
                why = "n=" + std::to_string(n);
                return false;
            }
            return true;
        }));

    {
        TruncatedSeries dr = derivative(r_series);
        CheckResult c{"gf-S-is-derivative-of-R", o_bound, true, {}};
        for (unsigned n = 0; n + 1 <= b.order && c.pass; ++n)
            if (dr.coeff(n) != s_series.coeff(n)) {
                c.pass = false;
                c.counterexample = "n=" + std::to_string(n);
            }
        out.push_back(std::move(c));
    }

    {
        std::vector<Count> d = bell_table(b.order);
        std::vector<Count> r = fubini_table(b.order);
        std::vector<Count> s = barred_table(b.order);
        TruncatedSeries ed = egf_family(SequenceKind::bell, b.order);
        TruncatedSeries er = egf_family(SequenceKind::fubini, b.order);
        TruncatedSeries es = egf_family(SequenceKind::barred, b.order);
        out.push_back(detail::scan_check(
            "egf-sequences", "l <= " + std::to_string(b.order), 0, b.order,
            [&](unsigned l, std::string& why) {
                if (egf_sequence_value(ed, l) != d[l] || egf_sequence_value(er, l) != r[l] ||
                    egf_sequence_value(es, l) != s[l]) {
                    why = "l=" + std::to_string(l);
                    return false;
                }
                return true;
            }));

        out.push_back(detail::scan_check(
            "egf-integrality", "l <= " + std::to_string(b.order), 0, b.order,
            [&](unsigned l, std::string& why) {
                auto terms_ok = [&](const TruncatedSeries& ts) {
                    return (ts.coeff(l) * Rational(factorial(l))).as_integer().has_value();
                };
                if (!terms_ok(ed) || !terms_ok(er) || !terms_ok(es)) {
                    why = "l=" + std::to_string(l);
                    return false;
                }
                return true;
            }));
    }

    return out;
}

// ---------------------------------------------------------------------------

struct VerifyBounds {
    IdentityBounds identities;
    OracleBounds oracle;
    AsymptoticBounds asymptotics;
    SeriesBounds series;
};

inline std::vector<CheckResult> verify_all(const VerifyBounds& b = {}) {
    std::vector<CheckResult> out = verify_identities(b.identities);
    auto append = [&](std::vector<CheckResult> more) {
        out.insert(out.end(), std::make_move_iterator(more.begin()),
                   std::make_move_iterator(more.end()));
    };
    append(verify_oracle(b.oracle));
    append(verify_asymptotics(b.asymptotics));
    append(verify_series(b.series));
    return out;
}

}  // namespace hyperohm
