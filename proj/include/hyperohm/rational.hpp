#pragma once
// rational.hpp - exact arbitrary-precision rational numbers.
//
// Every quantity in this library is either an Int (arbitrary-precision
// integer, GMP-backed) or a Rational kept in canonical form: denominator
// >= 1, gcd(|num|, den) = 1, zero stored as 0/1. No operation ever rounds.

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace hyperohm {

using Int = boost::multiprecision::mpz_int;

// Nonnegative Int used for combinatorial counts (sequence values, binomials,
// Stirling entries). Nonnegativity is a contract of the producing functions,
// not a separate runtime representation.
using Count = Int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(unsigned n) : num_(n), den_(1) {}
    Rational(unsigned long n) : num_(n), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}

    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        normalize();
    }

    const Int& num() const noexcept { return num_; }
    const Int& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_.sign(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // denominators positive, so cross multiplication preserves order
        Int lhs = a.num_ * b.den_;
        Int rhs = b.num_ * a.den_;
        return lhs < rhs   ? std::strong_ordering::less
               : lhs > rhs ? std::strong_ordering::greater
                           : std::strong_ordering::equal;
    }

    Rational abs() const {
        Rational r;
        r.num_ = num_ < 0 ? Int(-num_) : num_;
        r.den_ = den_;
        return r;
    }

    // If the value is an integer, return it.
    std::optional<Int> as_integer() const {
        if (den_ == 1) return num_;
        return std::nullopt;
    }

    Int floor() const {
        if (den_ == 1) return num_;
        Int q = num_ / den_;
        if (num_ < 0) q -= 1;  // mpz_int division truncates toward zero
        return q;
    }
    Int ceil() const {
        if (den_ == 1) return num_;
        Int q = num_ / den_;
        if (num_ > 0) q += 1;
        return q;
    }

    // "p/q", with "/q" omitted when q = 1; sign carried by the numerator.
    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        Int g = gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_;
    Int den_;
};

inline Int pow_int(const Int& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

// base^exp for rational base, exp >= 0
inline Rational pow_rational(const Rational& base, unsigned exp) {
    return Rational(pow_int(base.num(), exp), pow_int(base.den(), exp));
}

// Decimal rendering of an exact rational to `digits` significant digits,
// rounding half to even on the exact value (never through floating point).
// Uses positional notation when the magnitude is moderate, otherwise
// scientific "d.dddde±x".
inline std::string decimal_string(const Rational& x, unsigned digits = 3) {
    if (digits == 0) digits = 1;
    if (x.is_zero()) return "0";

    const bool negative = x.sign() < 0;
    Int a = negative ? Int(-x.num()) : x.num();
    const Int& b = x.den();

    // decimal exponent e with 10^e <= a/b < 10^(e+1)
    long e = static_cast<long>(a.str().size()) - static_cast<long>(b.str().size());
    Int p10 = pow_int(10, static_cast<unsigned>(e >= 0 ? e : -e));
    if (e >= 0) {
        if (a < b * p10) e -= 1;
    } else {
        if (a * p10 < b) e -= 1;
    }

    // round a/b * 10^(digits-1-e) half to even
    long shift = static_cast<long>(digits) - 1 - e;
    Int scaled_num = a, scaled_den = b;
    if (shift >= 0)
        scaled_num *= pow_int(10, static_cast<unsigned>(shift));
    else
        scaled_den *= pow_int(10, static_cast<unsigned>(-shift));
    Int q = scaled_num / scaled_den;
    Int rem = scaled_num - q * scaled_den;
    Int twice = rem * 2;
    if (twice > scaled_den || (twice == scaled_den && (q & 1) == 1)) q += 1;

    std::string m = q.str();
    if (m.size() > digits) {  // rounding carried into a new digit
        e += 1;
        m.pop_back();
    }

    std::string out;
    if (e >= static_cast<long>(digits) || e < -4) {
        out = m.substr(0, 1);
        std::string frac = m.substr(1);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
        out += "e" + std::to_string(e);
    } else if (e >= 0) {
        std::string ip = m.substr(0, static_cast<size_t>(e) + 1);
        std::string fp = m.substr(static_cast<size_t>(e) + 1);
        while (!fp.empty() && fp.back() == '0') fp.pop_back();
        out = ip;
        if (!fp.empty()) out += "." + fp;
    } else {
        out = "0." + std::string(static_cast<size_t>(-e - 1), '0') + m;
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return negative ? "-" + out : out;
}

}  // namespace hyperohm
