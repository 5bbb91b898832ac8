#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ncmod/error.hpp"

namespace ncmod {

/**
 * Exact rational number.
 *
 * Thin value wrapper around GMP's mpq_class that keeps every value in
 * canonical form: gcd(|num|, den) = 1, den >= 1, zero is 0/1. All
 * arithmetic returns plain values (no expression templates leak out), so
 * Rational satisfies the carrier interface used by GenMatrix.
 */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit by design, mirrors int -> Q
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw DomainError("rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "p" or "p/q" (q > 0). Rejects anything else.
    static Rational from_string(std::string_view s);

    /// Canonical form: "p" when q = 1, otherwise "p/q".
    std::string to_string() const { return v_.get_str(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    /// Multiplicative inverse; error on zero.
    Rational inverse() const {
        if (is_zero()) throw DomainError("rational: inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    const mpq_class& raw() const { return v_; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DomainError("rational: division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

inline Rational Rational::from_string(std::string_view s) {
    auto fail = [&] { throw ParseError("rational: malformed value '" + std::string(s) + "'"); };
    if (s.empty()) fail();
    std::size_t pos = 0;
    if (s[pos] == '-') ++pos;
    std::size_t digits = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') { ++pos; ++digits; }
    if (digits == 0) fail();
    if (pos < s.size()) {
        if (s[pos] != '/') fail();
        ++pos;
        std::size_t den_digits = 0;
        std::size_t den_start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') { ++pos; ++den_digits; }
        if (den_digits == 0 || pos != s.size()) fail();
        if (std::string_view(s.substr(den_start)).find_first_not_of('0') == std::string_view::npos)
            throw DomainError("rational: zero denominator in '" + std::string(s) + "'");
    }
    mpq_class v;
    if (v.set_str(std::string(s), 10) != 0) fail();
    return Rational(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace ncmod
