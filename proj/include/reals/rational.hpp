#pragma once

// Exact rational arithmetic over arbitrary-precision integers.
//
// Values are kept in canonical form: gcd(|num|, den) == 1, den > 0, and
// zero is always 0/1.  With canonical representatives, value equality is
// representation equality, so Rational can key maps and drive exact
// test oracles.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace reals {

using Int = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}

    // Canonical form of n/d; rejects d == 0.
    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const Int& numerator() const { return num_; }
    const Int& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_positive() const { return num_ > 0; }
    bool is_integer() const { return den_ == 1; }

    // True iff the denominator is a power of two.
    bool is_dyadic() const;

    int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    Rational operator-() const { return Rational(raw{}, -num_, den_); }

    Rational operator+(const Rational& rhs) const {
        return Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
    }
    Rational operator-(const Rational& rhs) const {
        return Rational(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
    }
    Rational operator*(const Rational& rhs) const {
        return Rational(num_ * rhs.num_, den_ * rhs.den_);
    }
    Rational operator/(const Rational& rhs) const {
        if (rhs.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(num_ * rhs.den_, den_ * rhs.num_);
    }

    Rational& operator+=(const Rational& r) { return *this = *this + r; }
    Rational& operator-=(const Rational& r) { return *this = *this - r; }
    Rational& operator*=(const Rational& r) { return *this = *this * r; }
    Rational& operator/=(const Rational& r) { return *this = *this / r; }

    bool operator==(const Rational& rhs) const {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }

    std::strong_ordering operator<=>(const Rational& rhs) const {
        const Int l = num_ * rhs.den_;
        const Int r = rhs.num_ * den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // 2^k, k may be negative.
    static Rational pow2(long k);

    // Largest integer <= value.
    Int floor() const;

    // "n/d" with "/d" omitted when d == 1.
    std::string to_string() const;

    // Accepts "n", "n/d", and decimal literals like "-0.25" (converted
    // exactly).  Throws std::invalid_argument on malformed input.
    static Rational from_string(std::string_view text);

    // Decimal rendering with exactly `digits` fraction digits, rounded to
    // nearest (ties away from zero).  |value - rendered| <= 10^-digits / 2.
    std::string to_decimal(unsigned digits) const;

private:
    struct raw {};  // already-canonical fast path
    Rational(raw, Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {}

    void reduce();

    Int num_;
    Int den_;
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

Rational normalize(const Int& n, const Int& d);

std::ostream& operator<<(std::ostream& os, const Rational& r);

// A rational known to be > 0.  The epsilon/precision currency of the
// whole kernel.
class PositiveRational {
public:
    explicit PositiveRational(Rational v) : v_(std::move(v)) {
        if (!v_.is_positive())
            throw std::domain_error("PositiveRational: value must be > 0");
    }
    PositiveRational(long long n, long long d) : PositiveRational(Rational(Int(n), Int(d))) {}

    const Rational& value() const { return v_; }

    PositiveRational half() const { return PositiveRational(v_ / 2); }
    PositiveRational third() const { return PositiveRational(v_ / 3); }

    PositiveRational operator+(const PositiveRational& rhs) const {
        return PositiveRational(v_ + rhs.v_);
    }
    PositiveRational operator*(const PositiveRational& rhs) const {
        return PositiveRational(v_ * rhs.v_);
    }

    bool operator==(const PositiveRational& rhs) const { return v_ == rhs.v_; }
    std::strong_ordering operator<=>(const PositiveRational& rhs) const {
        return v_ <=> rhs.v_;
    }

    static PositiveRational pow2(long k) { return PositiveRational(Rational::pow2(k)); }
    static PositiveRational one() { return PositiveRational(Rational(1)); }

private:
    Rational v_;
};

}  // namespace reals
