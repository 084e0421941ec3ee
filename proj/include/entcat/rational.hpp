#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace entcat {

using BigInt = mpz_class;

/// Exact fraction in canonical form: positive denominator, gcd(|num|, den) = 1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den);

    const BigInt& num() const { return value_.get_num(); }
    const BigInt& den() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

    /// Always "num/den", including integers ("1/1", "0/1").
    std::string str() const;

    double to_double() const { return value_.get_d(); }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Rational extended by +inf. +inf is strictly greater than every Rational.
class ExtendedRational {
public:
    ExtendedRational(Rational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
    static ExtendedRational infinity() { return ExtendedRational(); }

    bool is_infinite() const { return !value_.has_value(); }
    const Rational& value() const;

    /// "num/den" or "inf".
    std::string str() const;

    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) = default;
    friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);
    friend std::strong_ordering operator<=>(const ExtendedRational& a, const Rational& b);
    friend bool operator==(const ExtendedRational& a, const Rational& b) {
        return !a.is_infinite() && *a.value_ == b;
    }

private:
    ExtendedRational() = default;
    std::optional<Rational> value_;
};

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r);

/// Parses "num/den", an integer, or a finite decimal literal ("0.45", "-.5").
/// Decimals convert through powers of ten, so "0.45" is exactly 9/20.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// A fraction as written, not reduced. The mediant depends on this representation.
struct FractionPair {
    BigInt num;
    BigInt den;
};

/// (n1 + n2) / (d1 + d2), reduced. Throws std::invalid_argument if a
/// denominator is not positive or a numerator is negative.
Rational mediant(const FractionPair& a, const FractionPair& b);

/// Mediant of the canonical representations.
Rational mediant(const Rational& a, const Rational& b);

struct DecimalRendering {
    std::string text;
    bool approximate = false;
};

/// Decimal text for display. Terminating expansions are rendered in full;
/// others are rounded to `digits` places and flagged approximate.
DecimalRendering to_decimal(const Rational& r, unsigned digits = 12);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

}  // namespace entcat
