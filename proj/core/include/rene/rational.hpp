#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "rene/bigint.hpp"
#include "rene/errors.hpp"

namespace rene {

/// Exact rational number. Invariants: the denominator is positive, the
/// fraction is stored reduced, and zero is 0/1. Values are immutable once
/// constructed except through assignment of a whole new value.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}                  // NOLINT(google-explicit-constructor)
    Rational(long long n) : num_(n), den_(1) {}            // NOLINT(google-explicit-constructor)
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}    // NOLINT(google-explicit-constructor)

    /// Reduces and normalizes the sign. Throws ZeroDenominator if den == 0.
    Rational(BigInt num, BigInt den);

    /// Accepts an optional sign, digits, and an optional "/digits" part.
    static Rational parse(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational abs() const;
    /// Throws DivisionByZero on zero.
    Rational reciprocal() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o); // throws DivisionByZero

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    // Reduced canonical storage makes memberwise equality exact equality.
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    // Total order consistent with the reals, by cross-multiplication.
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "num/den" with "/den" omitted when den == 1.
    std::string str() const;
    double to_double() const;

private:
    void reduce();

    BigInt num_;
    BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace rene
