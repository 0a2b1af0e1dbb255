#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cobord {

/// Exact rational number: arbitrary-precision numerator and denominator,
/// always reduced, denominator always positive. No floating point anywhere.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
    explicit Rational(mpz_class value) : num_(std::move(value)), den_(1) {}
    Rational(mpz_class numerator, mpz_class denominator);

    /// Parses the canonical form "p" or "p/q" (q > 0 after normalization).
    /// Accepts non-reduced input and normalizes it; rejects anything else.
    static Rational parse(std::string_view text);

    const mpz_class& numerator() const { return num_; }
    const mpz_class& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return sgn(num_); }

    /// Canonical string: "p" when the denominator is 1, else "p/q".
    std::string str() const;

    Rational operator-() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    // Canonical form makes memberwise equality exact.
    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& q);

private:
    mpz_class num_;
    mpz_class den_;

    void reduce();
};

Rational abs(const Rational& q);

}  // namespace cobord
