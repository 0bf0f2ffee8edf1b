#ifndef SOBOLEV2D_RATIONAL_HPP
#define SOBOLEV2D_RATIONAL_HPP

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sobolev2d {

/// Exact rational number backed by GMP. Always canonical: reduced, with a
/// positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);
    explicit Rational(mpq_class value);

    /// Parses "p", "p/q", or a decimal literal such as "-0.125" or "3e-2".
    /// Throws std::invalid_argument on malformed input or a zero denominator.
    static Rational parse(std::string_view text);

    /// Canonical text form: "p/q", or "p" when the denominator is 1.
    std::string str() const;

    /// Decimal rendering rounded (half away from zero) to the given number
    /// of significant digits, trailing zeros removed.
    std::string to_decimal(int significant_digits) const;

    double to_double() const { return value_.get_d(); }
    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const;

    const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    mpq_class value_;
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, unsigned exponent);

/// Rising factorial (a)_n = a (a+1) ... (a+n-1), (a)_0 = 1.
Rational pochhammer(const Rational& a, int n);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace sobolev2d

#endif  // SOBOLEV2D_RATIONAL_HPP
