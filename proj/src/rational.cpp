#include "sobolev2d/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace sobolev2d {

namespace {

mpz_class pow10(unsigned long exponent)
{
    mpz_class result;
    mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
    return result;
}

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string strip_fraction_zeros(std::string s)
{
    if (s.find('.') == std::string::npos) return s;
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

}  // namespace

Rational::Rational(long numerator, long denominator)
{
    if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text)
{
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    };
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) return fail();

    bool negative = false;
    std::string_view body = text;
    if (body.front() == '+' || body.front() == '-') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    mpq_class value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return fail();
        mpz_class d(std::string(den), 10);
        if (d == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
        value = mpq_class(mpz_class(std::string(num), 10), d);
    } else {
        long exponent = 0;
        if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
            auto exp_text = body.substr(e + 1);
            bool exp_negative = false;
            if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
                exp_negative = exp_text.front() == '-';
                exp_text.remove_prefix(1);
            }
            if (!all_digits(exp_text) || exp_text.size() > 6) return fail();
            exponent = std::stol(std::string(exp_text));
            if (exp_negative) exponent = -exponent;
            body = body.substr(0, e);
        }
        std::string digits;
        if (auto dot = body.find('.'); dot != std::string_view::npos) {
            auto whole = body.substr(0, dot);
            auto frac = body.substr(dot + 1);
            if (whole.empty() && frac.empty()) return fail();
            if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) return fail();
            digits = std::string(whole) + std::string(frac);
            exponent -= static_cast<long>(frac.size());
        } else {
            if (!all_digits(body)) return fail();
            digits = std::string(body);
        }
        mpz_class mantissa(digits, 10);
        if (exponent >= 0)
            value = mpq_class(mantissa * pow10(static_cast<unsigned long>(exponent)));
        else
            value = mpq_class(mantissa, pow10(static_cast<unsigned long>(-exponent)));
    }
    value.canonicalize();
    if (negative) value = -value;
    return Rational(std::move(value));
}

std::string Rational::str() const { return value_.get_str(10); }

bool Rational::is_integer() const { return value_.get_den() == 1; }

std::string Rational::to_decimal(int significant_digits) const
{
    if (significant_digits < 1) throw std::invalid_argument("significant digits must be positive");
    if (is_zero()) return "0";

    mpq_class magnitude = ::abs(value_);
    const auto digits = static_cast<unsigned long>(significant_digits);

    // Decimal exponent e with 10^e <= |r| < 10^(e+1).
    long e = static_cast<long>(mpz_sizeinbase(magnitude.get_num_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(magnitude.get_den_mpz_t(), 10));
    auto power = [](long k) {
        return k >= 0 ? mpq_class(pow10(static_cast<unsigned long>(k)))
                      : mpq_class(mpz_class(1), pow10(static_cast<unsigned long>(-k)));
    };
    while (power(e) > magnitude) --e;
    while (power(e + 1) <= magnitude) ++e;

    mpq_class scaled = magnitude * power(static_cast<long>(digits) - 1 - e) + mpq_class(1, 2);
    mpz_class rounded = scaled.get_num() / scaled.get_den();
    if (rounded == pow10(digits)) {
        rounded /= 10;
        ++e;
    }
    std::string s = rounded.get_str(10);
    const long d = static_cast<long>(s.size());

    std::string out;
    if (e > -7 && e < 21) {
        if (e >= d - 1)
            out = s + std::string(static_cast<std::size_t>(e - d + 1), '0');
        else if (e >= 0)
            out = strip_fraction_zeros(s.substr(0, static_cast<std::size_t>(e + 1)) + "." +
                                       s.substr(static_cast<std::size_t>(e + 1)));
        else
            out = strip_fraction_zeros("0." + std::string(static_cast<std::size_t>(-e - 1), '0') + s);
    } else {
        out = strip_fraction_zeros(s.substr(0, 1) + "." + s.substr(1));
        out += (e < 0 ? "e-" : "e+") + std::to_string(e < 0 ? -e : e);
    }
    return sign() < 0 ? "-" + out : out;
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, unsigned exponent)
{
    Rational result(1);
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

Rational pochhammer(const Rational& a, int n)
{
    if (n < 0) throw std::invalid_argument("pochhammer: negative length");
    Rational result(1);
    for (int i = 0; i < n; ++i) result *= a + Rational(i);
    return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace sobolev2d
