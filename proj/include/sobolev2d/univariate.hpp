#ifndef SOBOLEV2D_UNIVARIATE_HPP
#define SOBOLEV2D_UNIVARIATE_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "sobolev2d/rational.hpp"

namespace sobolev2d {

enum class FamilyKind { Laguerre, Gegenbauer };

std::string to_string(FamilyKind kind);
FamilyKind parse_family_kind(const std::string& name);

/// Classical weight with a rational parameter.
///
///   Laguerre(a):   x^a e^{-x} on [0, inf),        a > -1
///   Gegenbauer(a): (1 - x^2)^{a - 1/2} on [-1, 1], a > -1/2, a != 0
///
/// Gegenbauer a = 0 is rejected because the coherence coefficient
/// b_1(a) = -1 / (4 a (a + 1)) has a vanishing denominator there.
class WeightFamily {
public:
    WeightFamily(FamilyKind kind, Rational param);

    static WeightFamily laguerre(Rational alpha) { return {FamilyKind::Laguerre, std::move(alpha)}; }
    static WeightFamily gegenbauer(Rational alpha) { return {FamilyKind::Gegenbauer, std::move(alpha)}; }

    FamilyKind kind() const { return kind_; }
    const Rational& param() const { return param_; }

    friend bool operator==(const WeightFamily&, const WeightFamily&) = default;

private:
    FamilyKind kind_;
    Rational param_;
};

/// Dense univariate polynomial; coeffs()[i] multiplies x^i. No trailing
/// zeros are stored, so the zero polynomial has an empty coefficient list
/// and degree -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    UniPoly(std::initializer_list<Rational> coeffs) : UniPoly(std::vector<Rational>(coeffs)) {}

    static UniPoly constant(const Rational& c) { return UniPoly({c}); }
    static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int i) const;
    Rational leading() const;
    bool is_zero() const { return coeffs_.empty(); }

    Rational operator()(const Rational& x) const;
    UniPoly derivative() const;

    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    UniPoly& operator*=(const Rational& s);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Coefficients of the monic three-term recurrence
///   p_{n+1} = (x - shift_n) p_n - gamma_n p_{n-1}.
struct Recurrence {
    Rational shift;
    Rational gamma;
};

Recurrence recurrence_coefficients(const WeightFamily& family, int n);

/// Monic orthogonal polynomials p_0 .. p_{n_max}.
std::vector<UniPoly> monic_sequence(const WeightFamily& family, int n_max);

/// <p_n, p_n> under the weight normalised to <1, 1> = 1.
Rational squared_norm(const WeightFamily& family, int n);

/// Coefficients (a, b) with q_n = p_n + n a p_{n-1} + n b p_{n-2}, n >= 1.
struct Coherence {
    Rational a;
    Rational b;
};

Coherence coherence_coefficient(const WeightFamily& family, int n);

/// Companion polynomials q_0 .. q_{n_max}; q_n is monic with q_n' = n p_{n-1}.
std::vector<UniPoly> q_sequence(const WeightFamily& family, int n_max);

}  // namespace sobolev2d

#endif  // SOBOLEV2D_UNIVARIATE_HPP
