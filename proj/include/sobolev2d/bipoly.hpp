#ifndef SOBOLEV2D_BIPOLY_HPP
#define SOBOLEV2D_BIPOLY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "sobolev2d/rational.hpp"
#include "sobolev2d/univariate.hpp"

namespace sobolev2d {

/// Dense bivariate polynomial sum c_{ij} x^i y^j over the triangle
/// i + j <= degree(). Entries outside the triangle are never stored;
/// coeff() returns zero for them.
class BiPoly {
public:
    struct Term {
        int i;
        int j;
        Rational coeff;
    };

    BiPoly() = default;
    explicit BiPoly(int degree);

    static BiPoly constant(const Rational& c);
    static BiPoly monomial(int i, int j, const Rational& c = Rational(1));
    /// px(x) * py(y).
    static BiPoly outer(const UniPoly& px, const UniPoly& py);

    int degree() const { return degree_; }
    /// Highest total degree with a nonzero coefficient, -1 for zero.
    int effective_degree() const;
    bool is_zero() const { return effective_degree() < 0; }

    Rational coeff(int i, int j) const;
    void set(int i, int j, Rational value);
    void add_to(int i, int j, const Rational& value);

    /// Nonzero terms, ordered by total degree then by the power of y.
    std::vector<Term> terms() const;

    Rational operator()(const Rational& x, const Rational& y) const;
    BiPoly d_dx() const;
    BiPoly d_dy() const;
    /// f(y, x).
    BiPoly swapped() const;
    /// Same polynomial stored with the given declared degree; throws if
    /// a nonzero coefficient would be dropped.
    BiPoly with_degree(int degree) const;

    BiPoly& operator+=(const BiPoly& rhs);
    BiPoly& operator-=(const BiPoly& rhs);
    BiPoly& operator*=(const Rational& s);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(BiPoly a, const Rational& s) { return a *= s; }
    friend BiPoly operator*(const Rational& s, BiPoly a) { return a *= s; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);

    /// Mathematical equality; declared degrees may differ.
    friend bool operator==(const BiPoly& a, const BiPoly& b);

    std::string str() const;

private:
    static std::size_t index(int i, int j);
    void grow(int degree);

    int degree_ = 0;
    std::vector<Rational> coeffs_{Rational(0)};
};

/// True when the coefficient at x^{n-k} y^k is 1 and every other
/// monomial of total degree n vanishes, with no terms above degree n.
bool is_monic(const BiPoly& f, int n, int k);

}  // namespace sobolev2d

#endif  // SOBOLEV2D_BIPOLY_HPP
