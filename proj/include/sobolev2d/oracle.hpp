#ifndef SOBOLEV2D_ORACLE_HPP
#define SOBOLEV2D_ORACLE_HPP

#include <vector>

#include "sobolev2d/bipoly.hpp"
#include "sobolev2d/product_basis.hpp"
#include "sobolev2d/rational.hpp"
#include "sobolev2d/univariate.hpp"

namespace sobolev2d {

/// Normalized moment <x^k, 1> of a classical weight with <1, 1> = 1.
///   Laguerre(a):   (a+1)_k
///   Gegenbauer(a): (1/2)_j / (a+1)_j for k = 2j, zero for odd k
Rational normalized_moment(const WeightFamily& family, int k);

/// Moments m_0 .. m_{max_k} of one family.
class MomentTable {
public:
    MomentTable(WeightFamily family, int max_k);

    const WeightFamily& family() const { return family_; }
    int max_k() const { return static_cast<int>(values_.size()) - 1; }
    const std::vector<Rational>& values() const { return values_; }
    /// Throws std::out_of_range for k > max_k(); zero for k < 0.
    Rational operator[](int k) const;

private:
    WeightFamily family_;
    std::vector<Rational> values_;
};

/// <p, q> for univariate polynomials under the normalized weight.
Rational univariate_inner(const WeightFamily& family, const UniPoly& p, const UniPoly& q);

/// Monic polynomials p_0 .. p_{n_max} by Gram-Schmidt on 1, x, x^2, ...
/// using the moments only.
std::vector<UniPoly> univariate_gram_schmidt(const WeightFamily& family, int n_max);

/// Exact evaluation of the three bilinear forms on the product weight by
/// expanding into monomials and summing moment products. The moment tables
/// are sized for polynomials of total degree up to max_poly_degree.
class InnerProducts {
public:
    InnerProducts(ProductWeight weight, int max_poly_degree);

    const ProductWeight& weight() const { return weight_; }

    Rational inner_W(const BiPoly& f, const BiPoly& g) const;
    /// <d_x f, d_x g>_W + <d_y f, d_y g>_W.
    Rational inner_nabla(const BiPoly& f, const BiPoly& g) const;
    /// inner_nabla(f, g) + lambda f(c) g(c).
    Rational inner_S(const Rational& lambda, const BiPoly& f, const BiPoly& g) const;

private:
    ProductWeight weight_;
    MomentTable mx_;
    MomentTable my_;
};

Rational inner_W(const ProductWeight& pw, const BiPoly& f, const BiPoly& g);
Rational inner_nabla(const ProductWeight& pw, const BiPoly& f, const BiPoly& g);
Rational inner_S(const ProductWeight& pw, const Rational& lambda, const BiPoly& f, const BiPoly& g);

/// Monic basis of degrees 0..N for inner_S by brute force. result[n][k] is
/// x^{n-k} y^k minus its inner_S projection onto all polynomials of degree
/// below n; the projection uses an orthogonal chain built by classical
/// Gram-Schmidt over the monomials in (n, k) order. Throws
/// InvariantViolation on a vanishing self inner product or lambda <= 0
/// (ParameterError).
std::vector<std::vector<BiPoly>> gram_schmidt_sobolev(const ProductWeight& pw, const Rational& lambda, int max_degree);

/// True iff f - g vanishes at every monomial except x^0 y^0.
bool equal_up_to_constant(const BiPoly& f, const BiPoly& g);

}  // namespace sobolev2d

#endif  // SOBOLEV2D_ORACLE_HPP
