#ifndef SOBOLEV2D_PRODUCT_BASIS_HPP
#define SOBOLEV2D_PRODUCT_BASIS_HPP

#include <vector>

#include "sobolev2d/bipoly.hpp"
#include "sobolev2d/matrix.hpp"
#include "sobolev2d/rational.hpp"
#include "sobolev2d/univariate.hpp"

namespace sobolev2d {

struct Corner {
    Rational x;
    Rational y;
    friend bool operator==(const Corner&, const Corner&) = default;
};

/// W(x, y) = w1(x) w2(y) with both factors from the same classical family,
/// plus the point (c1, c2) carrying the discrete part of the Sobolev inner
/// product. Laguerre admits only the corner (0, 0); Gegenbauer admits any
/// of the four corners (+-1, +-1) and defaults to (1, 1).
class ProductWeight {
public:
    ProductWeight(WeightFamily x_family, WeightFamily y_family, Corner corner);

    static ProductWeight laguerre(Rational alpha, Rational beta);
    static ProductWeight gegenbauer(Rational alpha, Rational beta, Corner corner = {Rational(1), Rational(1)});
    static Corner default_corner(FamilyKind kind);

    FamilyKind kind() const { return x_.kind(); }
    const WeightFamily& x_family() const { return x_; }
    const WeightFamily& y_family() const { return y_; }
    const Rational& alpha() const { return x_.param(); }
    const Rational& beta() const { return y_.param(); }
    const Corner& corner() const { return corner_; }

    friend bool operator==(const ProductWeight&, const ProductWeight&) = default;

private:
    WeightFamily x_;
    WeightFamily y_;
    Corner corner_;
};

/// coeff * P_k^n.
struct PTerm {
    Rational coeff;
    int n;
    int k;
};

/// D_n = <Q_n, Q_n^T>_grad, C_n = <Q_{n+s}, Q_n^T>_grad (s = 1 Laguerre,
/// s = 2 Gegenbauer) and their interior blocks used by the reduced
/// iteration.
struct DCMatrices {
    RationalMatrix d;
    RationalMatrix c;
    RationalMatrix d_hat;
    RationalMatrix c_hat;
};

/// Tables of the univariate data for a product weight up to a degree
/// bound, with the product polynomials P_k^n, Q_k^n and the closed-form
/// gradient Gram entries built on top. Immutable once constructed.
class ProductBasis {
public:
    ProductBasis(ProductWeight weight, int max_degree);

    const ProductWeight& weight() const { return weight_; }
    int max_degree() const { return max_degree_; }

    /// p_{n-k}(w1; x) p_k(w2; y).
    BiPoly P(int n, int k) const;
    /// q_{n-k}(w1; x) q_k(w2; y).
    BiPoly Q(int n, int k) const;
    /// h_k^n = <P_k^n, P_k^n>_W.
    Rational norm(int n, int k) const;

    /// <Q_i^n, Q_l^m>_grad from the closed-form Kronecker-delta expressions.
    Rational grad_gram(int n, int i, int m, int l) const;

    /// d_1 Q_k^n and d_2 Q_k^n as combinations of product polynomials.
    std::vector<PTerm> dx_expansion(int n, int k) const;
    std::vector<PTerm> dy_expansion(int n, int k) const;

    /// Diagonal entry d_j^n of D_n.
    Rational d_entry(int n, int j) const;
    DCMatrices matrices(int n) const;

    /// Coherence coefficients a_k, b_k of the x and y factors
    /// (q_{k+1} = p_{k+1} + (k+1) a_k p_k + (k+1) b_k p_{k-1}); zero for k < 0.
    Rational a_x(int k) const { return coherence(a_x_, k); }
    Rational a_y(int k) const { return coherence(a_y_, k); }
    Rational b_x(int k) const { return coherence(b_x_, k); }
    Rational b_y(int k) const { return coherence(b_y_, k); }

    const UniPoly& p_x(int n) const;
    const UniPoly& p_y(int n) const;
    const UniPoly& q_x(int n) const;
    const UniPoly& q_y(int n) const;

private:
    // h_j^m, zero outside 0 <= j <= m.
    Rational h(int m, int j) const;
    Rational coherence(const std::vector<Rational>& table, int k) const;
    void check_index(int n, int k) const;
    Rational grad_gram_laguerre(int n, int i, int m, int l) const;
    Rational grad_gram_gegenbauer(int n, int i, int m, int l) const;

    ProductWeight weight_;
    int max_degree_;
    int table_degree_;
    std::vector<UniPoly> px_, py_, qx_, qy_;
    std::vector<Rational> hx_, hy_;
    std::vector<Rational> a_x_, a_y_, b_x_, b_y_;
};

BiPoly product_P(const ProductWeight& pw, int n, int k);
BiPoly product_Q(const ProductWeight& pw, int n, int k);
Rational product_norm(const ProductWeight& pw, int n, int k);
Rational grad_gram_entry(const ProductWeight& pw, int n, int i, int m, int l);
DCMatrices matrices_DC(const ProductWeight& pw, int n);

}  // namespace sobolev2d

#endif  // SOBOLEV2D_PRODUCT_BASIS_HPP
