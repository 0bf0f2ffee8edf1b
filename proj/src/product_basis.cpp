#include "sobolev2d/product_basis.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sobolev2d/errors.hpp"

namespace sobolev2d {

namespace {

// Degree headroom: the Gegenbauer C_n reaches Q_{n+2}, whose expansion
// touches coherence coefficients with index up to n + 1.
constexpr int kTableSlack = 3;

Rational R(long v) { return Rational(v); }
Rational delta(int a, int b) { return Rational(a == b ? 1 : 0); }

bool is_corner_coordinate(const Rational& c) { return c == Rational(1) || c == Rational(-1); }

}  // namespace

ProductWeight::ProductWeight(WeightFamily x_family, WeightFamily y_family, Corner corner)
    : x_(std::move(x_family)), y_(std::move(y_family)), corner_(std::move(corner))
{
    if (x_.kind() != y_.kind())
        throw ParameterError("mixed Laguerre x Gegenbauer products are not supported");
    if (x_.kind() == FamilyKind::Laguerre) {
        if (!corner_.x.is_zero() || !corner_.y.is_zero())
            throw ParameterError("the Laguerre product domain has the single finite corner (0,0), got (" +
                                 corner_.x.str() + "," + corner_.y.str() + ")");
    } else if (!is_corner_coordinate(corner_.x) || !is_corner_coordinate(corner_.y)) {
        throw ParameterError("a Gegenbauer corner must be one of (+-1, +-1), got (" + corner_.x.str() + "," +
                             corner_.y.str() + ")");
    }
}

ProductWeight ProductWeight::laguerre(Rational alpha, Rational beta)
{
    return {WeightFamily::laguerre(std::move(alpha)), WeightFamily::laguerre(std::move(beta)),
            default_corner(FamilyKind::Laguerre)};
}

ProductWeight ProductWeight::gegenbauer(Rational alpha, Rational beta, Corner corner)
{
    return {WeightFamily::gegenbauer(std::move(alpha)), WeightFamily::gegenbauer(std::move(beta)),
            std::move(corner)};
}

Corner ProductWeight::default_corner(FamilyKind kind)
{
    return kind == FamilyKind::Laguerre ? Corner{R(0), R(0)} : Corner{R(1), R(1)};
}

// ---------------------------------------------------------------------------

ProductBasis::ProductBasis(ProductWeight weight, int max_degree)
    : weight_(std::move(weight)), max_degree_(max_degree), table_degree_(max_degree + kTableSlack)
{
    if (max_degree < 0) throw std::out_of_range("ProductBasis: negative degree bound");
    const auto& fx = weight_.x_family();
    const auto& fy = weight_.y_family();
    px_ = monic_sequence(fx, table_degree_);
    py_ = monic_sequence(fy, table_degree_);
    qx_ = q_sequence(fx, table_degree_);
    qy_ = q_sequence(fy, table_degree_);
    for (int n = 0; n <= table_degree_; ++n) {
        hx_.push_back(squared_norm(fx, n));
        hy_.push_back(squared_norm(fy, n));
    }
    for (int k = 0; k <= table_degree_; ++k) {
        const auto cx = coherence_coefficient(fx, k + 1);
        const auto cy = coherence_coefficient(fy, k + 1);
        a_x_.push_back(cx.a);
        b_x_.push_back(cx.b);
        a_y_.push_back(cy.a);
        b_y_.push_back(cy.b);
    }
}

void ProductBasis::check_index(int n, int k) const
{
    if (n < 0 || k < 0 || k > n)
        throw std::out_of_range("product index (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                                ") requires 0 <= k <= n");
    if (n > max_degree_)
        throw std::out_of_range("degree " + std::to_string(n) + " exceeds the table bound " +
                                std::to_string(max_degree_));
}

Rational ProductBasis::coherence(const std::vector<Rational>& table, int k) const
{
    if (k < 0) return R(0);
    if (k >= static_cast<int>(table.size())) throw std::out_of_range("coherence index beyond table");
    return table[static_cast<std::size_t>(k)];
}

const UniPoly& ProductBasis::p_x(int n) const { return px_.at(static_cast<std::size_t>(n)); }
const UniPoly& ProductBasis::p_y(int n) const { return py_.at(static_cast<std::size_t>(n)); }
const UniPoly& ProductBasis::q_x(int n) const { return qx_.at(static_cast<std::size_t>(n)); }
const UniPoly& ProductBasis::q_y(int n) const { return qy_.at(static_cast<std::size_t>(n)); }

BiPoly ProductBasis::P(int n, int k) const
{
    check_index(n, k);
    return BiPoly::outer(p_x(n - k), p_y(k)).with_degree(n);
}

BiPoly ProductBasis::Q(int n, int k) const
{
    check_index(n, k);
    return BiPoly::outer(q_x(n - k), q_y(k)).with_degree(n);
}

Rational ProductBasis::h(int m, int j) const
{
    if (m < 0 || j < 0 || j > m) return R(0);
    if (m > table_degree_) throw std::out_of_range("norm index beyond table");
    return hx_[static_cast<std::size_t>(m - j)] * hy_[static_cast<std::size_t>(j)];
}

Rational ProductBasis::norm(int n, int k) const
{
    check_index(n, k);
    return h(n, k);
}

std::vector<PTerm> ProductBasis::dx_expansion(int n, int k) const
{
    check_index(n, k);
    // d_1 Q_k^n = (n-k) [P_k^{n-1} + k a_{k-1}(w2) P_{k-1}^{n-2} + k b_{k-1}(w2) P_{k-2}^{n-3}]
    std::vector<PTerm> out;
    const Rational f = R(n - k);
    if (f.is_zero()) return out;
    out.push_back({f, n - 1, k});
    if (k >= 1 && !a_y(k - 1).is_zero()) out.push_back({f * R(k) * a_y(k - 1), n - 2, k - 1});
    if (k >= 2 && !b_y(k - 1).is_zero()) out.push_back({f * R(k) * b_y(k - 1), n - 3, k - 2});
    return out;
}

std::vector<PTerm> ProductBasis::dy_expansion(int n, int k) const
{
    check_index(n, k);
    // d_2 Q_k^n = k [P_{k-1}^{n-1} + (n-k) a_{n-k-1}(w1) P_{k-1}^{n-2} + (n-k) b_{n-k-1}(w1) P_{k-1}^{n-3}]
    // The k = n edge case is d_2 Q_n^n = n P_{n-1}^{n-1}.
    std::vector<PTerm> out;
    const Rational f = R(k);
    if (f.is_zero()) return out;
    out.push_back({f, n - 1, k - 1});
    if (n - k >= 1 && !a_x(n - k - 1).is_zero()) out.push_back({f * R(n - k) * a_x(n - k - 1), n - 2, k - 1});
    if (n - k >= 2 && !b_x(n - k - 1).is_zero()) out.push_back({f * R(n - k) * b_x(n - k - 1), n - 3, k - 1});
    return out;
}

Rational ProductBasis::grad_gram_laguerre(int n, int i, int m, int l) const
{
    const Rational L(l);
    const Rational ml(m - l);
    if (n == m - 1)
        return L * ml * ml * h(m - 2, l - 1) * delta(i, l - 1) + L * L * ml * h(m - 2, l - 1) * delta(i, l);
    if (n == m)
        return (ml * ml * h(m - 1, l) + R(2) * L * L * ml * ml * h(m - 2, l - 1) + L * L * h(m - 1, l - 1)) *
               delta(i, l);
    if (n == m + 1)
        return R(l + 1) * ml * ml * h(m - 1, l) * delta(i - 1, l) +
               L * L * R(m + 1 - l) * h(m - 1, l - 1) * delta(i, l);
    return R(0);
}

Rational ProductBasis::grad_gram_gegenbauer(int n, int i, int m, int l) const
{
    const Rational L(l);
    const Rational ml(m - l);
    if (n == m + 2)
        return ml * ml * R(l + 2) * b_y(l + 1) * h(m - 1, l) * delta(i, l + 2) +
               L * L * R(m - l + 2) * b_x(m - l + 1) * h(m - 1, l - 1) * delta(i, l);
    if (n == m) {
        const Rational by = b_y(l - 1);
        const Rational bx = b_x(m - l - 1);
        return (ml * ml * h(m - 1, l) + L * L * ml * ml * by * by * h(m - 3, l - 2) + L * L * h(m - 1, l - 1) +
                L * L * ml * ml * bx * bx * h(m - 3, l - 1)) *
               delta(i, l);
    }
    if (n == m - 2)
        return L * ml * ml * b_y(l - 1) * h(m - 3, l - 2) * delta(i, l - 2) +
               L * L * ml * b_x(m - l - 1) * h(m - 3, l - 1) * delta(i, l);
    return R(0);
}

Rational ProductBasis::grad_gram(int n, int i, int m, int l) const
{
    check_index(n, i);
    check_index(m, l);
    return weight_.kind() == FamilyKind::Laguerre ? grad_gram_laguerre(n, i, m, l)
                                                  : grad_gram_gegenbauer(n, i, m, l);
}

Rational ProductBasis::d_entry(int n, int j) const
{
    check_index(n, j);
    const Rational J(j);
    const Rational nj(n - j);
    if (weight_.kind() == FamilyKind::Laguerre)
        return nj * nj * h(n - 1, j) + J * J * h(n - 1, j - 1) + R(2) * J * J * nj * nj * h(n - 2, j - 1);
    const Rational by = b_y(j - 1);
    const Rational bx = b_x(n - j - 1);
    return nj * nj * h(n - 1, j) + J * J * nj * nj * by * by * h(n - 3, j - 2) + J * J * h(n - 1, j - 1) +
           J * J * nj * nj * bx * bx * h(n - 3, j - 1);
}

DCMatrices ProductBasis::matrices(int n) const
{
    if (n < 1) throw std::out_of_range("matrices_DC requires n >= 1");
    check_index(n, 0);
    const auto un = static_cast<std::size_t>(n);
    DCMatrices out;

    std::vector<Rational> d;
    for (int j = 0; j <= n; ++j) d.push_back(d_entry(n, j));
    out.d = RationalMatrix::diagonal(d);

    RationalMatrix d_hat(un - 1, un - 1);
    for (int j = 1; j <= n - 1; ++j) d_hat(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(j - 1)) = d[static_cast<std::size_t>(j)];

    if (weight_.kind() == FamilyKind::Laguerre) {
        // C_n is (n+2) x (n+1) with
        //   c_{i,i}   = i^2 (n-i+1) h_{i-1}^{n-1},  1 <= i <= n
        //   c_{i+1,i} = (i+1) (n-i)^2 h_i^{n-1},    0 <= i <= n-1
        RationalMatrix c(un + 2, un + 1);
        for (int i = 1; i <= n; ++i)
            c(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = R(i) * R(i) * R(n - i + 1) * h(n - 1, i - 1);
        for (int i = 0; i <= n - 1; ++i)
            c(static_cast<std::size_t>(i + 1), static_cast<std::size_t>(i)) =
                R(i + 1) * R(n - i) * R(n - i) * h(n - 1, i);
        out.c = c;
        if (n >= 2) {
            d_hat(0, 0) -= d_entry(n - 1, 0);
            d_hat(un - 2, un - 2) -= d_entry(n - 1, n - 1);
        }
        out.c_hat = c.block(1, 1, un, un - 1);
    } else {
        // C_n is (n+3) x (n+1) with
        //   c_{l,l}   = l^2 (n-l+2) b_{n-l+1}(alpha) h_{l-1}^{n-1}
        //   c_{l+2,l} = (l+2) (n-l)^2 b_{l+1}(beta) h_l^{n-1},  0 <= l <= n
        RationalMatrix c(un + 3, un + 1);
        for (int l = 0; l <= n; ++l) {
            const auto ul = static_cast<std::size_t>(l);
            c(ul, ul) = R(l) * R(l) * R(n - l + 2) * b_x(n - l + 1) * h(n - 1, l - 1);
            c(ul + 2, ul) = R(l + 2) * R(n - l) * R(n - l) * b_y(l + 1) * h(n - 1, l);
        }
        out.c = c;
        if (n >= 2) {
            // e_2 and e_{n-2} of R^{n-1}, when they exist.
            if (n - 1 >= 2) d_hat(1, 1) -= R(4) * b_y(1) * b_y(1) * d_entry(n - 2, 0);
            if (n - 2 >= 1) d_hat(un - 3, un - 3) -= R(4) * b_x(1) * b_x(1) * d_entry(n - 2, n - 2);
        }
        out.c_hat = c.block(1, 1, un + 1, un - 1);
    }
    out.d_hat = d_hat;
    return out;
}

// ---------------------------------------------------------------------------

BiPoly product_P(const ProductWeight& pw, int n, int k) { return ProductBasis(pw, std::max(n, 0)).P(n, k); }
BiPoly product_Q(const ProductWeight& pw, int n, int k) { return ProductBasis(pw, std::max(n, 0)).Q(n, k); }
Rational product_norm(const ProductWeight& pw, int n, int k) { return ProductBasis(pw, std::max(n, 0)).norm(n, k); }

Rational grad_gram_entry(const ProductWeight& pw, int n, int i, int m, int l)
{
    return ProductBasis(pw, std::max({n, m, 0})).grad_gram(n, i, m, l);
}

DCMatrices matrices_DC(const ProductWeight& pw, int n) { return ProductBasis(pw, std::max(n, 0)).matrices(n); }

}  // namespace sobolev2d
