#include "sobolev2d/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "sobolev2d/errors.hpp"

namespace sobolev2d {

Rational normalized_moment(const WeightFamily& family, int k)
{
    if (k < 0) throw std::out_of_range("normalized_moment: k must be non-negative");
    const Rational& a = family.param();
    if (family.kind() == FamilyKind::Laguerre) return pochhammer(a + Rational(1), k);
    if (k % 2 != 0) return Rational(0);
    const int j = k / 2;
    return pochhammer(Rational(1, 2), j) / pochhammer(a + Rational(1), j);
}

MomentTable::MomentTable(WeightFamily family, int max_k) : family_(std::move(family))
{
    if (max_k < 0) throw std::out_of_range("MomentTable: max_k must be non-negative");
    values_.reserve(static_cast<std::size_t>(max_k) + 1);
    for (int k = 0; k <= max_k; ++k) values_.push_back(normalized_moment(family_, k));
}

Rational MomentTable::operator[](int k) const
{
    if (k < 0) return Rational(0);
    if (k > max_k()) throw std::out_of_range("MomentTable: moment " + std::to_string(k) + " not tabulated");
    return values_[static_cast<std::size_t>(k)];
}

Rational univariate_inner(const WeightFamily& family, const UniPoly& p, const UniPoly& q)
{
    if (p.is_zero() || q.is_zero()) return Rational(0);
    const MomentTable m(family, p.degree() + q.degree());
    Rational sum(0);
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i).is_zero()) continue;
        for (int j = 0; j <= q.degree(); ++j)
            if (!q.coeff(j).is_zero()) sum += p.coeff(i) * q.coeff(j) * m[i + j];
    }
    return sum;
}

std::vector<UniPoly> univariate_gram_schmidt(const WeightFamily& family, int n_max)
{
    if (n_max < 0) throw std::out_of_range("univariate_gram_schmidt: n_max must be non-negative");
    std::vector<UniPoly> out;
    std::vector<Rational> norms;
    for (int n = 0; n <= n_max; ++n) {
        std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
        c.back() = Rational(1);
        const UniPoly mono(c);
        UniPoly p = mono;
        for (std::size_t i = 0; i < out.size(); ++i) p -= out[i] * (univariate_inner(family, mono, out[i]) / norms[i]);
        norms.push_back(univariate_inner(family, p, p));
        if (norms.back().sign() <= 0) throw InvariantViolation("univariate Gram-Schmidt met a non-positive norm");
        out.push_back(std::move(p));
    }
    return out;
}

// ---------------------------------------------------------------------------

InnerProducts::InnerProducts(ProductWeight weight, int max_poly_degree)
    : weight_(std::move(weight)),
      mx_(weight_.x_family(), 2 * std::max(max_poly_degree, 0)),
      my_(weight_.y_family(), 2 * std::max(max_poly_degree, 0))
{
}

Rational InnerProducts::inner_W(const BiPoly& f, const BiPoly& g) const
{
    const auto ft = f.terms();
    const auto gt = g.terms();
    Rational sum(0);
    for (const auto& a : ft)
        for (const auto& b : gt) {
            const Rational my = my_[a.j + b.j];
            if (my.is_zero()) continue;
            const Rational mx = mx_[a.i + b.i];
            if (mx.is_zero()) continue;
            sum += a.coeff * b.coeff * mx * my;
        }
    return sum;
}

Rational InnerProducts::inner_nabla(const BiPoly& f, const BiPoly& g) const
{
    return inner_W(f.d_dx(), g.d_dx()) + inner_W(f.d_dy(), g.d_dy());
}

Rational InnerProducts::inner_S(const Rational& lambda, const BiPoly& f, const BiPoly& g) const
{
    if (lambda.sign() <= 0) throw ParameterError("lambda must be positive, got " + lambda.str());
    const auto& c = weight_.corner();
    return inner_nabla(f, g) + lambda * f(c.x, c.y) * g(c.x, c.y);
}

namespace {

int joint_degree(const BiPoly& f, const BiPoly& g) { return std::max({f.effective_degree(), g.effective_degree(), 0}); }

}  // namespace

Rational inner_W(const ProductWeight& pw, const BiPoly& f, const BiPoly& g)
{
    return InnerProducts(pw, joint_degree(f, g)).inner_W(f, g);
}

Rational inner_nabla(const ProductWeight& pw, const BiPoly& f, const BiPoly& g)
{
    return InnerProducts(pw, joint_degree(f, g)).inner_nabla(f, g);
}

Rational inner_S(const ProductWeight& pw, const Rational& lambda, const BiPoly& f, const BiPoly& g)
{
    return InnerProducts(pw, joint_degree(f, g)).inner_S(lambda, f, g);
}

// ---------------------------------------------------------------------------

namespace {

using Vec = std::vector<Rational>;

std::size_t monomial_index(int n, int k) { return static_cast<std::size_t>(n * (n + 1) / 2 + k); }

Rational gram_inner(const std::vector<Vec>& gram, const Vec& u, const Vec& v)
{
    Rational sum(0);
    for (std::size_t r = 0; r < u.size(); ++r) {
        if (u[r].is_zero()) continue;
        Rational row(0);
        for (std::size_t c = 0; c < v.size(); ++c)
            if (!v[c].is_zero() && !gram[r][c].is_zero()) row += gram[r][c] * v[c];
        sum += u[r] * row;
    }
    return sum;
}

void axpy(Vec& y, const Rational& a, const Vec& x)
{
    if (a.is_zero()) return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!x[i].is_zero()) y[i] += a * x[i];
}

}  // namespace

std::vector<std::vector<BiPoly>> gram_schmidt_sobolev(const ProductWeight& pw, const Rational& lambda, int max_degree)
{
    if (lambda.sign() <= 0) throw ParameterError("lambda must be positive, got " + lambda.str());
    if (max_degree < 0) throw std::out_of_range("gram_schmidt_sobolev: max_degree must be non-negative");

    // Gram matrix of the monomials x^{n-k} y^k under inner_S.
    const std::size_t dim = monomial_index(max_degree + 1, 0);
    const InnerProducts ip(pw, max_degree);
    std::vector<BiPoly> monomials;
    for (int n = 0; n <= max_degree; ++n)
        for (int k = 0; k <= n; ++k) monomials.push_back(BiPoly::monomial(n - k, k));
    std::vector<Vec> gram(dim, Vec(dim));
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = r; c < dim; ++c) gram[r][c] = gram[c][r] = ip.inner_S(lambda, monomials[r], monomials[c]);

    std::vector<Vec> chain;
    std::vector<Rational> chain_norms;
    std::vector<std::vector<BiPoly>> result;
    for (int n = 0; n <= max_degree; ++n) {
        const std::size_t lower = chain.size();  // chain[0..lower) spans degree < n
        std::vector<BiPoly> level;
        for (int k = 0; k <= n; ++k) {
            Vec e(dim, Rational(0));
            e[monomial_index(n, k)] = Rational(1);
            const Vec mono = e;
            for (std::size_t i = 0; i < lower; ++i) axpy(e, -gram_inner(gram, mono, chain[i]) / chain_norms[i], chain[i]);

            BiPoly s(n);
            for (int m = 0; m <= n; ++m)
                for (int j = 0; j <= m; ++j) s.set(m - j, j, e[monomial_index(m, j)]);
            level.push_back(std::move(s));

            // Continue the orthogonal chain through this degree.
            for (std::size_t i = lower; i < chain.size(); ++i)
                axpy(e, -gram_inner(gram, mono, chain[i]) / chain_norms[i], chain[i]);
            Rational norm = gram_inner(gram, e, e);
            if (norm.sign() <= 0)
                throw InvariantViolation("Gram-Schmidt met a non-positive self inner product at n=" +
                                         std::to_string(n) + ", k=" + std::to_string(k));
            chain.push_back(std::move(e));
            chain_norms.push_back(std::move(norm));
        }
        result.push_back(std::move(level));
    }
    return result;
}

bool equal_up_to_constant(const BiPoly& f, const BiPoly& g)
{
    for (const auto& t : (f - g).terms())
        if (t.i != 0 || t.j != 0) return false;
    return true;
}

}  // namespace sobolev2d
