#include "sobolev2d/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sobolev2d {

BiPoly::BiPoly(int degree)
{
    if (degree < 0) throw std::invalid_argument("BiPoly degree must be nonnegative");
    degree_ = degree;
    coeffs_.assign(index(0, degree) + 1, Rational(0));
}

std::size_t BiPoly::index(int i, int j)
{
    const auto t = static_cast<std::size_t>(i + j);
    return t * (t + 1) / 2 + static_cast<std::size_t>(j);
}

void BiPoly::grow(int degree)
{
    if (degree <= degree_) return;
    degree_ = degree;
    coeffs_.resize(index(0, degree) + 1, Rational(0));
}

BiPoly BiPoly::constant(const Rational& c)
{
    BiPoly p(0);
    p.set(0, 0, c);
    return p;
}

BiPoly BiPoly::monomial(int i, int j, const Rational& c)
{
    BiPoly p(i + j);
    p.set(i, j, c);
    return p;
}

BiPoly BiPoly::outer(const UniPoly& px, const UniPoly& py)
{
    BiPoly p(std::max(0, px.degree() + py.degree()));
    for (int i = 0; i <= px.degree(); ++i)
        for (int j = 0; j <= py.degree(); ++j) p.set(i, j, px.coeff(i) * py.coeff(j));
    return p;
}

int BiPoly::effective_degree() const
{
    for (int t = degree_; t >= 0; --t)
        for (int j = 0; j <= t; ++j)
            if (!coeffs_[index(t - j, j)].is_zero()) return t;
    return -1;
}

Rational BiPoly::coeff(int i, int j) const
{
    if (i < 0 || j < 0 || i + j > degree_) return Rational(0);
    return coeffs_[index(i, j)];
}

void BiPoly::set(int i, int j, Rational value)
{
    if (i < 0 || j < 0 || i + j > degree_)
        throw std::out_of_range("BiPoly::set: (" + std::to_string(i) + "," + std::to_string(j) +
                                ") outside declared degree " + std::to_string(degree_));
    coeffs_[index(i, j)] = std::move(value);
}

void BiPoly::add_to(int i, int j, const Rational& value)
{
    if (i < 0 || j < 0 || i + j > degree_) throw std::out_of_range("BiPoly::add_to: outside declared degree");
    coeffs_[index(i, j)] += value;
}

std::vector<BiPoly::Term> BiPoly::terms() const
{
    std::vector<Term> out;
    for (int t = 0; t <= degree_; ++t)
        for (int j = 0; j <= t; ++j) {
            const auto& c = coeffs_[index(t - j, j)];
            if (!c.is_zero()) out.push_back({t - j, j, c});
        }
    return out;
}

Rational BiPoly::operator()(const Rational& x, const Rational& y) const
{
    Rational acc(0);
    for (const auto& [i, j, c] : terms()) acc += c * pow(x, static_cast<unsigned>(i)) * pow(y, static_cast<unsigned>(j));
    return acc;
}

BiPoly BiPoly::d_dx() const
{
    BiPoly out(std::max(0, degree_ - 1));
    for (const auto& [i, j, c] : terms())
        if (i > 0) out.set(i - 1, j, c * Rational(i));
    return out;
}

BiPoly BiPoly::d_dy() const
{
    BiPoly out(std::max(0, degree_ - 1));
    for (const auto& [i, j, c] : terms())
        if (j > 0) out.set(i, j - 1, c * Rational(j));
    return out;
}

BiPoly BiPoly::swapped() const
{
    BiPoly out(degree_);
    for (const auto& [i, j, c] : terms()) out.set(j, i, c);
    return out;
}

BiPoly BiPoly::with_degree(int degree) const
{
    if (effective_degree() > degree)
        throw std::invalid_argument("BiPoly::with_degree would drop nonzero coefficients");
    BiPoly out(degree);
    for (const auto& [i, j, c] : terms()) out.set(i, j, c);
    return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs)
{
    grow(rhs.degree_);
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs)
{
    grow(rhs.degree_);
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& s)
{
    for (auto& c : coeffs_) c *= s;
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b)
{
    BiPoly out(a.degree_ + b.degree_);
    const auto ta = a.terms();
    const auto tb = b.terms();
    for (const auto& x : ta)
        for (const auto& y : tb) out.add_to(x.i + y.i, x.j + y.j, x.coeff * y.coeff);
    return out;
}

bool operator==(const BiPoly& a, const BiPoly& b)
{
    const int d = std::max(a.degree_, b.degree_);
    for (int t = 0; t <= d; ++t)
        for (int j = 0; j <= t; ++j)
            if (a.coeff(t - j, j) != b.coeff(t - j, j)) return false;
    return true;
}

std::string BiPoly::str() const
{
    const auto ts = terms();
    if (ts.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest degree first.
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
        const auto& [i, j, c] = *it;
        const bool negative = c.sign() < 0;
        const Rational mag = abs(c);
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        const bool unit = mag == Rational(1);
        if (!unit || (i == 0 && j == 0)) os << mag;
        if (!unit && (i > 0 || j > 0)) os << "*";
        if (i > 0) os << "x" << (i > 1 ? "^" + std::to_string(i) : "");
        if (i > 0 && j > 0) os << "*";
        if (j > 0) os << "y" << (j > 1 ? "^" + std::to_string(j) : "");
    }
    return os.str();
}

bool is_monic(const BiPoly& f, int n, int k)
{
    if (f.effective_degree() != n) return false;
    for (int j = 0; j <= n; ++j)
        if (f.coeff(n - j, j) != Rational(j == k ? 1 : 0)) return false;
    return true;
}

}  // namespace sobolev2d
