#include "sobolev2d/univariate.hpp"

#include <stdexcept>

#include "sobolev2d/errors.hpp"

namespace sobolev2d {

std::string to_string(FamilyKind kind)
{
    return kind == FamilyKind::Laguerre ? "laguerre" : "gegenbauer";
}

FamilyKind parse_family_kind(const std::string& name)
{
    if (name == "laguerre") return FamilyKind::Laguerre;
    if (name == "gegenbauer") return FamilyKind::Gegenbauer;
    throw ParameterError("unknown weight family '" + name + "' (expected laguerre or gegenbauer)");
}

WeightFamily::WeightFamily(FamilyKind kind, Rational param) : kind_(kind), param_(std::move(param))
{
    if (kind_ == FamilyKind::Laguerre) {
        if (param_ <= Rational(-1))
            throw ParameterError("Laguerre parameter must satisfy alpha > -1, got " + param_.str());
    } else {
        if (param_ <= Rational(-1, 2))
            throw ParameterError("Gegenbauer parameter must satisfy alpha > -1/2, got " + param_.str());
        if (param_.is_zero())
            throw SingularParameterError(
                "Gegenbauer parameter alpha = 0 is singular: the coherence coefficient "
                "b_1(alpha) = -1/(4 alpha (alpha + 1)) has a zero denominator");
    }
}

// ---------------------------------------------------------------------------

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const
{
    if (i < 0 || i > degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational UniPoly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational UniPoly::operator()(const Rational& x) const
{
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const
{
    std::vector<Rational> d;
    for (int i = 1; i <= degree(); ++i) d.push_back(coeffs_[static_cast<std::size_t>(i)] * Rational(i));
    return UniPoly(std::move(d));
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s)
{
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(out));
}

// ---------------------------------------------------------------------------

Recurrence recurrence_coefficients(const WeightFamily& family, int n)
{
    if (n < 0) throw std::out_of_range("recurrence index must be nonnegative");
    const Rational& a = family.param();
    const Rational nn(n);
    if (family.kind() == FamilyKind::Laguerre) {
        // p_{n+1} = (x - (2n + a + 1)) p_n - n (n + a) p_{n-1}
        return {Rational(2 * n + 1) + a, nn * (nn + a)};
    }
    // p_{n+1} = x p_n - n (n + 2a - 1) / (4 (n + a)(n + a - 1)) p_{n-1}
    if (n == 0) return {Rational(0), Rational(0)};
    const Rational den = Rational(4) * (nn + a) * (nn + a - Rational(1));
    if (den.is_zero()) throw SingularParameterError("Gegenbauer recurrence is singular at alpha = " + a.str());
    return {Rational(0), nn * (nn + Rational(2) * a - Rational(1)) / den};
}

std::vector<UniPoly> monic_sequence(const WeightFamily& family, int n_max)
{
    if (n_max < 0) throw std::out_of_range("monic_sequence: negative degree");
    std::vector<UniPoly> p;
    p.reserve(static_cast<std::size_t>(n_max) + 1);
    p.push_back(UniPoly::constant(1));
    for (int n = 0; n < n_max; ++n) {
        const auto rec = recurrence_coefficients(family, n);
        UniPoly next = UniPoly::x() * p.back() - p.back() * rec.shift;
        if (n > 0) next -= p[static_cast<std::size_t>(n) - 1] * rec.gamma;
        p.push_back(std::move(next));
    }
    return p;
}

Rational squared_norm(const WeightFamily& family, int n)
{
    if (n < 0) throw std::out_of_range("squared_norm: negative degree");
    // h_n = gamma_n h_{n-1}, h_0 = 1 for the normalised weight.
    Rational h(1);
    for (int k = 1; k <= n; ++k) h *= recurrence_coefficients(family, k).gamma;
    return h;
}

Coherence coherence_coefficient(const WeightFamily& family, int n)
{
    if (n < 1) throw std::out_of_range("coherence_coefficient: n must be positive");
    if (family.kind() == FamilyKind::Laguerre) return {Rational(1), Rational(0)};
    if (n == 1) return {Rational(0), Rational(0)};
    // b_{n-1}(a) = -(n - 1) / (4 (n + a - 1)(n + a - 2))
    const Rational& a = family.param();
    const Rational den = Rational(4) * (Rational(n - 1) + a) * (Rational(n - 2) + a);
    if (den.is_zero())
        throw SingularParameterError("Gegenbauer coherence coefficient b_" + std::to_string(n - 1) +
                                     " is singular at alpha = " + a.str());
    return {Rational(0), -Rational(n - 1) / den};
}

std::vector<UniPoly> q_sequence(const WeightFamily& family, int n_max)
{
    const auto p = monic_sequence(family, n_max);
    std::vector<UniPoly> q;
    q.reserve(p.size());
    q.push_back(p[0]);
    for (int n = 1; n <= n_max; ++n) {
        const auto [a, b] = coherence_coefficient(family, n);
        const auto un = static_cast<std::size_t>(n);
        UniPoly qn = p[un] + p[un - 1] * (Rational(n) * a);
        if (n >= 2) qn += p[un - 2] * (Rational(n) * b);
        q.push_back(std::move(qn));
    }
    return q;
}

}  // namespace sobolev2d
