#ifndef SOBOLEV2D_TEST_HELPERS_HPP
#define SOBOLEV2D_TEST_HELPERS_HPP

#include <filesystem>
#include <initializer_list>
#include <random>
#include <string>
#include <tuple>

#include "sobolev2d/bipoly.hpp"
#include "sobolev2d/product_basis.hpp"
#include "sobolev2d/rational.hpp"

namespace testing {

using sobolev2d::BiPoly;
using sobolev2d::Rational;

inline Rational q(const char* text) { return Rational::parse(text); }

/// Polynomial from (i, j, coeff) triples, c x^i y^j.
inline BiPoly poly(std::initializer_list<std::tuple<int, int, Rational>> terms)
{
    BiPoly f;
    for (const auto& [i, j, c] : terms) f += BiPoly::monomial(i, j, c);
    return f;
}

/// The four parameter sets used throughout.
inline sobolev2d::ProductWeight laguerre_00() { return sobolev2d::ProductWeight::laguerre(0, 0); }
inline sobolev2d::ProductWeight laguerre_half() { return sobolev2d::ProductWeight::laguerre(q("1/2"), q("3/2")); }
inline sobolev2d::ProductWeight gegenbauer_11() { return sobolev2d::ProductWeight::gegenbauer(1, 1); }
inline sobolev2d::ProductWeight gegenbauer_half() { return sobolev2d::ProductWeight::gegenbauer(q("3/2"), q("1/2")); }

/// Random rational parameters in the admissible range of each family.
class ParamGen {
public:
    explicit ParamGen(unsigned seed) : rng_(seed) {}

    Rational laguerre()
    {
        const long den = pick(1, 6);
        return Rational(pick(-den + 1, 4 * den), den);
    }

    Rational gegenbauer()
    {
        for (;;) {
            const long den = pick(1, 6);
            const long num = pick(-den / 2, 3 * den);
            const Rational a(num, den);
            if (a > Rational(-1, 2) && !a.is_zero()) return a;
        }
    }

    sobolev2d::ProductWeight weight(sobolev2d::FamilyKind kind)
    {
        if (kind == sobolev2d::FamilyKind::Laguerre) return sobolev2d::ProductWeight::laguerre(laguerre(), laguerre());
        const sobolev2d::Corner corners[] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
        const Rational a = gegenbauer();
        const Rational b = gegenbauer();
        return sobolev2d::ProductWeight::gegenbauer(a, b, corners[pick(0, 3)]);
    }

    long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

private:
    std::mt19937 rng_;
};

inline std::filesystem::path temp_path(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / "sobolev2d_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace testing

#endif  // SOBOLEV2D_TEST_HELPERS_HPP
