#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "sobolev2d/bipoly.hpp"
#include "sobolev2d/matrix.hpp"

using namespace sobolev2d;
using testing::poly;
using testing::q;

TEST_CASE("bivariate polynomial arithmetic")
{
    const BiPoly f = poly({{1, 1, 1}, {1, 0, -1}, {0, 1, -1}});
    CHECK(f.degree() == 2);
    CHECK(f.effective_degree() == 2);
    CHECK(f(0, 0) == Rational(0));
    CHECK(f(2, 3) == Rational(1));
    CHECK(f.d_dx() == poly({{0, 1, 1}, {0, 0, -1}}));
    CHECK(f.d_dy() == poly({{1, 0, 1}, {0, 0, -1}}));
    CHECK(f.swapped() == f);
    CHECK(poly({{2, 1, 3}}).swapped() == poly({{1, 2, 3}}));
    CHECK(f * f == poly({{2, 2, 1}, {2, 1, -2}, {1, 2, -2}, {2, 0, 1}, {0, 2, 1}, {1, 1, 2}}));
    CHECK((f - f).is_zero());
    CHECK(BiPoly::outer(UniPoly{-1, 1}, UniPoly{-1, 1}) == poly({{1, 1, 1}, {1, 0, -1}, {0, 1, -1}, {0, 0, 1}}));
    CHECK(f.with_degree(5) == f);
    CHECK_THROWS(f.with_degree(1));
}

TEST_CASE("terms are ordered by total degree then by the power of y")
{
    const auto terms = poly({{0, 2, 5}, {2, 0, 1}, {0, 0, 3}, {1, 0, 2}}).terms();
    REQUIRE(terms.size() == 4);
    CHECK(terms[0].i == 0);
    CHECK(terms[1].i == 1);
    CHECK((terms[2].i == 2 && terms[2].j == 0));
    CHECK((terms[3].i == 0 && terms[3].j == 2));
}

TEST_CASE("monic test")
{
    CHECK(is_monic(poly({{2, 1, 1}, {1, 0, 3}}), 3, 1));
    CHECK_FALSE(is_monic(poly({{2, 1, 1}, {1, 2, 1}}), 3, 1));
    CHECK_FALSE(is_monic(poly({{2, 1, 2}}), 3, 1));
    CHECK_FALSE(is_monic(poly({{2, 1, 1}, {4, 0, 1}}), 3, 1));
}

TEST_CASE("exact linear algebra")
{
    const RationalMatrix a{{2, 1}, {1, 3}};
    const RationalMatrix inv = inverse(a);
    CHECK(inv == RationalMatrix{{q("3/5"), q("-1/5")}, {q("-1/5"), q("2/5")}});
    CHECK(a * inv == RationalMatrix::identity(2));
    CHECK(a.is_positive_definite());
    CHECK_FALSE(RationalMatrix({{1, 2}, {2, 1}}).is_positive_definite());
    CHECK_THROWS_AS(inverse(RationalMatrix{{1, 2}, {2, 4}}), std::domain_error);
    // zero pivot in the first column needs a row swap
    CHECK(solve(RationalMatrix{{0, 1}, {1, 0}}, RationalMatrix{{2}, {3}}) == RationalMatrix{{3}, {2}});

    const RationalMatrix empty(0, 0);
    CHECK(inverse(empty) == empty);
    CHECK((RationalMatrix(1, 0) * empty).rows() == 1);
    CHECK(RationalMatrix{{1, 2, 3}, {4, 5, 6}}.block(0, 1, 2, 2) == RationalMatrix{{2, 3}, {5, 6}});
    CHECK(RationalMatrix{{1, 2}}.transpose() == RationalMatrix{{1}, {2}});
}
