#include <doctest.h>

#include "helpers.hpp"
#include "sobolev2d/errors.hpp"
#include "sobolev2d/oracle.hpp"
#include "sobolev2d/univariate.hpp"

using namespace sobolev2d;
using testing::q;

TEST_CASE("parameter domains")
{
    CHECK_NOTHROW(WeightFamily::laguerre(q("-1/2")));
    CHECK_THROWS_AS(WeightFamily::laguerre(-1), ParameterError);
    CHECK_THROWS_AS(WeightFamily::laguerre(-2), ParameterError);
    CHECK_NOTHROW(WeightFamily::gegenbauer(q("-1/4")));
    CHECK_THROWS_AS(WeightFamily::gegenbauer(q("-1/2")), ParameterError);
    CHECK_THROWS_AS(WeightFamily::gegenbauer(0), SingularParameterError);
    CHECK(parse_family_kind("laguerre") == FamilyKind::Laguerre);
    CHECK(parse_family_kind("gegenbauer") == FamilyKind::Gegenbauer);
    CHECK_THROWS_AS(parse_family_kind("jacobi"), ParameterError);
}

TEST_CASE("monic polynomials, frozen values")
{
    // Values from the moment Gram-Schmidt oracle.
    const auto lag = monic_sequence(WeightFamily::laguerre(0), 3);
    CHECK(lag[0] == UniPoly{1});
    CHECK(lag[1] == UniPoly{-1, 1});
    CHECK(lag[2] == UniPoly{2, -4, 1});
    CHECK(lag[3] == UniPoly{-6, 18, -9, 1});

    const auto geg = monic_sequence(WeightFamily::gegenbauer(1), 3);
    CHECK(geg[1] == UniPoly{0, 1});
    CHECK(geg[2] == UniPoly{q("-1/4"), 0, 1});
    CHECK(geg[3] == UniPoly{0, q("-1/2"), 0, 1});
}

TEST_CASE("squared norms, frozen values")
{
    CHECK(squared_norm(WeightFamily::laguerre(0), 0) == Rational(1));
    CHECK(squared_norm(WeightFamily::laguerre(0), 2) == Rational(4));
    CHECK(squared_norm(WeightFamily::laguerre(q("1/2")), 2) == q("15/2"));
    CHECK(squared_norm(WeightFamily::gegenbauer(1), 1) == q("1/4"));
    CHECK(squared_norm(WeightFamily::gegenbauer(1), 2) == q("1/16"));
}

TEST_CASE("coherence coefficients")
{
    const auto lag = coherence_coefficient(WeightFamily::laguerre(q("3/2")), 4);
    CHECK(lag.a == Rational(1));
    CHECK(lag.b == Rational(0));
    // b_1(1) = -1/8
    CHECK(coherence_coefficient(WeightFamily::gegenbauer(1), 2).b == q("-1/8"));
    CHECK(coherence_coefficient(WeightFamily::gegenbauer(1), 2).a == Rational(0));
    CHECK(coherence_coefficient(WeightFamily::gegenbauer(1), 1).b == Rational(0));
    const auto q_geg = q_sequence(WeightFamily::gegenbauer(1), 2);
    CHECK(q_geg[2] == UniPoly{q("-1/2"), 0, 1});
}

TEST_CASE("recurrence agrees with moment Gram-Schmidt for random parameters")
{
    testing::ParamGen gen(20240611);
    for (int trial = 0; trial < 12; ++trial) {
        const WeightFamily fam = trial % 2 == 0 ? WeightFamily::laguerre(gen.laguerre())
                                                : WeightFamily::gegenbauer(gen.gegenbauer());
        CAPTURE(fam.param());
        const auto p = monic_sequence(fam, 7);
        const auto oracle = univariate_gram_schmidt(fam, 7);
        for (int n = 0; n <= 7; ++n) {
            CHECK(p[static_cast<std::size_t>(n)] == oracle[static_cast<std::size_t>(n)]);
            CHECK(squared_norm(fam, n) == univariate_inner(fam, p[static_cast<std::size_t>(n)], p[static_cast<std::size_t>(n)]));
            for (int m = 0; m < n; ++m)
                CHECK(univariate_inner(fam, p[static_cast<std::size_t>(n)], p[static_cast<std::size_t>(m)]).is_zero());
        }
    }
}

TEST_CASE("companion polynomials differentiate to n p_{n-1}")
{
    testing::ParamGen gen(7);
    for (int trial = 0; trial < 10; ++trial) {
        const WeightFamily fam = trial % 2 == 0 ? WeightFamily::laguerre(gen.laguerre())
                                                : WeightFamily::gegenbauer(gen.gegenbauer());
        CAPTURE(fam.param());
        const auto p = monic_sequence(fam, 12);
        const auto qs = q_sequence(fam, 12);
        for (int n = 1; n <= 12; ++n) {
            const auto& qn = qs[static_cast<std::size_t>(n)];
            CHECK(qn.degree() == n);
            CHECK(qn.leading() == Rational(1));
            CHECK(qn.derivative() == p[static_cast<std::size_t>(n - 1)] * Rational(n));
        }
    }
}
