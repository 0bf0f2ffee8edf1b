#ifndef SOBOLEV2D_SOBOLEV_HPP
#define SOBOLEV2D_SOBOLEV_HPP

#include <vector>

#include "sobolev2d/bipoly.hpp"
#include "sobolev2d/matrix.hpp"
#include "sobolev2d/product_basis.hpp"
#include "sobolev2d/rational.hpp"

namespace sobolev2d {

/// One step of the reduced iteration at degree n >= 1.
///
/// h_hat is the (n-1)x(n-1) gradient Gram matrix of the interior
/// polynomials (S_1^n, ..., S_{n-1}^n). coupling is A_hat_n, n x (n-1),
/// for Laguerre and B_hat_n, (n+1) x (n-1), for Gegenbauer. basis holds
/// the n+1 canonical monic representatives S_0^n .. S_n^n once assembled.
struct DegreeBlock {
    int degree = 0;
    RationalMatrix h_hat;
    RationalMatrix coupling;
    RationalMatrix d;
    RationalMatrix c;
    std::vector<BiPoly> basis;
};

/// Monic basis for the full Sobolev inner product up to degree N.
/// shifted[n][k] vanishes at the corner for n >= 1 and shifted[0][0] = 1.
struct SobolevBasis {
    ProductWeight weight;
    Rational lambda;
    int max_degree = 0;
    std::vector<DegreeBlock> blocks;
    std::vector<std::vector<BiPoly>> shifted;

    const DegreeBlock& block(int n) const { return blocks.at(static_cast<std::size_t>(n - 1)); }
};

/// Runs the H_hat / coupling recursion for n = 1..N. The returned blocks
/// have an empty basis; see assemble(). Throws InvariantViolation if some
/// H_hat_n fails to be positive definite.
std::vector<DegreeBlock> iterate(const ProductWeight& pw, int max_degree);

/// Canonical S_k^n for each block (result[i] belongs to blocks[i]):
/// S_0^n = Q_0^n, S_n^n = Q_n^n and the interior vector from the hatted
/// recursion with no constant adjustment.
std::vector<std::vector<BiPoly>> assemble(const ProductWeight& pw, const std::vector<DegreeBlock>& blocks);

/// iterate() followed by assemble(), with the basis stored in each block.
std::vector<DegreeBlock> build_blocks(const ProductWeight& pw, int max_degree);

/// Subtracts S_k^n(c1, c2) from each basis member. The result does not
/// depend on lambda; lambda is recorded for later verification against the
/// full inner product. Throws ParameterError for lambda <= 0.
SobolevBasis corner_shift(const ProductWeight& pw, std::vector<DegreeBlock> blocks, const Rational& lambda);

SobolevBasis build_sobolev_basis(const ProductWeight& pw, int max_degree, const Rational& lambda);

/// H_n^grad for n = 1..N from the unreduced recursion
///   Laguerre:   H_n = D_n - C_{n-1} H_{n-1}^{-1} C_{n-1}^T
///   Gegenbauer: H_n = D_n - C_{n-2} H_{n-2}^{-1} C_{n-2}^T, H_2 = D_2
/// with H_1 = D_1. result[n-1] is H_n.
std::vector<RationalMatrix> full_gram_recursion(const ProductWeight& pw, int max_degree);

/// diag(d_0^n, H_hat_n, d_n^n) for a block.
RationalMatrix embed_h_hat(const DegreeBlock& block);

/// Solution of the Laguerre lattice system for fixed (n, k).
struct LatticeSolution {
    int n = 0;
    int k = 0;
    /// a[m][l] for 0 <= l <= m <= n-1; level m = 0 multiplies the constant
    /// Q_0^0 and is always zero.
    std::vector<std::vector<Rational>> a;
    /// Q_k^n plus the grouped sum that uses the boundary relations to
    /// eliminate the edge coefficients.
    BiPoly polynomial;
    /// Q_k^n + sum_{j,i} a_i^j Q_i^j without grouping.
    BiPoly direct_sum;

    const Rational& coefficient(int l, int m) const
    {
        return a.at(static_cast<std::size_t>(m)).at(static_cast<std::size_t>(l));
    }
};

/// Solves the five-point lattice recurrence with its boundary relations for
/// the coefficients a_l^m and assembles S_k^n (up to an additive constant).
/// Requires a Laguerre product weight and 1 <= k <= n-1.
LatticeSolution laguerre_lattice_solve(const ProductWeight& pw, int n, int k);
BiPoly laguerre_linear_solve(const ProductWeight& pw, int n, int k);

}  // namespace sobolev2d

#endif  // SOBOLEV2D_SOBOLEV_HPP
