#ifndef SOBOLEV2D_MATRIX_HPP
#define SOBOLEV2D_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "sobolev2d/rational.hpp"

namespace sobolev2d {

/// Dense row-major matrix of exact rationals. Zero-sized dimensions are
/// allowed (e.g. the 1x0 coupling matrix at degree one).
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix diagonal(const std::vector<Rational>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalMatrix transpose() const;
    /// Rows [r0, r0 + nr) and columns [c0, c0 + nc).
    RationalMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    RationalMatrix& operator+=(const RationalMatrix& rhs);
    RationalMatrix& operator-=(const RationalMatrix& rhs);
    RationalMatrix& operator*=(const Rational& s);
    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
    friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
    friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

    bool is_symmetric() const;
    bool is_zero() const;
    /// Every leading principal minor is positive (checked by pivot-free
    /// elimination: all pivots must be positive).
    bool is_positive_definite() const;

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Exact inverse by Gauss-Jordan elimination; the pivot is the first
/// nonzero entry of the column. Throws std::domain_error if singular.
RationalMatrix inverse(const RationalMatrix& a);

/// Solves a x = b exactly (b may have several columns). Throws
/// std::domain_error if a is singular.
RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace sobolev2d

#endif  // SOBOLEV2D_MATRIX_HPP
