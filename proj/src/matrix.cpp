#include "sobolev2d/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace sobolev2d {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0))
{
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("RationalMatrix: ragged initializer");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& d)
{
    RationalMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

RationalMatrix RationalMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("RationalMatrix::block out of range");
    RationalMatrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& rhs)
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("RationalMatrix: shape mismatch in +");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& rhs)
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("RationalMatrix: shape mismatch in -");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s)
{
    for (auto& v : data_) v *= s;
    return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.cols_ != b.rows_) throw std::invalid_argument("RationalMatrix: shape mismatch in *");
    RationalMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& v = a(r, k);
            if (v.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c)
                if (!b(k, c).is_zero()) out(r, c) += v * b(k, c);
        }
    return out;
}

bool RationalMatrix::is_symmetric() const
{
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
}

bool RationalMatrix::is_zero() const
{
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

bool RationalMatrix::is_positive_definite() const
{
    if (rows_ != cols_ || !is_symmetric()) return false;
    RationalMatrix m = *this;
    const std::size_t n = rows_;
    for (std::size_t k = 0; k < n; ++k) {
        if (m(k, k).sign() <= 0) return false;
        for (std::size_t r = k + 1; r < n; ++r) {
            if (m(r, k).is_zero()) continue;
            const Rational f = m(r, k) / m(k, k);
            for (std::size_t c = k; c < n; ++c) m(r, c) -= f * m(k, c);
        }
    }
    return true;
}

std::string RationalMatrix::str() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    }
    os << "]";
    return os.str();
}

RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.rows() != a.cols() || b.rows() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
    const std::size_t n = a.rows();
    const std::size_t m = b.cols();
    RationalMatrix lhs = a;
    RationalMatrix rhs = b;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && lhs(pivot, k).is_zero()) ++pivot;
        if (pivot == n) throw std::domain_error("solve: singular matrix");
        if (pivot != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(lhs(k, c), lhs(pivot, c));
            for (std::size_t c = 0; c < m; ++c) std::swap(rhs(k, c), rhs(pivot, c));
        }
        const Rational inv = Rational(1) / lhs(k, k);
        for (std::size_t c = k; c < n; ++c) lhs(k, c) *= inv;
        for (std::size_t c = 0; c < m; ++c) rhs(k, c) *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == k || lhs(r, k).is_zero()) continue;
            const Rational f = lhs(r, k);
            for (std::size_t c = k; c < n; ++c)
                if (!lhs(k, c).is_zero()) lhs(r, c) -= f * lhs(k, c);
            for (std::size_t c = 0; c < m; ++c)
                if (!rhs(k, c).is_zero()) rhs(r, c) -= f * rhs(k, c);
        }
    }
    return rhs;
}

RationalMatrix inverse(const RationalMatrix& a) { return solve(a, RationalMatrix::identity(a.rows())); }

}  // namespace sobolev2d
