/**
 * Exact arithmetic layer: arbitrary-precision rationals, a small dense
 * rational matrix type, and exact rank computation by fraction-preserving
 * Gaussian elimination.
 *
 * Floating-point linear algebra lives in Eigen; everything that decides an
 * integer quantity (ranks, Betti numbers, kernel dimensions, exact matrix
 * equality) runs through this header instead.
 */

#ifndef HDX_EXACT_HPP
#define HDX_EXACT_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "hdx/errors.hpp"

namespace hdx {

using Rational = boost::multiprecision::cpp_rational;

/** Dense matrix with exact 64-bit integer entries (boundary matrices). */
using IntMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

using Index = Eigen::Index;

/**
 * Dense matrix over the rationals.
 *
 * Deliberately minimal: only the operations the exact code paths need.
 * Kept separate from Eigen because expression templates and multiprecision
 * scalars interact badly in the toolchain versions this targets.
 */
class RatMat {
public:
    RatMat() = default;

    RatMat(Index rows, Index cols)
        : rows_(rows), cols_(cols), v_(static_cast<std::size_t>(rows * cols)) {}

    static RatMat zero(Index rows, Index cols) { return RatMat(rows, cols); }

    static RatMat identity(Index n) {
        RatMat m(n, n);
        for (Index i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    static RatMat from_int(const IntMat& a) {
        RatMat m(a.rows(), a.cols());
        for (Index i = 0; i < a.rows(); ++i)
            for (Index j = 0; j < a.cols(); ++j)
                m(i, j) = a(i, j);
        return m;
    }

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }

    Rational& operator()(Index i, Index j) {
        return v_[static_cast<std::size_t>(i * cols_ + j)];
    }
    const Rational& operator()(Index i, Index j) const {
        return v_[static_cast<std::size_t>(i * cols_ + j)];
    }

    RatMat transpose() const {
        RatMat t(cols_, rows_);
        for (Index i = 0; i < rows_; ++i)
            for (Index j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    RatMat operator*(const RatMat& o) const {
        if (cols_ != o.rows_)
            throw DimensionMismatch("RatMat product: inner dimensions differ");
        RatMat r(rows_, o.cols_);
        for (Index i = 0; i < rows_; ++i)
            for (Index k = 0; k < cols_; ++k) {
                const Rational& a = (*this)(i, k);
                if (a == 0)
                    continue;
                for (Index j = 0; j < o.cols_; ++j) {
                    const Rational& b = o(k, j);
                    if (b != 0)
                        r(i, j) += a * b;
                }
            }
        return r;
    }

    RatMat operator+(const RatMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch("RatMat sum: shapes differ");
        RatMat r(rows_, cols_);
        for (std::size_t i = 0; i < v_.size(); ++i)
            r.v_[i] = v_[i] + o.v_[i];
        return r;
    }

    RatMat operator-(const RatMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch("RatMat difference: shapes differ");
        RatMat r(rows_, cols_);
        for (std::size_t i = 0; i < v_.size(); ++i)
            r.v_[i] = v_[i] - o.v_[i];
        return r;
    }

    bool operator==(const RatMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && v_ == o.v_;
    }

    bool is_zero() const {
        for (const Rational& x : v_)
            if (x != 0)
                return false;
        return true;
    }

    /** Largest absolute value of any entry. */
    Rational max_abs() const {
        Rational m = 0;
        for (const Rational& x : v_) {
            Rational a = x < 0 ? Rational(-x) : x;
            if (a > m)
                m = a;
        }
        return m;
    }

    /** True if every entry is an integer. */
    bool is_integral() const {
        for (const Rational& x : v_)
            if (denominator(x) != 1)
                return false;
        return true;
    }

    Eigen::MatrixXd to_double() const {
        Eigen::MatrixXd m(rows_, cols_);
        for (Index i = 0; i < rows_; ++i)
            for (Index j = 0; j < cols_; ++j)
                m(i, j) = static_cast<double>((*this)(i, j));
        return m;
    }

private:
    Index rows_ = 0;
    Index cols_ = 0;
    std::vector<Rational> v_;
};

/**
 * Rank over the rationals, by Gaussian elimination on a working copy.
 *
 * Exact: the result is the true rank, not a numerical estimate.
 */
inline Index rational_rank(RatMat a) {
    const Index rows = a.rows(), cols = a.cols();
    Index rank = 0;
    Index pivot_row = 0;
    for (Index col = 0; col < cols && pivot_row < rows; ++col) {
        Index p = -1;
        for (Index i = pivot_row; i < rows; ++i)
            if (a(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        if (p != pivot_row)
            for (Index j = col; j < cols; ++j)
                std::swap(a(p, j), a(pivot_row, j));
        const Rational pivot = a(pivot_row, col);
        for (Index i = pivot_row + 1; i < rows; ++i) {
            if (a(i, col) == 0)
                continue;
            const Rational f = a(i, col) / pivot;
            a(i, col) = 0;
            for (Index j = col + 1; j < cols; ++j)
                if (a(pivot_row, j) != 0)
                    a(i, j) -= f * a(pivot_row, j);
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

inline Index rational_rank(const IntMat& a) { return rational_rank(RatMat::from_int(a)); }

/** dim ker over the rationals (columns minus rank). */
inline Index rational_kernel_dim(const RatMat& a) { return a.cols() - rational_rank(a); }

inline Index rational_kernel_dim(const IntMat& a) { return a.cols() - rational_rank(a); }

} // namespace hdx

#endif // HDX_EXACT_HPP
