#ifndef FGSP6_LINALG_HPP
#define FGSP6_LINALG_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fgsp6/scalar.hpp"

namespace fgsp6 {

// Small dense matrix over an exact field (Rational or GaussianRational).
// Sizes here are at most 32, so plain Gaussian elimination is all we need.
template <class K>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), v_(r * c, K(0)) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& operator()(std::size_t i, std::size_t j) { return v_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return v_[i * cols_ + j]; }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.v_ == b.v_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    Mat operator+(const Mat& o) const {
        require_same_shape(o);
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = v_[i] + o.v_[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        require_same_shape(o);
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = v_[i] - o.v_[i];
        return r;
    }
    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const K& a = (*this)(i, k);
                if (scalar_is_zero(a)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }
    Mat operator*(const K& s) const {
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = v_[i] * s;
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        for (const K& x : v_)
            if (!scalar_is_zero(x)) return false;
        return true;
    }

    K det() const {
        if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
        Mat a(*this);
        K d(1);
        for (std::size_t c = 0; c < cols_; ++c) {
            std::size_t p = c;
            while (p < rows_ && scalar_is_zero(a(p, c))) ++p;
            if (p == rows_) return K(0);
            if (p != c) {
                for (std::size_t j = 0; j < cols_; ++j) std::swap(a(p, j), a(c, j));
                d = -d;
            }
            d = d * a(c, c);
            K inv = K(1) / a(c, c);
            for (std::size_t i = c + 1; i < rows_; ++i) {
                if (scalar_is_zero(a(i, c))) continue;
                K f = a(i, c) * inv;
                for (std::size_t j = c; j < cols_; ++j) a(i, j) = a(i, j) - f * a(c, j);
            }
        }
        return d;
    }

    std::optional<Mat> inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
        Mat a(*this);
        Mat r = identity(rows_);
        for (std::size_t c = 0; c < cols_; ++c) {
            std::size_t p = c;
            while (p < rows_ && scalar_is_zero(a(p, c))) ++p;
            if (p == rows_) return std::nullopt;
            if (p != c)
                for (std::size_t j = 0; j < cols_; ++j) {
                    std::swap(a(p, j), a(c, j));
                    std::swap(r(p, j), r(c, j));
                }
            K inv = K(1) / a(c, c);
            for (std::size_t j = 0; j < cols_; ++j) {
                a(c, j) = a(c, j) * inv;
                r(c, j) = r(c, j) * inv;
            }
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == c || scalar_is_zero(a(i, c))) continue;
                K f = a(i, c);
                for (std::size_t j = 0; j < cols_; ++j) {
                    a(i, j) = a(i, j) - f * a(c, j);
                    r(i, j) = r(i, j) - f * r(c, j);
                }
            }
        }
        return r;
    }

    // Basis of the right kernel {x : M x = 0}, columns as vectors.
    std::vector<std::vector<K>> kernel_basis() const {
        Mat a(*this);
        std::vector<std::size_t> pivot_col;
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
            std::size_t p = rank;
            while (p < rows_ && scalar_is_zero(a(p, c))) ++p;
            if (p == rows_) continue;
            if (p != rank)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(a(p, j), a(rank, j));
            K inv = K(1) / a(rank, c);
            for (std::size_t j = 0; j < cols_; ++j) a(rank, j) = a(rank, j) * inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == rank || scalar_is_zero(a(i, c))) continue;
                K f = a(i, c);
                for (std::size_t j = 0; j < cols_; ++j) a(i, j) = a(i, j) - f * a(rank, j);
            }
            pivot_col.push_back(c);
            ++rank;
        }
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivot_col) is_pivot[c] = true;
        std::vector<std::vector<K>> basis;
        for (std::size_t fc = 0; fc < cols_; ++fc) {
            if (is_pivot[fc]) continue;
            std::vector<K> x(cols_, K(0));
            x[fc] = K(1);
            for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = -a(r, fc);
            basis.push_back(std::move(x));
        }
        return basis;
    }

private:
    void require_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<K> v_;
};

using MatQ = Mat<Rational>;

}  // namespace fgsp6

#endif
