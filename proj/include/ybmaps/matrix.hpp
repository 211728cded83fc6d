#pragma once

#include <cstddef>
#include <vector>

#include "ybmaps/errors.hpp"
#include "ybmaps/rational.hpp"

namespace ybmaps {

/// Small dense matrix over an arbitrary scalar; used for Poisson matrices and
/// Jacobians (dimensions are at most the map dimension).
template <class S>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), d_(rows * cols, S(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    S& at(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
    const S& at(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw SizeMismatch("matrix product size mismatch");
        Mat r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const S& aik = a.at(i, k);
                for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }

    Mat transposed() const {
        Mat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    std::vector<S> apply(const std::vector<S>& v) const {
        if (v.size() != cols_) throw SizeMismatch("matrix-vector size mismatch");
        std::vector<S> r(rows_, S(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
        return r;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<S> d_;
};

/// Exact rank via fraction-free (Bareiss) elimination: rows are first cleared of
/// denominators, then eliminated over the integers with exact divisions only.
int exact_rank(const Mat<Rational>& m);

}  // namespace ybmaps
