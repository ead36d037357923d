#pragma once

#include "forms/errors.hpp"
#include "forms/laurent.hpp"
#include "forms/ratfunc.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace forms {

/* Dense matrices over the group ring and its fraction field.
 *
 * Vectors are columns (n x 1).  Every pairing in the form layer reads
 *
 *     lambda(x, y) = x^T A ybar
 *
 * so a basis change P pulls a Gram matrix back as P^T A Pbar, and the
 * entrywise involution plus transpose is the adjoint.  The same template
 * carries integer matrices (T = Int) for the lattice computations in the
 * Seifert pipeline. */
template <typename T>
class Mat {
public:
    Mat() = default;
    Mat(size_t r, size_t c) : rows_(r), cols_(c), a_(r * c) {}
    Mat(size_t r, size_t c, std::vector<T> entries)
        : rows_(r), cols_(c), a_(std::move(entries)) {
        if (a_.size() != rows_ * cols_)
            throw dimension_mismatch("matrix literal has wrong entry count");
    }

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator-() const {
        Mat m(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
        return m;
    }

    Mat& operator+=(const Mat& o) {
        check_same_shape(o);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        check_same_shape(o);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_)
            throw dimension_mismatch("matrix product shape mismatch");
        Mat m(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T()) continue;
                for (size_t j = 0; j < b.cols_; ++j)
                    m(i, j) += aik * b(k, j);
            }
        return m;
    }

    Mat scaled(const T& s) const {
        Mat m(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] * s;
        return m;
    }

    Mat transpose() const {
        Mat m(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    template <typename F>
    auto map(F f) const -> Mat<decltype(f(std::declval<const T&>()))> {
        Mat<decltype(f(std::declval<const T&>()))> m(rows_, cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }

    Mat col(size_t j) const {
        Mat m(rows_, 1);
        for (size_t i = 0; i < rows_; ++i) m(i, 0) = (*this)(i, j);
        return m;
    }
    void set_col(size_t j, const Mat& v) {
        if (v.rows_ != rows_ || v.cols_ != 1)
            throw dimension_mismatch("set_col shape mismatch");
        for (size_t i = 0; i < rows_; ++i) (*this)(i, j) = v(i, 0);
    }

    Mat block(size_t i0, size_t j0, size_t r, size_t c) const {
        if (i0 + r > rows_ || j0 + c > cols_)
            throw dimension_mismatch("block out of range");
        Mat m(r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
        return m;
    }
    void set_block(size_t i0, size_t j0, const Mat& b) {
        if (i0 + b.rows_ > rows_ || j0 + b.cols_ > cols_)
            throw dimension_mismatch("set_block out of range");
        for (size_t i = 0; i < b.rows_; ++i)
            for (size_t j = 0; j < b.cols_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
    }

    bool is_zero() const {
        for (auto& x : a_)
            if (!(x == T())) return false;
        return true;
    }

private:
    void check_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw dimension_mismatch("matrix shape mismatch");
    }

    size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using LMat = Mat<Laurent>;
using QMat = Mat<RatFunc>;
using ZMat = Mat<Int>;

template <typename T>
Mat<T> hconcat(const Mat<T>& a, const Mat<T>& b) {
    if (a.rows() != b.rows()) throw dimension_mismatch("hconcat row mismatch");
    Mat<T> m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

template <typename T>
Mat<T> vconcat(const Mat<T>& a, const Mat<T>& b) {
    if (a.cols() != b.cols()) throw dimension_mismatch("vconcat column mismatch");
    Mat<T> m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

template <typename T>
Mat<T> diag_sum(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

inline LMat involute(const LMat& m) {
    return m.map([](const Laurent& x) { return involute(x); });
}
inline QMat involute(const QMat& m) {
    return m.map([](const RatFunc& x) { return x.involute(); });
}

inline QMat to_rat(const LMat& m) {
    return m.map([](const Laurent& x) { return RatFunc(x); });
}
LMat to_int_laurent(const ZMat& m);
std::optional<LMat> to_lambda(const QMat& m);
std::optional<ZMat> to_integer(const LMat& m);

/* determinant over the group ring, fraction-free */
Laurent det_laurent(const LMat& m);
Int det_integer(const ZMat& m);
RatFunc det_rat(const QMat& m);

/* exact linear algebra over the fraction field */
std::optional<QMat> inverse(const QMat& m);
std::optional<QMat> solve(const QMat& a, const QMat& b); /* a x = b, any solution */
QMat kernel(const QMat& m); /* columns span the null space */
size_t rank(const QMat& m);

/* clear denominators in each column and divide out the content, so the
 * column span over the fraction field is unchanged but the matrix lives in
 * the group ring with primitive columns */
LMat saturate_columns(const QMat& m);

/* integer right-inverse: X with m X = I, when one exists over Z */
std::optional<ZMat> integer_right_inverse(const ZMat& m);

std::string to_string(const LMat& m);
LMat parse_laurent_matrix(const std::string& s);

} // namespace forms
