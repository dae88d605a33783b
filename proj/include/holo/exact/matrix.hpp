#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "holo/errors.hpp"
#include "holo/exact/form.hpp"

namespace holo::exact {

/// Dense rectangular matrix. The fill value doubles as the zero element so
/// that empty products and block assembly know which ring they live in.
template <class T>
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill)
        : rows_(rows), cols_(cols), zero_(fill), data_(rows * cols, fill)
    {
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const T& zero() const { return zero_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T>& data() { return data_; }
    const std::vector<T>& data() const { return data_; }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (!x.is_zero())
                return false;
        return true;
    }

    Matrix transpose() const
    {
        Matrix out(cols_, rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(j, i) = (*this)(i, j);
        return out;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
    {
        if (r0 + nr > rows_ || c0 + nc > cols_)
            throw DimensionMismatch("block out of range");
        Matrix out(nr, nc, zero_);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j)
                out(i, j) = (*this)(r0 + i, c0 + j);
        return out;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b)
    {
        if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
            throw DimensionMismatch("set_block out of range");
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                (*this)(r0 + i, c0 + j) = b(i, j);
    }

    Matrix& operator+=(const Matrix& o)
    {
        check_shape(o, "matrix add");
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o)
    {
        check_shape(o, "matrix sub");
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] -= o.data_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    Matrix operator-() const
    {
        Matrix out = *this;
        for (auto& x : out.data_)
            x = -x;
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    void check_shape(const Matrix& o, const char* where) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch(std::string(where) + ": " + shape() + " vs " + o.shape());
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    T zero_{};
    std::vector<T> data_;
};

using ScalarMatrix = Matrix<Scalar>;
using PolyMatrix = Matrix<TruncPoly>;
using FormMatrix = Matrix<ExteriorForm>;
using ScalarVector = std::vector<Scalar>;

ScalarMatrix scalar_zero(std::size_t rows, std::size_t cols);
ScalarMatrix scalar_identity(std::size_t n);
PolyMatrix poly_zero(Ring ring, std::size_t rows, std::size_t cols);
PolyMatrix poly_identity(Ring ring, std::size_t n);
FormMatrix form_zero(Ring ring, int degree, std::size_t rows, std::size_t cols);

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarVector operator*(const ScalarMatrix& a, const ScalarVector& v);
ScalarMatrix operator*(const Scalar& c, const ScalarMatrix& a);
ScalarMatrix adjoint(const ScalarMatrix& a);

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator*(const Scalar& c, const PolyMatrix& a);
PolyMatrix to_poly(Ring ring, const ScalarMatrix& a);
ScalarMatrix evaluate(const PolyMatrix& a, const std::vector<Scalar>& point);
PolyMatrix with_trunc(const PolyMatrix& a, int trunc);
int max_degree(const PolyMatrix& a);

// sum_b A_ab ^ B_bc
FormMatrix operator*(const FormMatrix& a, const FormMatrix& b);
FormMatrix operator*(const PolyMatrix& a, const FormMatrix& b);
FormMatrix operator*(const FormMatrix& a, const PolyMatrix& b);
FormMatrix operator*(const Scalar& c, const FormMatrix& a);
FormMatrix operator*(const TruncPoly& f, const FormMatrix& a);
PolyMatrix operator*(const TruncPoly& f, const PolyMatrix& a);
FormMatrix operator*(const ScalarMatrix& a, const FormMatrix& b);
FormMatrix operator*(const FormMatrix& a, const ScalarMatrix& b);
FormMatrix to_forms(const PolyMatrix& a);
// entrywise exterior derivative
FormMatrix d(const FormMatrix& a);
FormMatrix d(const PolyMatrix& a);
FormMatrix with_trunc(const FormMatrix& a, int trunc);
int max_poly_degree(const FormMatrix& a);

/// Entries are 1-forms sum_k M_k dx_k; returns M_k.
std::vector<PolyMatrix> split_one_form(const FormMatrix& a);
FormMatrix join_one_form(Ring ring, const std::vector<PolyMatrix>& parts);

template <class T>
Matrix<T> block_diag(const Matrix<T>& a, const Matrix<T>& b)
{
    Matrix<T> out(a.rows() + b.rows(), a.cols() + b.cols(), a.zero());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), a.cols(), b);
    return out;
}

std::string to_string(const ScalarMatrix& a);
std::string to_string(const PolyMatrix& a);

} // namespace holo::exact
