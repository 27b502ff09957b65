#ifndef OVERLAPNET_MATRIX_HPP
#define OVERLAPNET_MATRIX_HPP

#include <cstddef>
#include <vector>

namespace overlapnet {

// Dense row-major matrix of doubles.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    double* row(std::size_t i) { return data.data() + i * cols; }
    const double* row(std::size_t i) const { return data.data() + i * cols; }

    bool same_shape(const Matrix& other) const {
        return rows == other.rows && cols == other.cols;
    }
};

// Dense kernels used by the solvers. The functions in `kernels` are
// OpenMP-parallel over rows; `kernels::serial` holds plain-loop reference
// versions with identical contracts. Row-wise results are accumulated
// per row and combined in index order, so outputs are bitwise identical
// for any thread count.
namespace kernels {

// out = A * U where A is n-by-n symmetric and U is n-by-c.
void sym_product(const Matrix& A, const Matrix& U, Matrix& out);

// out = U^T * U (c-by-c).
void gram(const Matrix& U, Matrix& out);

// out = U * G where G is c-by-c.
void product(const Matrix& U, const Matrix& G, Matrix& out);

// ||A - U U^T||_F^2
double residual_frob_sq(const Matrix& A, const Matrix& U);

namespace serial {
void sym_product(const Matrix& A, const Matrix& U, Matrix& out);
void gram(const Matrix& U, Matrix& out);
void product(const Matrix& U, const Matrix& G, Matrix& out);
double residual_frob_sq(const Matrix& A, const Matrix& U);
} // namespace serial

} // namespace kernels

} // namespace overlapnet

#endif
