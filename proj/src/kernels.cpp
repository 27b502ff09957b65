#include "overlapnet/matrix.hpp"

#include <cassert>
#include <cstdint>

namespace overlapnet::kernels {

namespace serial {

void sym_product(const Matrix& A, const Matrix& U, Matrix& out) {
    const std::size_t n = A.rows, c = U.cols;
    assert(A.cols == n && U.rows == n);
    out = Matrix(n, c);
    for (std::size_t i = 0; i < n; ++i) {
        const double* ai = A.row(i);
        double* oi = out.row(i);
        for (std::size_t k = 0; k < n; ++k) {
            const double a = ai[k];
            if (a == 0.0) continue;
            const double* uk = U.row(k);
            for (std::size_t j = 0; j < c; ++j) oi[j] += a * uk[j];
        }
    }
}

void gram(const Matrix& U, Matrix& out) {
    const std::size_t n = U.rows, c = U.cols;
    out = Matrix(c, c);
    for (std::size_t k = 0; k < n; ++k) {
        const double* uk = U.row(k);
        for (std::size_t i = 0; i < c; ++i)
            for (std::size_t j = 0; j < c; ++j) out(i, j) += uk[i] * uk[j];
    }
}

void product(const Matrix& U, const Matrix& G, Matrix& out) {
    const std::size_t n = U.rows, c = U.cols;
    assert(G.rows == c && G.cols == c);
    out = Matrix(n, c);
    for (std::size_t i = 0; i < n; ++i) {
        const double* ui = U.row(i);
        double* oi = out.row(i);
        for (std::size_t k = 0; k < c; ++k) {
            const double u = ui[k];
            const double* gk = G.row(k);
            for (std::size_t j = 0; j < c; ++j) oi[j] += u * gk[j];
        }
    }
}

double residual_frob_sq(const Matrix& A, const Matrix& U) {
    const std::size_t n = A.rows, c = U.cols;
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double* ai = A.row(i);
        const double* ui = U.row(i);
        double row_sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double* uj = U.row(j);
            double dot = 0.0;
            for (std::size_t k = 0; k < c; ++k) dot += ui[k] * uj[k];
            const double r = ai[j] - dot;
            row_sum += r * r;
        }
        total += row_sum;
    }
    return total;
}

} // namespace serial

void sym_product(const Matrix& A, const Matrix& U, Matrix& out) {
    const std::size_t n = A.rows, c = U.cols;
    assert(A.cols == n && U.rows == n);
    out = Matrix(n, c);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
        const double* ai = A.row(i);
        double* oi = out.row(i);
        for (std::size_t k = 0; k < n; ++k) {
            const double a = ai[k];
            if (a == 0.0) continue;
            const double* uk = U.row(k);
            for (std::size_t j = 0; j < c; ++j) oi[j] += a * uk[j];
        }
    }
}

void gram(const Matrix& U, Matrix& out) {
    // c is small; the serial pass over rows is already cheap and its
    // accumulation order is fixed.
    serial::gram(U, out);
}

void product(const Matrix& U, const Matrix& G, Matrix& out) {
    const std::size_t n = U.rows, c = U.cols;
    assert(G.rows == c && G.cols == c);
    out = Matrix(n, c);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
        const double* ui = U.row(i);
        double* oi = out.row(i);
        for (std::size_t k = 0; k < c; ++k) {
            const double u = ui[k];
            const double* gk = G.row(k);
            for (std::size_t j = 0; j < c; ++j) oi[j] += u * gk[j];
        }
    }
}

double residual_frob_sq(const Matrix& A, const Matrix& U) {
    const std::size_t n = A.rows, c = U.cols;
    std::vector<double> row_sums(n, 0.0);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
        const double* ai = A.row(i);
        const double* ui = U.row(i);
        double row_sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double* uj = U.row(j);
            double dot = 0.0;
            for (std::size_t k = 0; k < c; ++k) dot += ui[k] * uj[k];
            const double r = ai[j] - dot;
            row_sum += r * r;
        }
        row_sums[i] = row_sum;
    }
    // combine in index order so the result is thread-count independent
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += row_sums[i];
    return total;
}

} // namespace overlapnet::kernels
