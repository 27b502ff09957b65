#include "overlapnet/snmf.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "overlapnet/io.hpp"

namespace overlapnet {

namespace {
constexpr double kDenomGuard = 1e-12;
}

SoftMembership init_soft(std::size_t n, std::size_t c, std::uint64_t seed) {
    if (c == 0 || c > n) throw std::invalid_argument("init_soft: need 1 <= c <= n");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Matrix U(n, c);
    for (std::size_t i = 0; i < n; ++i) {
        double* row = U.row(i);
        double sum = 0.0;
        for (std::size_t j = 0; j < c; ++j) {
            row[j] = 1.0 - unit(rng); // (0, 1]
            sum += row[j];
        }
        for (std::size_t j = 0; j < c; ++j) row[j] /= sum;
    }
    return {std::move(U)};
}

SoftMembership snmf_step(const Matrix& A, const SoftMembership& U, std::size_t* dead_rows) {
    const std::size_t n = U.node_count(), c = U.community_count();
    if (A.rows != n || A.cols != n) throw std::invalid_argument("snmf_step: shape mismatch");

    Matrix numer, G, denom;
    kernels::sym_product(A, U.values, numer); // A U
    kernels::gram(U.values, G);               // U^T U
    kernels::product(U.values, G, denom);     // U (U^T U)

    Matrix out(n, c);
    std::size_t resets = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double* ui = U.values.row(i);
        const double* ni = numer.row(i);
        const double* di = denom.row(i);
        double* oi = out.row(i);
        double sum = 0.0;
        for (std::size_t j = 0; j < c; ++j) {
            oi[j] = ui[j] * ni[j] / (di[j] + kDenomGuard);
            sum += oi[j];
        }
        if (sum <= 0.0) {
            ++resets;
            for (std::size_t j = 0; j < c; ++j) oi[j] = 1.0 / static_cast<double>(c);
        } else {
            for (std::size_t j = 0; j < c; ++j) oi[j] /= sum;
        }
    }
    if (dead_rows) *dead_rows += resets;
    return {std::move(out)};
}

std::pair<SoftMembership, SolveTrace> snmf_run(const Matrix& A, std::size_t c,
                                               std::size_t iters, std::uint64_t seed) {
    if (iters < 1) throw std::invalid_argument("snmf_run: iters must be >= 1");
    SoftMembership U = init_soft(A.rows, c, seed);
    SolveTrace trace;
    trace.seed = seed;
    trace.iterations = iters;
    trace.objective_per_iteration.reserve(iters + 1);
    trace.objective_per_iteration.push_back(snmf_objective(A, U));
    for (std::size_t t = 0; t < iters; ++t) {
        U = snmf_step(A, U, &trace.dead_row_resets);
        const double obj = snmf_objective(A, U);
        if (!std::isfinite(obj)) throw NumericError("snmf_run: non-finite objective");
        trace.objective_per_iteration.push_back(obj);
    }
    return {std::move(U), std::move(trace)};
}

double snmf_objective(const Matrix& A, const SoftMembership& U) {
    if (A.rows != U.values.rows) throw std::invalid_argument("snmf_objective: shape mismatch");
    // ||A - U U^T||_F^2 = ||A||_F^2 - 2 <A U, U> + ||U^T U||_F^2, which costs
    // O(nnz c) instead of the dense O(n^2 c) of kernels::residual_frob_sq.
    const std::size_t n = U.values.rows, c = U.values.cols;
    Matrix AU, G;
    kernels::sym_product(A, U.values, AU);
    kernels::gram(U.values, G);
    double a_sq = 0.0;
    for (double v : A.data) a_sq += v * v;
    double cross = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double* au = AU.row(i);
        const double* ui = U.values.row(i);
        double row = 0.0;
        for (std::size_t j = 0; j < c; ++j) row += au[j] * ui[j];
        cross += row;
    }
    double g_sq = 0.0;
    for (double v : G.data) g_sq += v * v;
    const double value = a_sq - 2.0 * cross + g_sq;
    return value > 0.0 ? value : 0.0;
}

std::vector<double> membership_entropy(const SoftMembership& U) {
    const std::size_t n = U.node_count(), c = U.community_count();
    std::vector<double> h(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double* row = U.values.row(i);
        double hi = 0.0;
        for (std::size_t j = 0; j < c; ++j)
            if (row[j] > 0.0) hi -= row[j] * std::log(row[j]);
        h[i] = hi;
    }
    return h;
}

std::string SolveTrace::to_csv() const {
    std::ostringstream out;
    out << "iteration,objective\n";
    for (std::size_t i = 0; i < objective_per_iteration.size(); ++i)
        out << i << "," << io::format_double(objective_per_iteration[i]) << "\n";
    return out.str();
}

} // namespace overlapnet
