#ifndef OVERLAPNET_SNMF_HPP
#define OVERLAPNET_SNMF_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "overlapnet/matrix.hpp"

namespace overlapnet {

// Thrown when the solver produces a non-finite objective.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// n-by-c nonnegative matrix with unit row sums.
struct SoftMembership {
    Matrix values;

    std::size_t node_count() const { return values.rows; }
    std::size_t community_count() const { return values.cols; }
};

struct SolveTrace {
    std::vector<double> objective_per_iteration; // length iterations + 1
    std::size_t iterations = 0;
    std::uint64_t seed = 0;
    std::size_t dead_row_resets = 0;

    std::string to_csv() const;
};

// Uniform-random positive entries, row-normalized. Deterministic for a seed.
SoftMembership init_soft(std::size_t n, std::size_t c, std::uint64_t seed);

// One multiplicative update U := U .* (AU) ./ (U U^T U), denominator guarded
// by eps = 1e-12, followed by row normalization. Rows that underflow to all
// zero are reset to uniform 1/c; the count of such resets is added to
// *dead_rows when given.
SoftMembership snmf_step(const Matrix& A, const SoftMembership& U,
                         std::size_t* dead_rows = nullptr);

// iters applications of snmf_step starting from init_soft(n, c, seed).
std::pair<SoftMembership, SolveTrace> snmf_run(const Matrix& A, std::size_t c,
                                               std::size_t iters, std::uint64_t seed);

// ||A - U U^T||_F^2
double snmf_objective(const Matrix& A, const SoftMembership& U);

// Per-node entropy H_i = -sum_j U_ij ln U_ij, with 0 ln 0 = 0.
std::vector<double> membership_entropy(const SoftMembership& U);

} // namespace overlapnet

#endif
