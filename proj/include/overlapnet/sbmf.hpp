#ifndef OVERLAPNET_SBMF_HPP
#define OVERLAPNET_SBMF_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "overlapnet/cover.hpp"
#include "overlapnet/matrix.hpp"
#include "overlapnet/snmf.hpp"

namespace overlapnet {

enum class NormMode { induced, entrywise };
enum class PenaltyMode { zero_rows, literal_eq3 };

struct BinarizeConfig {
    NormMode norm = NormMode::induced;
    PenaltyMode penalty = PenaltyMode::zero_rows;
    // Ties are always broken toward the larger threshold.
};

// n-by-c matrix with entries in {0,1}.
struct BinaryMembership {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint8_t> data;

    BinaryMembership() = default;
    BinaryMembership(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    std::uint8_t& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    std::uint8_t operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    std::size_t row_sum(std::size_t i) const;
};

struct ThresholdSearchResult {
    double threshold = 0.0;
    double objective = 0.0;
    std::size_t candidates_evaluated = 0;
    BinaryMembership membership;

    std::string to_json() const;
};

// Entrywise indicator of M_ij - u > 0 (strict).
BinaryMembership heaviside(const Matrix& M, double u);

// induced: max over columns of the sum of absolute values;
// entrywise: sum of all absolute values.
double matrix_one_norm(const Matrix& M, NormMode mode);

// matrix_one_norm(A - B B^T, cfg.norm) + penalty. With zero_rows the penalty
// is the number of all-zero rows of B; with literal_eq3 it is
// sum_i (1 - sum_j B_ij).
double sbmf_objective(const Matrix& A, const BinaryMembership& B, const BinarizeConfig& cfg);

// Sorted distinct entries of U with 0 prepended when absent. The thresholded
// objective is constant between consecutive distinct entries, so this set is
// exhaustive for the scalar threshold search.
std::vector<double> candidate_thresholds(const SoftMembership& U);

// Exact scalar-threshold search: evaluates the objective at every candidate
// and returns the minimizer, ties toward the larger threshold. Uses an
// incremental descending scan with integer accumulators; equivalent to
// evaluating sbmf_objective at B = heaviside(U, u) for each candidate.
ThresholdSearchResult binarize(const Matrix& A, const SoftMembership& U,
                               const BinarizeConfig& cfg);

// Reference implementation of the same search: full objective evaluation per
// candidate. Kept for tests and the benchmark.
ThresholdSearchResult binarize_reference(const Matrix& A, const SoftMembership& U,
                                         const BinarizeConfig& cfg);

// Column t becomes community {i : B_it = 1}; empty columns are dropped and
// recorded via source_columns; all-zero rows become outliers.
CommunityCover cover_from_binary(const BinaryMembership& B);

} // namespace overlapnet

#endif
