#include "overlapnet/sbmf.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "overlapnet/io.hpp"

namespace overlapnet {

std::size_t BinaryMembership::row_sum(std::size_t i) const {
    std::size_t s = 0;
    for (std::size_t j = 0; j < cols; ++j) s += (*this)(i, j);
    return s;
}

BinaryMembership heaviside(const Matrix& M, double u) {
    BinaryMembership B(M.rows, M.cols);
    for (std::size_t i = 0; i < M.rows; ++i)
        for (std::size_t j = 0; j < M.cols; ++j)
            B(i, j) = M(i, j) - u > 0.0 ? 1 : 0;
    return B;
}

double matrix_one_norm(const Matrix& M, NormMode mode) {
    if (mode == NormMode::entrywise) {
        double total = 0.0;
        for (double v : M.data) total += std::abs(v);
        return total;
    }
    std::vector<double> colsum(M.cols, 0.0);
    for (std::size_t i = 0; i < M.rows; ++i)
        for (std::size_t j = 0; j < M.cols; ++j) colsum[j] += std::abs(M(i, j));
    double best = 0.0;
    for (double s : colsum) best = std::max(best, s);
    return best;
}

double sbmf_objective(const Matrix& A, const BinaryMembership& B, const BinarizeConfig& cfg) {
    const std::size_t n = A.rows, c = B.cols;
    if (B.rows != n || A.cols != n) throw std::invalid_argument("sbmf_objective: shape mismatch");

    // A - B B^T is symmetric, so the induced (max column abs sum) norm equals
    // the max row abs sum; both modes reduce to row scans.
    std::vector<double> rowsum(n, 0.0);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
        const double* ai = A.row(i);
        const std::uint8_t* bi = B.data.data() + i * c;
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const std::uint8_t* bj = B.data.data() + j * c;
            int shared = 0;
            for (std::size_t t = 0; t < c; ++t) shared += bi[t] * bj[t];
            s += std::abs(ai[j] - shared);
        }
        rowsum[i] = s;
    }
    double norm = 0.0;
    if (cfg.norm == NormMode::induced) {
        for (double s : rowsum) norm = std::max(norm, s);
    } else {
        for (double s : rowsum) norm += s;
    }

    double penalty = 0.0;
    if (cfg.penalty == PenaltyMode::zero_rows) {
        for (std::size_t i = 0; i < n; ++i)
            if (B.row_sum(i) == 0) penalty += 1.0;
    } else {
        for (std::size_t i = 0; i < n; ++i)
            penalty += 1.0 - static_cast<double>(B.row_sum(i));
    }
    return norm + penalty;
}

std::vector<double> candidate_thresholds(const SoftMembership& U) {
    std::vector<double> vals(U.values.data);
    vals.push_back(0.0);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

ThresholdSearchResult binarize(const Matrix& A, const SoftMembership& U,
                               const BinarizeConfig& cfg) {
    const std::size_t n = U.node_count(), c = U.community_count();
    if (A.rows != n || A.cols != n) throw std::invalid_argument("binarize: shape mismatch");

    // Entries sorted by value descending; lowering the threshold through the
    // distinct values switches entries on one group at a time, so the whole
    // scan costs O(sum of community sizes at flip time) instead of a full
    // objective evaluation per candidate. All accumulators are integers
    // (A and B B^T are integral), making the scan exact and order-stable.
    std::vector<std::uint8_t> adj(n * n);
    for (std::size_t i = 0; i < n * n; ++i) adj[i] = A.data[i] > 0.5 ? 1 : 0;

    struct Entry {
        double value;
        std::uint32_t i, j;
    };
    std::vector<Entry> entries;
    entries.reserve(n * c);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < c; ++j)
            entries.push_back({U.values(i, j), static_cast<std::uint32_t>(i),
                               static_cast<std::uint32_t>(j)});
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.value != b.value) return a.value > b.value;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });

    std::vector<std::int32_t> K(n * n, 0); // B B^T
    std::vector<std::int64_t> colsum(n, 0);
    std::int64_t total_abs = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < n; ++i) s += adj[i * n + j];
        colsum[j] = s;
        total_abs += s;
    }
    std::vector<std::int32_t> row_ones(n, 0);
    std::int64_t zero_rows = static_cast<std::int64_t>(n);
    std::int64_t total_ones = 0;
    std::vector<std::vector<std::uint32_t>> members(c);

    auto flip_on = [&](std::uint32_t i, std::uint32_t t) {
        for (std::uint32_t j : members[t]) {
            const std::size_t ij = static_cast<std::size_t>(i) * n + j;
            const std::size_t ji = static_cast<std::size_t>(j) * n + i;
            const int a = adj[ij];
            const std::int32_t k_old = K[ij];
            const std::int64_t delta = std::llabs(a - (k_old + 1)) - std::llabs(a - k_old);
            K[ij] = k_old + 1;
            K[ji] = k_old + 1;
            colsum[j] += delta;
            colsum[i] += delta;
            total_abs += 2 * delta;
        }
        const std::size_t ii = static_cast<std::size_t>(i) * n + i;
        const std::int32_t k_old = K[ii];
        const std::int64_t delta = std::llabs(1 - (k_old + 1)) - std::llabs(1 - k_old);
        K[ii] = k_old + 1;
        colsum[i] += delta;
        total_abs += delta;
        members[t].push_back(i);
        ++total_ones;
        if (++row_ones[i] == 1) --zero_rows;
    };

    auto current_objective = [&]() -> std::int64_t {
        std::int64_t norm;
        if (cfg.norm == NormMode::induced) {
            norm = 0;
            for (std::size_t j = 0; j < n; ++j) norm = std::max(norm, colsum[j]);
        } else {
            norm = total_abs;
        }
        const std::int64_t penalty = cfg.penalty == PenaltyMode::zero_rows
                                         ? zero_rows
                                         : static_cast<std::int64_t>(n) - total_ones;
        return norm + penalty;
    };

    ThresholdSearchResult best;
    best.objective = std::numeric_limits<double>::infinity();
    std::int64_t best_int = std::numeric_limits<std::int64_t>::max();

    std::vector<double> cands; // distinct values descending, 0 appended
    for (const Entry& e : entries)
        if (cands.empty() || e.value != cands.back()) cands.push_back(e.value);
    if (cands.empty() || cands.back() != 0.0) cands.push_back(0.0);

    std::size_t pos = 0; // next entry to switch on
    for (double u : cands) {
        // entries with value > u are on
        while (pos < entries.size() && entries[pos].value > u) {
            flip_on(entries[pos].i, entries[pos].j);
            ++pos;
        }
        const std::int64_t obj = current_objective();
        ++best.candidates_evaluated;
        if (obj < best_int) { // first hit at the larger threshold wins ties
            best_int = obj;
            best.threshold = u;
        }
    }

    best.objective = static_cast<double>(best_int);
    best.membership = heaviside(U.values, best.threshold);
    return best;
}

ThresholdSearchResult binarize_reference(const Matrix& A, const SoftMembership& U,
                                         const BinarizeConfig& cfg) {
    auto candidates = candidate_thresholds(U);
    ThresholdSearchResult best;
    best.objective = std::numeric_limits<double>::infinity();
    for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
        BinaryMembership B = heaviside(U.values, *it);
        const double obj = sbmf_objective(A, B, cfg);
        ++best.candidates_evaluated;
        if (obj < best.objective) {
            best.objective = obj;
            best.threshold = *it;
            best.membership = std::move(B);
        }
    }
    return best;
}

CommunityCover cover_from_binary(const BinaryMembership& B) {
    CommunityCover cover;
    cover.n = B.rows;
    for (std::size_t t = 0; t < B.cols; ++t) {
        std::vector<int> comm;
        for (std::size_t i = 0; i < B.rows; ++i)
            if (B(i, t)) comm.push_back(static_cast<int>(i));
        if (!comm.empty()) {
            cover.communities.push_back(std::move(comm));
            cover.source_columns.push_back(static_cast<int>(t));
        }
    }
    for (std::size_t i = 0; i < B.rows; ++i)
        if (B.row_sum(i) == 0) cover.outliers.push_back(static_cast<int>(i));
    return cover;
}

std::string ThresholdSearchResult::to_json() const {
    nlohmann::json j;
    j["threshold"] = threshold;
    j["objective"] = objective;
    j["candidates_evaluated"] = candidates_evaluated;
    return j.dump();
}

} // namespace overlapnet
