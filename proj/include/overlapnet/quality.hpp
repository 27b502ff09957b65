#ifndef OVERLAPNET_QUALITY_HPP
#define OVERLAPNET_QUALITY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "overlapnet/cover.hpp"
#include "overlapnet/graph.hpp"

namespace overlapnet {

struct CommunityDensityRow {
    std::size_t n_nodes = 0; // n_alpha
    std::size_t m_edges = 0; // m_alpha
    std::size_t q_max = 0;   // q_alpha = max label count among members
    double density = 0.0;    // d_alpha
};

struct DensityReport {
    std::vector<CommunityDensityRow> per_community;
    std::size_t total_size = 0; // N = sum of community sizes + outlier count
    double overall = 0.0;       // D
    bool degenerate = false;    // no communities in the cover

    std::string to_json() const;
    std::string to_csv() const; // community_id, n, m, q, d
};

// Throws if the cover violates its invariants against node count n.
void validate_cover(const CommunityCover& cover);

// l_j = number of communities containing node j (0 for outliers).
std::vector<int> label_counts(const CommunityCover& cover);

// (m - (n-1)) / (n(n-1)/2 - (n-1)); defined as 0 for n <= 2.
double community_density(std::size_t n_nodes, std::size_t m_edges);

// Modified overall partition density: communities weighted by n_alpha/q_alpha
// and normalized by N.
DensityReport partition_density(const Graph& g, const CommunityCover& cover);

} // namespace overlapnet

#endif
