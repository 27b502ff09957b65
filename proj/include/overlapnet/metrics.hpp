#ifndef OVERLAPNET_METRICS_HPP
#define OVERLAPNET_METRICS_HPP

#include <cstddef>
#include <vector>

#include "overlapnet/cover.hpp"
#include "overlapnet/snmf.hpp"

namespace overlapnet {

struct ConfusionTable {
    std::vector<std::vector<std::size_t>> counts; // k1 x k2
    std::vector<std::size_t> row_marginals;
    std::vector<std::size_t> col_marginals;
    std::size_t total = 0;
};

ConfusionTable confusion(const HardLabeling& truth, const HardLabeling& found);

// Normalized mutual information of two hard partitions, natural log,
// geometric-mean normalization. When either side is a single cluster the
// value is 1 if both partitions are identical, else 0.
double nmi(const HardLabeling& truth, const HardLabeling& found);

// Normalized mutual information generalized to overlapping covers: each
// community is a binary node-indicator variable, the conditional entropy of
// each community is minimized over the other cover's communities subject to
// the h(a)+h(d) >= h(b)+h(c) validity constraint, per-community terms are
// normalized and averaged, and the score is 1 - mean conditional share.
double gnmi(const CommunityCover& truth, const CommunityCover& found);

// Lift a hard labeling to a cover with one community per label.
CommunityCover cover_from_hard(const HardLabeling& labels);

// Interpret a non-overlapping, outlier-free cover as a hard labeling.
HardLabeling hard_from_cover(const CommunityCover& cover);

// Force a cover into a hard labeling using soft membership strengths:
// each node goes to its strongest member community; outliers go to their
// globally strongest column's community when that column was retained,
// else to the strongest retained one.
HardLabeling harden(const CommunityCover& cover, const SoftMembership& soft);

} // namespace overlapnet

#endif
