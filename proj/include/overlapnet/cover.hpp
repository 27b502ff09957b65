#ifndef OVERLAPNET_COVER_HPP
#define OVERLAPNET_COVER_HPP

#include <cstddef>
#include <vector>

namespace overlapnet {

// Overlapping community assignment: a list of node sets plus the nodes
// that belong to none of them. Node ids are 0-based and < n.
struct CommunityCover {
    std::size_t n = 0;
    std::vector<std::vector<int>> communities; // each sorted ascending, non-empty
    std::vector<int> outliers;                 // sorted ascending
    // When the cover was built from a membership matrix, the original
    // column index of each retained community (empty columns are dropped).
    std::vector<int> source_columns;

    std::size_t community_count() const { return communities.size(); }
};

// One community id per node, ids contiguous from 0.
struct HardLabeling {
    std::vector<int> labels;

    std::size_t n() const { return labels.size(); }
    int cluster_count() const;
};

} // namespace overlapnet

#endif
