#ifndef OVERLAPNET_SYNTH_HPP
#define OVERLAPNET_SYNTH_HPP

#include <cstdint>
#include <utility>

#include "overlapnet/cover.hpp"
#include "overlapnet/graph.hpp"

namespace overlapnet {

// Planted partition: 4 communities of 32 nodes, expected total degree 16
// split as z_in + z_out. Edges are independent Bernoulli with
// p_in = z_in/31 and p_out = z_out/96.
struct GnSpec {
    double z_out = 4.0;
    std::uint64_t seed = 0;

    static constexpr std::size_t communities = 4;
    static constexpr std::size_t community_size = 32;
    static constexpr double total_degree = 16.0;
};

std::pair<Graph, HardLabeling> generate_gn(const GnSpec& spec);

// Simplified planted-overlap benchmark: community sizes from a truncated
// power law (exponent beta) on [s_min, s_max], node degrees from a truncated
// power law (exponent gamma) capped at max_degree with mean ~ mean_degree,
// a fixed fraction of nodes holding 2 memberships, and stub matching that
// keeps ~(1-mu) of each node's edges inside its own communities.
struct OverlapSpec {
    std::size_t n = 1000;
    std::size_t s_min = 20;
    std::size_t s_max = 100;
    double mu = 0.1;
    double overlap_fraction = 0.1;
    double mean_degree = 20.0;
    std::size_t max_degree = 50;
    double gamma = 2.0; // degree exponent
    double beta = 1.0;  // community-size exponent
    std::uint64_t seed = 0;
};

// Parameter preset used throughout: n=1000, max degree 50, gamma=2, beta=1,
// sizes in [20,100].
OverlapSpec overlap_paper_preset();

std::pair<Graph, CommunityCover> generate_planted_overlap(const OverlapSpec& spec);

} // namespace overlapnet

#endif
