#ifndef OVERLAPNET_PIPELINE_HPP
#define OVERLAPNET_PIPELINE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "overlapnet/graph.hpp"
#include "overlapnet/quality.hpp"
#include "overlapnet/sbmf.hpp"
#include "overlapnet/snmf.hpp"

namespace overlapnet {

struct RunConfig {
    std::size_t c = 0;
    std::size_t restarts = 10;
    std::size_t iters = 100;
    std::uint64_t base_seed = 0;
    BinarizeConfig binarize;
};

// Per-restart seed: fixed mixing of (base seed, c, restart index).
std::uint64_t run_seed(std::uint64_t base_seed, std::size_t c, std::size_t restart);

struct DetectResult {
    CommunityCover cover;
    DensityReport density;
    SoftMembership soft;
    ThresholdSearchResult threshold;
    std::size_t winning_restart = 0;
    std::size_t dead_row_resets = 0;
};

// Multi-restart SNMF + binarization at fixed c. The winner maximizes the
// modified partition density; ties go to the lower threshold-search
// objective, then the lower restart index.
DetectResult detect(const Graph& g, const RunConfig& cfg);

struct SweepRow {
    std::size_t c = 0;
    double mean_density = 0.0;
    double std_density = 0.0;
    double mean_effective_c = 0.0;
    std::size_t runs = 0;
};

struct SweepReport {
    std::vector<SweepRow> per_c;
    std::size_t selected_c = 0; // argmax mean density, ties toward smaller c

    std::string to_csv() const; // c, mean_D, std_D
};

SweepReport sweep(const Graph& g, std::size_t c_min, std::size_t c_max, const RunConfig& cfg);

struct CommunityEntropy {
    std::size_t community = 0;
    double mean = 0.0;
    double max = 0.0;
};

struct EntropyReport {
    std::vector<double> per_node;             // H_i
    std::vector<CommunityEntropy> per_community;
    double outlier_mean = 0.0;

    std::string to_csv() const; // node, H, communities
};

EntropyReport entropy_report(const SoftMembership& soft, const CommunityCover& cover);

} // namespace overlapnet

#endif
