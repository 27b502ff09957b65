#include "overlapnet/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "overlapnet/io.hpp"

namespace overlapnet {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

struct RestartOutcome {
    double density = 0.0;
    double objective = 0.0;
    std::size_t effective_c = 0;
};

} // namespace

std::uint64_t run_seed(std::uint64_t base_seed, std::size_t c, std::size_t restart) {
    return splitmix64(splitmix64(splitmix64(base_seed) ^ c) ^
                      (0x9E3779B97F4A7C15ULL * (restart + 1)));
}

DetectResult detect(const Graph& g, const RunConfig& cfg) {
    if (cfg.c < 1 || cfg.c > g.n) throw std::invalid_argument("detect: need 1 <= c <= n");
    if (cfg.restarts < 1) throw std::invalid_argument("detect: restarts must be >= 1");
    const Matrix A = adjacency_unit_diag(g);

    DetectResult best;
    double best_density = -1.0;
    bool have_best = false;
    for (std::size_t r = 0; r < cfg.restarts; ++r) {
        auto [soft, trace] = snmf_run(A, cfg.c, cfg.iters, run_seed(cfg.base_seed, cfg.c, r));
        ThresholdSearchResult search = binarize(A, soft, cfg.binarize);
        CommunityCover cover = cover_from_binary(search.membership);
        DensityReport density = partition_density(g, cover);
        const bool better =
            !have_best || density.overall > best_density ||
            (density.overall == best_density && search.objective < best.threshold.objective);
        if (better) {
            have_best = true;
            best_density = density.overall;
            best.cover = std::move(cover);
            best.density = std::move(density);
            best.soft = std::move(soft);
            best.threshold = std::move(search);
            best.winning_restart = r;
            best.dead_row_resets = trace.dead_row_resets;
        }
    }
    return best;
}

SweepReport sweep(const Graph& g, std::size_t c_min, std::size_t c_max, const RunConfig& cfg) {
    if (c_min < 1 || c_min > c_max || c_max > g.n)
        throw std::invalid_argument("sweep: invalid c range");
    const Matrix A = adjacency_unit_diag(g);

    SweepReport report;
    double best_mean = -1.0;
    for (std::size_t c = c_min; c <= c_max; ++c) {
        std::vector<RestartOutcome> outcomes(cfg.restarts);
        for (std::size_t r = 0; r < cfg.restarts; ++r) {
            auto [soft, trace] = snmf_run(A, c, cfg.iters, run_seed(cfg.base_seed, c, r));
            ThresholdSearchResult search = binarize(A, soft, cfg.binarize);
            CommunityCover cover = cover_from_binary(search.membership);
            DensityReport density = partition_density(g, cover);
            outcomes[r] = {density.overall, search.objective, cover.community_count()};
        }
        SweepRow row;
        row.c = c;
        row.runs = cfg.restarts;
        double sum = 0.0, eff = 0.0;
        for (const auto& o : outcomes) {
            sum += o.density;
            eff += static_cast<double>(o.effective_c);
        }
        row.mean_density = sum / static_cast<double>(cfg.restarts);
        row.mean_effective_c = eff / static_cast<double>(cfg.restarts);
        double sq = 0.0;
        for (const auto& o : outcomes) {
            const double d = o.density - row.mean_density;
            sq += d * d;
        }
        row.std_density =
            cfg.restarts > 1 ? std::sqrt(sq / static_cast<double>(cfg.restarts - 1)) : 0.0;
        report.per_c.push_back(row);
        if (row.mean_density > best_mean) {
            best_mean = row.mean_density;
            report.selected_c = c;
        }
    }
    return report;
}

EntropyReport entropy_report(const SoftMembership& soft, const CommunityCover& cover) {
    if (soft.node_count() != cover.n) throw std::invalid_argument("entropy_report: size mismatch");
    EntropyReport report;
    report.per_node = membership_entropy(soft);
    for (std::size_t t = 0; t < cover.communities.size(); ++t) {
        CommunityEntropy e;
        e.community = t;
        for (int v : cover.communities[t]) {
            e.mean += report.per_node[v];
            e.max = std::max(e.max, report.per_node[v]);
        }
        e.mean /= static_cast<double>(cover.communities[t].size());
        report.per_community.push_back(e);
    }
    if (!cover.outliers.empty()) {
        for (int v : cover.outliers) report.outlier_mean += report.per_node[v];
        report.outlier_mean /= static_cast<double>(cover.outliers.size());
    }
    return report;
}

std::string SweepReport::to_csv() const {
    std::ostringstream out;
    out << "c,mean_D,std_D\n";
    for (const auto& row : per_c)
        out << row.c << "," << io::format_double(row.mean_density) << ","
            << io::format_double(row.std_density) << "\n";
    return out.str();
}

std::string EntropyReport::to_csv() const {
    std::ostringstream out;
    out << "node,entropy\n";
    for (std::size_t i = 0; i < per_node.size(); ++i)
        out << i << "," << io::format_double(per_node[i]) << "\n";
    return out.str();
}

} // namespace overlapnet
