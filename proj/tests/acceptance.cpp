// Acceptance gate: one check per release criterion, each printing a single
// [PASS]/[FAIL] line. Run with no arguments for the full suite or pass
// criterion numbers to run a subset. Exit status is the number of failures.
//
// Criteria 5-7 need the real networks (football, dolphins, polbooks, jazz)
// vendored under data/ (see data/README.md); they fail with a clear message
// when the files are absent instead of being skipped.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "overlapnet/graph.hpp"
#include "overlapnet/io.hpp"
#include "overlapnet/metrics.hpp"
#include "overlapnet/pipeline.hpp"
#include "overlapnet/quality.hpp"
#include "overlapnet/snmf.hpp"
#include "overlapnet/synth.hpp"

using namespace overlapnet;

namespace {

std::string data_dir() {
    if (const char* env = std::getenv("OVERLAPNET_DATA_DIR")) return env;
    return "data";
}

bool have_file(const std::string& path) { return std::filesystem::exists(path); }

double mean_of(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

double sample_std(const std::vector<double>& xs) {
    if (xs.size() < 2) return 0.0;
    const double m = mean_of(xs);
    double sq = 0.0;
    for (double x : xs) sq += (x - m) * (x - m);
    return std::sqrt(sq / static_cast<double>(xs.size() - 1));
}

// ---------------------------------------------------------------- criterion 1

bool clique_cover_density(std::string& detail) {
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> size_dist(3, 12);
        CommunityCover cover;
        std::vector<std::pair<int, int>> edges;
        int base = 0;
        for (int q = 0; q < 5; ++q) {
            const int size = size_dist(rng);
            std::vector<int> comm;
            for (int i = 0; i < size; ++i) {
                comm.push_back(base + i);
                for (int j = i + 1; j < size; ++j) edges.emplace_back(base + i, base + j);
            }
            cover.communities.push_back(comm);
            base += size;
        }
        Graph g = graph_from_edges(std::move(edges), base);
        cover.n = base;
        worst = std::max(worst, std::abs(partition_density(g, cover).overall - 1.0));
    }
    std::ostringstream out;
    out << "max |D - 1| = " << worst << " over 50 seeds";
    detail = out.str();
    return worst < 1e-12;
}

// ---------------------------------------------------------------- criterion 2

bool threshold_search_optimality(std::string& detail) {
    std::size_t mismatches = 0;
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        std::mt19937_64 rng(1000 + trial);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 20; ++i)
            for (int j = i + 1; j < 20; ++j)
                if (rng() % 3 == 0) edges.emplace_back(i, j);
        Graph g = graph_from_edges(std::move(edges), 20);
        const Matrix A = adjacency_unit_diag(g);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        Matrix U(20, 3);
        for (std::size_t i = 0; i < 20; ++i) {
            double sum = 0.0;
            for (std::size_t j = 0; j < 3; ++j) {
                U(i, j) = unit(rng) + 1e-9;
                sum += U(i, j);
            }
            for (std::size_t j = 0; j < 3; ++j) U(i, j) /= sum;
        }
        BinarizeConfig cfg;
        const double got = binarize(A, SoftMembership{U}, cfg).objective;
        const double grid = oracles::grid_search_min(A, U, cfg, 10001);
        if (std::abs(got - grid) > 1e-9) ++mismatches;
    }
    std::ostringstream out;
    out << mismatches << "/100 trials deviate from the 10,001-point grid minimum";
    detail = out.str();
    return mismatches == 0;
}

// ---------------------------------------------------------------- criterion 3

bool gn_recovery(std::string& detail) {
    std::ostringstream out;
    bool ok = true;
    for (double z_out : {0.0, 2.0, 4.0}) {
        std::size_t correct = 0;
        std::vector<double> nmis;
        for (std::uint64_t s = 0; s < 10; ++s) {
            GnSpec spec;
            spec.z_out = z_out;
            spec.seed = 2000 + static_cast<std::uint64_t>(z_out) * 100 + s;
            auto [g, truth] = generate_gn(spec);
            RunConfig cfg;
            cfg.restarts = 10;
            cfg.base_seed = spec.seed;
            SweepReport report = sweep(g, 2, 10, cfg);
            if (report.selected_c == 4) ++correct;
            cfg.c = 4;
            DetectResult result = detect(g, cfg);
            nmis.push_back(nmi(truth, harden(result.cover, result.soft)));
        }
        const double mean_nmi = mean_of(nmis);
        out << "z_out=" << z_out << ": c=4 in " << correct << "/10, mean NMI " << mean_nmi
            << "; ";
        if (correct < 9 || mean_nmi < 0.95) ok = false;
    }
    detail = out.str();
    return ok;
}

// ---------------------------------------------------------------- criterion 4

bool gn_degradation(std::string& detail) {
    std::vector<double> means, stds;
    std::ostringstream out;
    for (double z_out : {2.0, 4.0, 6.0, 8.0}) {
        std::vector<double> nmis;
        for (std::uint64_t s = 0; s < 10; ++s) {
            GnSpec spec;
            spec.z_out = z_out;
            spec.seed = 3000 + static_cast<std::uint64_t>(z_out) * 100 + s;
            auto [g, truth] = generate_gn(spec);
            RunConfig cfg;
            cfg.c = 4;
            cfg.restarts = 10;
            cfg.base_seed = spec.seed;
            DetectResult result = detect(g, cfg);
            nmis.push_back(nmi(truth, harden(result.cover, result.soft)));
        }
        means.push_back(mean_of(nmis));
        stds.push_back(sample_std(nmis));
        out << "z_out=" << z_out << ": NMI " << means.back() << " +/- " << stds.back() << "; ";
    }
    bool ok = true;
    for (std::size_t i = 1; i < means.size(); ++i)
        if (means[i] > means[i - 1] + stds[i - 1]) ok = false;
    detail = out.str();
    return ok;
}

// ------------------------------------------------------- real-network helpers

bool load_real(const std::string& stem, Graph& g, std::string& detail) {
    const std::string path = data_dir() + "/" + stem + "_edges.txt";
    if (!have_file(path)) {
        detail = "missing " + path +
                 " -- real datasets are not redistributed here; vendor them per data/README.md";
        return false;
    }
    g = load_edge_list(io::read_file(path), false);
    return true;
}

std::size_t modal_value(std::vector<std::size_t> values) {
    std::map<std::size_t, std::size_t> counts;
    for (auto v : values) ++counts[v];
    std::size_t best = values.front(), best_count = 0;
    for (const auto& [v, count] : counts)
        if (count > best_count) {
            best = v;
            best_count = count;
        }
    return best;
}

std::vector<std::size_t> repeated_sweep(const Graph& g, std::size_t c_max, int reps,
                                        std::uint64_t base) {
    std::vector<std::size_t> selected;
    for (int rep = 0; rep < reps; ++rep) {
        RunConfig cfg;
        cfg.restarts = 10;
        cfg.base_seed = base + static_cast<std::uint64_t>(rep);
        selected.push_back(sweep(g, 2, c_max, cfg).selected_c);
    }
    return selected;
}

// ---------------------------------------------------------------- criterion 5

bool football_model_selection(std::string& detail) {
    Graph g;
    if (!load_real("football", g, detail)) return false;
    const auto selected = repeated_sweep(g, 20, 5, 4000);
    std::ostringstream out;
    out << "selected c over 5 sweeps:";
    bool in_range = true;
    for (auto c : selected) {
        out << " " << c;
        if (c < 11 || c > 13) in_range = false;
    }
    const std::size_t mode = modal_value(selected);
    out << " (mode " << mode << ")";
    detail = out.str();
    return mode == 12 && in_range;
}

// ---------------------------------------------------------------- criterion 6

bool other_real_networks(std::string& detail) {
    const std::vector<std::pair<std::string, std::size_t>> targets = {
        {"dolphins", 6}, {"polbooks", 5}, {"jazz", 2}};
    std::ostringstream out;
    bool ok = true;
    for (const auto& [stem, expected] : targets) {
        Graph g;
        std::string local;
        if (!load_real(stem, g, local)) {
            detail = local;
            return false;
        }
        const std::size_t mode = modal_value(repeated_sweep(g, 20, 5, 5000));
        out << stem << ": mode " << mode << " (expected " << expected << "+/-1); ";
        if (mode + 1 < expected || mode > expected + 1) ok = false;
    }
    detail = out.str();
    return ok;
}

// ---------------------------------------------------------------- criterion 7

bool football_misassignment_locality(std::string& detail) {
    Graph g;
    if (!load_real("football", g, detail)) return false;
    const std::string labels_path = data_dir() + "/football_labels.txt";
    if (!have_file(labels_path)) {
        detail = "missing " + labels_path + "; vendor it per data/README.md";
        return false;
    }
    const HardLabeling conferences = io::parse_labels(io::read_file(labels_path));
    // ids of the teams known to play mostly outside their own conference,
    // using the node numbering of the vendored edge list
    const std::set<int> abnormal = {37, 43, 81, 83, 91, 12, 25, 51, 60,
                                    64, 70, 98, 111, 29, 59};
    std::vector<double> fractions;
    std::ostringstream out;
    for (std::uint64_t s = 0; s < 5; ++s) {
        RunConfig cfg;
        cfg.c = 12;
        cfg.restarts = 10;
        cfg.base_seed = 6000 + s;
        DetectResult result = detect(g, cfg);
        const HardLabeling hard = harden(result.cover, result.soft);
        // map each found cluster to its majority conference, then count nodes
        // that land outside their own conference's cluster image
        std::map<int, std::map<int, std::size_t>> votes;
        for (std::size_t v = 0; v < g.n; ++v)
            ++votes[hard.labels[v]][conferences.labels[v]];
        std::map<int, int> cluster_conf;
        for (const auto& [cluster, tally] : votes) {
            int best = -1;
            std::size_t best_count = 0;
            for (const auto& [conf, count] : tally)
                if (count > best_count) {
                    best = conf;
                    best_count = count;
                }
            cluster_conf[cluster] = best;
        }
        std::size_t disagreements = 0, abnormal_hits = 0;
        for (std::size_t v = 0; v < g.n; ++v)
            if (cluster_conf[hard.labels[v]] != conferences.labels[v]) {
                ++disagreements;
                if (abnormal.count(static_cast<int>(v))) ++abnormal_hits;
            }
        const double frac = disagreements == 0
                                ? 1.0
                                : static_cast<double>(abnormal_hits) /
                                      static_cast<double>(disagreements);
        fractions.push_back(frac);
        out << "seed " << s << ": " << abnormal_hits << "/" << disagreements << "; ";
    }
    const double mean_frac = mean_of(fractions);
    out << "mean abnormal fraction " << mean_frac;
    detail = out.str();
    return mean_frac >= 0.6;
}

// ---------------------------------------------------------------- criterion 8

bool overlap_benchmark(std::string& detail) {
    std::map<double, double> mean_by_fraction;
    std::ostringstream out;
    bool ok = true;
    for (double fraction : {0.1, 0.2, 0.3}) {
        std::vector<double> scores;
        for (std::uint64_t s = 0; s < 5; ++s) {
            OverlapSpec spec = overlap_paper_preset();
            spec.mu = 0.1;
            spec.overlap_fraction = fraction;
            spec.seed = 7000 + static_cast<std::uint64_t>(fraction * 100) + s;
            auto [g, truth] = generate_planted_overlap(spec);
            RunConfig cfg;
            cfg.c = truth.community_count();
            cfg.restarts = 5;
            cfg.base_seed = spec.seed;
            DetectResult result = detect(g, cfg);
            scores.push_back(result.cover.communities.empty()
                                 ? 0.0
                                 : gnmi(truth, result.cover));
        }
        mean_by_fraction[fraction] = mean_of(scores);
        out << "overlap " << fraction << ": mean GNMI " << mean_by_fraction[fraction] << "; ";
        if (mean_by_fraction[fraction] < 0.75) ok = false;
    }
    if (mean_by_fraction[0.1] - mean_by_fraction[0.3] > 0.15) ok = false;
    detail = out.str();
    return ok;
}

// ---------------------------------------------------------------- criterion 9

bool invariant_suite(std::string& detail) {
    std::ostringstream out;
    bool ok = true;

    std::size_t monotone = 0;
    double worst_row = 0.0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        GnSpec spec;
        spec.z_out = 4.0;
        spec.seed = 8000 + s;
        auto [g, truth] = generate_gn(spec);
        const Matrix A = adjacency_unit_diag(g);
        auto [soft, trace] = snmf_run(A, 4, 100, spec.seed);
        for (std::size_t i = 0; i < soft.node_count(); ++i) {
            double sum = 0.0;
            for (std::size_t j = 0; j < 4; ++j) sum += soft.values(i, j);
            worst_row = std::max(worst_row, std::abs(sum - 1.0));
        }
        if (trace.objective_per_iteration.back() <= trace.objective_per_iteration.front())
            ++monotone;
    }
    out << "max row-sum error " << worst_row << "; objective improved on " << monotone
        << "/100 runs; ";
    if (worst_row > 1e-9 || monotone < 95) ok = false;

    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        HardLabeling a, b;
        for (int v = 0; v < 30; ++v) {
            a.labels.push_back(static_cast<int>(rng() % 3));
            b.labels.push_back(static_cast<int>(rng() % 4));
        }
        if (std::abs(nmi(a, b) - nmi(b, a)) > 1e-12) ok = false;
        if (a.cluster_count() > 1 && std::abs(nmi(a, a) - 1.0) > 1e-12) ok = false;
        CommunityCover ca = cover_from_hard(a), cb = cover_from_hard(b);
        if (std::abs(gnmi(ca, cb) - gnmi(cb, ca)) > 1e-12) ok = false;
        if (std::abs(gnmi(ca, ca) - 1.0) > 1e-12) ok = false;
    }
    out << "metric symmetry/self-score checked; ";

    {
        SoftMembership U = init_soft(50, 6, 123);
        const double bound = std::log(6.0);
        for (double h : membership_entropy(U))
            if (h < -1e-12 || h > bound + 1e-12) ok = false;
        out << "entropy within [0, ln c]; ";
    }

    {
        GnSpec spec;
        spec.z_out = 4.0;
        spec.seed = 9001;
        auto [g, truth] = generate_gn(spec);
        RunConfig cfg;
        cfg.c = 4;
        cfg.restarts = 3;
        cfg.base_seed = 17;
        DetectResult r1 = detect(g, cfg);
        DetectResult r2 = detect(g, cfg);
        const bool same = r1.cover.communities == r2.cover.communities &&
                          r1.soft.values.data == r2.soft.values.data &&
                          r1.threshold.threshold == r2.threshold.threshold;
        out << (same ? "detect deterministic by seed" : "detect NOT deterministic");
        if (!same) ok = false;
    }

    detail = out.str();
    return ok;
}

struct Criterion {
    int id;
    const char* name;
    std::function<bool(std::string&)> run;
};

} // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "clique-cover density", clique_cover_density},
        {2, "threshold-search optimality", threshold_search_optimality},
        {3, "GN recovery", gn_recovery},
        {4, "GN degradation", gn_degradation},
        {5, "football model selection", football_model_selection},
        {6, "other real networks", other_real_networks},
        {7, "football mis-assignment locality", football_misassignment_locality},
        {8, "overlap benchmark", overlap_benchmark},
        {9, "invariant suite", invariant_suite},
    };

    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

    int failures = 0;
    for (const auto& criterion : criteria) {
        if (!wanted.empty() && !wanted.count(criterion.id)) continue;
        std::string detail;
        bool pass = false;
        try {
            pass = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion.id << " ("
                  << criterion.name << "): " << detail << "\n";
        if (!pass) ++failures;
    }
    return failures;
}
