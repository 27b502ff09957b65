#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "overlapnet/io.hpp"
#include "overlapnet/metrics.hpp"
#include "overlapnet/pipeline.hpp"
#include "overlapnet/synth.hpp"

namespace fs = std::filesystem;
using namespace overlapnet;

namespace {

void apply_thread_cap() {
#ifdef _OPENMP
    if (const char* env = std::getenv("OVERLAPNET_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0) omp_set_num_threads(t);
    }
#endif
}

NormMode parse_norm(const std::string& s) {
    if (s == "induced") return NormMode::induced;
    if (s == "entrywise") return NormMode::entrywise;
    throw CLI::ValidationError("--norm must be induced or entrywise");
}

PenaltyMode parse_penalty(const std::string& s) {
    if (s == "zero-rows") return PenaltyMode::zero_rows;
    if (s == "literal") return PenaltyMode::literal_eq3;
    throw CLI::ValidationError("--penalty must be zero-rows or literal");
}

void write_manifest(const fs::path& path, const std::string& command,
                    const nlohmann::json& flags, std::uint64_t seed,
                    const std::string& input_digest) {
    nlohmann::json j;
    j["command"] = command;
    j["flags"] = flags;
    j["seed"] = seed;
    if (!input_digest.empty()) j["input_digest"] = input_digest;
    io::write_file(path.string(), j.dump(2) + "\n");
}

int cmd_detect(const std::string& input, bool one_based, int c, const std::string& sweep_range,
               std::size_t restarts, std::size_t iters, std::uint64_t seed,
               const std::string& norm, const std::string& penalty, const std::string& out_dir,
               bool force_hard) {
    const std::string text = io::read_file(input);
    LoadReport load;
    const Graph g = load_edge_list(text, one_based, &load);

    RunConfig cfg;
    cfg.restarts = restarts;
    cfg.iters = iters;
    cfg.base_seed = seed;
    cfg.binarize.norm = parse_norm(norm);
    cfg.binarize.penalty = parse_penalty(penalty);

    fs::create_directories(out_dir);
    const fs::path dir(out_dir);

    std::size_t chosen_c;
    if (!sweep_range.empty()) {
        const auto colon = sweep_range.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--sweep must look like MIN:MAX");
        const std::size_t lo = std::stoul(sweep_range.substr(0, colon));
        const std::size_t hi = std::stoul(sweep_range.substr(colon + 1));
        const SweepReport report = sweep(g, lo, hi, cfg);
        io::write_file((dir / "sweep.csv").string(), report.to_csv());
        chosen_c = report.selected_c;
    } else {
        if (c < 1) throw CLI::ValidationError("give --c or --sweep");
        chosen_c = static_cast<std::size_t>(c);
    }

    cfg.c = chosen_c;
    const DetectResult result = detect(g, cfg);
    io::write_file((dir / "cover.txt").string(), io::format_cover(result.cover));
    io::write_file((dir / "density.json").string(), result.density.to_json() + "\n");
    io::write_file((dir / "entropy.csv").string(),
                   entropy_report(result.soft, result.cover).to_csv());
    if (force_hard) {
        const HardLabeling hard = harden(result.cover, result.soft);
        io::write_file((dir / "labels.txt").string(), io::format_labels(hard));
    }

    nlohmann::json flags{{"input", input},         {"one_based", one_based},
                         {"c", chosen_c},          {"sweep", sweep_range},
                         {"restarts", restarts},   {"iters", iters},
                         {"norm", norm},           {"penalty", penalty},
                         {"force_hard", force_hard},
                         {"load_report", nlohmann::json::parse(load.to_json())}};
    write_manifest(dir / "manifest.json", "detect", flags, seed, io::digest_hex(text));

    std::cout << "communities: " << result.cover.community_count()
              << "  D: " << io::format_double(result.density.overall)
              << "  threshold: " << io::format_double(result.threshold.threshold) << "\n";
    return 0;
}

int cmd_generate_gn(double zout, std::uint64_t seed, const std::string& out_prefix) {
    GnSpec spec;
    spec.z_out = zout;
    spec.seed = seed;
    auto [g, labels] = generate_gn(spec);
    io::write_file(out_prefix + "_edges.txt", io::format_edge_list(g));
    io::write_file(out_prefix + "_labels.txt", io::format_labels(labels));
    nlohmann::json flags{{"zout", zout}, {"out", out_prefix}};
    write_manifest(out_prefix + "_manifest.json", "generate gn", flags, seed, "");
    std::cout << "n: " << g.n << "  m: " << g.edge_count() << "\n";
    return 0;
}

int cmd_generate_overlap(const OverlapSpec& spec, const std::string& out_prefix) {
    auto [g, cover] = generate_planted_overlap(spec);
    io::write_file(out_prefix + "_network.dat", io::format_lfr_network(g));
    io::write_file(out_prefix + "_community.dat", io::format_lfr_communities(cover));
    nlohmann::json flags{{"n", spec.n},
                         {"mu", spec.mu},
                         {"overlap_fraction", spec.overlap_fraction},
                         {"mean_degree", spec.mean_degree},
                         {"max_degree", spec.max_degree},
                         {"s_min", spec.s_min},
                         {"s_max", spec.s_max},
                         {"gamma", spec.gamma},
                         {"beta", spec.beta},
                         {"out", out_prefix}};
    write_manifest(out_prefix + "_manifest.json", "generate overlap", flags, spec.seed, "");
    std::cout << "n: " << g.n << "  m: " << g.edge_count()
              << "  communities: " << cover.community_count() << "\n";
    return 0;
}

int cmd_eval(const std::string& truth_path, const std::string& found_path,
             const std::string& metric) {
    double value;
    std::size_t n, k_truth, k_found;
    if (metric == "nmi") {
        const HardLabeling truth = io::parse_labels(io::read_file(truth_path));
        const HardLabeling found = io::parse_labels(io::read_file(found_path));
        value = nmi(truth, found);
        n = truth.n();
        k_truth = truth.cluster_count();
        k_found = found.cluster_count();
    } else if (metric == "gnmi") {
        CommunityCover truth = io::parse_cover(io::read_file(truth_path));
        CommunityCover found = io::parse_cover(io::read_file(found_path));
        const std::size_t universe = std::max(truth.n, found.n);
        truth.n = found.n = universe;
        value = gnmi(truth, found);
        n = universe;
        k_truth = truth.community_count();
        k_found = found.community_count();
    } else {
        throw CLI::ValidationError("--metric must be nmi or gnmi");
    }
    nlohmann::json j{{"metric", metric}, {"value", value},   {"n", n},
                     {"k_truth", k_truth}, {"k_found", k_found}};
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_entropy(const std::string& input, bool one_based, int c, std::size_t restarts,
                std::size_t iters, std::uint64_t seed, const std::string& out_dir) {
    const std::string text = io::read_file(input);
    const Graph g = load_edge_list(text, one_based);
    RunConfig cfg;
    cfg.c = static_cast<std::size_t>(c);
    cfg.restarts = restarts;
    cfg.iters = iters;
    cfg.base_seed = seed;
    const DetectResult result = detect(g, cfg);
    const EntropyReport report = entropy_report(result.soft, result.cover);
    fs::create_directories(out_dir);
    io::write_file((fs::path(out_dir) / "entropy.csv").string(), report.to_csv());
    for (const auto& e : report.per_community)
        std::cout << "community " << e.community << "  mean_H: " << io::format_double(e.mean)
                  << "  max_H: " << io::format_double(e.max) << "\n";
    nlohmann::json flags{{"input", input}, {"c", c}, {"restarts", restarts}, {"iters", iters}};
    write_manifest(fs::path(out_dir) / "entropy_manifest.json", "entropy", flags, seed,
                   io::digest_hex(text));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    apply_thread_cap();

    CLI::App app{"Overlapping community detection via symmetric binary matrix factorization"};
    app.require_subcommand(1);

    // detect
    std::string input, sweep_range, norm = "induced", penalty = "zero-rows", out_dir = ".";
    int c = 0;
    std::size_t restarts = 10, iters = 100;
    std::uint64_t seed = 0;
    bool one_based = false, force_hard = false;
    auto* detect_cmd = app.add_subcommand("detect", "detect communities in an edge list");
    detect_cmd->add_option("--input", input, "edge list file")->required();
    detect_cmd->add_flag("--one-based", one_based, "input node ids start at 1");
    detect_cmd->add_option("--c", c, "number of communities");
    detect_cmd->add_option("--sweep", sweep_range, "sweep range MIN:MAX, selects c by density");
    detect_cmd->add_option("--restarts", restarts, "restarts per c");
    detect_cmd->add_option("--iters", iters, "multiplicative-update iterations");
    detect_cmd->add_option("--seed", seed, "base seed");
    detect_cmd->add_option("--norm", norm, "induced|entrywise");
    detect_cmd->add_option("--penalty", penalty, "zero-rows|literal");
    detect_cmd->add_option("--out", out_dir, "output directory");
    detect_cmd->add_flag("--force-hard", force_hard, "also write hardened labels");

    // generate
    auto* generate_cmd = app.add_subcommand("generate", "generate benchmark networks");
    generate_cmd->require_subcommand(1);
    double zout = 4.0;
    std::uint64_t gen_seed = 0;
    std::string out_prefix = "network";
    auto* gn_cmd = generate_cmd->add_subcommand("gn", "planted 4x32 partition");
    gn_cmd->add_option("--zout", zout, "expected external degree");
    gn_cmd->add_option("--seed", gen_seed, "seed");
    gn_cmd->add_option("--out", out_prefix, "output prefix");

    OverlapSpec ospec;
    std::string preset;
    auto* overlap_cmd = generate_cmd->add_subcommand("overlap", "planted overlapping benchmark");
    overlap_cmd->add_option("--preset", preset, "lfr-paper");
    overlap_cmd->add_option("--n", ospec.n, "node count");
    overlap_cmd->add_option("--mu", ospec.mu, "mixing fraction");
    overlap_cmd->add_option("--overlap", ospec.overlap_fraction, "overlapping node fraction");
    overlap_cmd->add_option("--kavg", ospec.mean_degree, "mean degree");
    overlap_cmd->add_option("--maxdeg", ospec.max_degree, "max degree");
    overlap_cmd->add_option("--smin", ospec.s_min, "min community size");
    overlap_cmd->add_option("--smax", ospec.s_max, "max community size");
    overlap_cmd->add_option("--gamma", ospec.gamma, "degree exponent");
    overlap_cmd->add_option("--beta", ospec.beta, "community size exponent");
    overlap_cmd->add_option("--seed", ospec.seed, "seed");
    overlap_cmd->add_option("--out", out_prefix, "output prefix");

    // eval
    std::string truth_path, found_path, metric = "nmi";
    auto* eval_cmd = app.add_subcommand("eval", "score a result against ground truth");
    eval_cmd->add_option("--truth", truth_path, "ground-truth file")->required();
    eval_cmd->add_option("--found", found_path, "detected file")->required();
    eval_cmd->add_option("--metric", metric, "nmi|gnmi");

    // entropy
    std::string ent_input, ent_out = ".";
    int ent_c = 0;
    std::size_t ent_restarts = 10, ent_iters = 100;
    std::uint64_t ent_seed = 0;
    bool ent_one_based = false;
    auto* entropy_cmd = app.add_subcommand("entropy", "per-node membership entropy at fixed c");
    entropy_cmd->add_option("--input", ent_input, "edge list file")->required();
    entropy_cmd->add_flag("--one-based", ent_one_based, "input node ids start at 1");
    entropy_cmd->add_option("--c", ent_c, "number of communities")->required();
    entropy_cmd->add_option("--restarts", ent_restarts, "restarts");
    entropy_cmd->add_option("--iters", ent_iters, "iterations");
    entropy_cmd->add_option("--seed", ent_seed, "base seed");
    entropy_cmd->add_option("--out", ent_out, "output directory");

    try {
        app.parse(argc, argv);
        if (detect_cmd->parsed())
            return cmd_detect(input, one_based, c, sweep_range, restarts, iters, seed, norm,
                              penalty, out_dir, force_hard);
        if (gn_cmd->parsed()) return cmd_generate_gn(zout, gen_seed, out_prefix);
        if (overlap_cmd->parsed()) {
            if (!preset.empty() && preset != "lfr-paper")
                throw CLI::ValidationError("unknown preset: " + preset);
            if (preset == "lfr-paper") {
                const std::uint64_t s = ospec.seed;
                const std::string out = out_prefix;
                ospec = overlap_paper_preset();
                ospec.seed = s;
                out_prefix = out;
            }
            return cmd_generate_overlap(ospec, out_prefix);
        }
        if (eval_cmd->parsed()) return cmd_eval(truth_path, found_path, metric);
        if (entropy_cmd->parsed())
            return cmd_entropy(ent_input, ent_one_based, ent_c, ent_restarts, ent_iters, ent_seed,
                               ent_out);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
