#include "overlapnet/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace overlapnet {

namespace {

// Inverse-CDF sample of a continuous power law x^-e truncated to [a, b].
double power_law_sample(double e, double a, double b, double u) {
    if (a >= b) return a;
    if (std::abs(e - 1.0) < 1e-12) return a * std::pow(b / a, u);
    const double p = 1.0 - e;
    return std::pow(std::pow(a, p) + u * (std::pow(b, p) - std::pow(a, p)), 1.0 / p);
}

double power_law_mean(double e, double a, double b) {
    if (a >= b) return a;
    if (std::abs(e - 1.0) < 1e-12) return (b - a) / std::log(b / a);
    if (std::abs(e - 2.0) < 1e-12) return std::log(b / a) / (1.0 / a - 1.0 / b);
    const double p = 1.0 - e, q = 2.0 - e;
    return (p / q) * (std::pow(b, q) - std::pow(a, q)) / (std::pow(b, p) - std::pow(a, p));
}

// Lower truncation bound that puts the distribution mean at `target`.
double solve_lower_bound(double e, double b, double target) {
    double lo = 1.0, hi = b;
    if (power_law_mean(e, lo, b) >= target) return lo;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (power_law_mean(e, mid, b) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::uint64_t edge_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

} // namespace

std::pair<Graph, HardLabeling> generate_gn(const GnSpec& spec) {
    if (spec.z_out < 0.0 || spec.z_out > GnSpec::total_degree)
        throw std::invalid_argument("generate_gn: z_out must be in [0, 16]");
    const std::size_t n = GnSpec::communities * GnSpec::community_size;
    const double z_in = GnSpec::total_degree - spec.z_out;
    const double p_in = z_in / (GnSpec::community_size - 1.0);
    const double p_out = spec.z_out / static_cast<double>((GnSpec::communities - 1) *
                                                          GnSpec::community_size);

    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<std::pair<int, int>> edges;
    HardLabeling labels;
    labels.labels.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        labels.labels[i] = static_cast<int>(i / GnSpec::community_size);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double p = labels.labels[i] == labels.labels[j] ? p_in : p_out;
            if (unit(rng) < p) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }

    return {graph_from_edges(std::move(edges), n), std::move(labels)};
}

OverlapSpec overlap_paper_preset() { return OverlapSpec{}; }

std::pair<Graph, CommunityCover> generate_planted_overlap(const OverlapSpec& spec) {
    if (spec.mu < 0.0 || spec.mu >= 1.0) throw std::invalid_argument("overlap: mu in [0,1)");
    if (spec.overlap_fraction < 0.0 || spec.overlap_fraction > 1.0)
        throw std::invalid_argument("overlap: overlap_fraction in [0,1]");
    if (spec.s_min < 3 || spec.s_max < spec.s_min)
        throw std::invalid_argument("overlap: need 3 <= s_min <= s_max");
    if (spec.gamma <= 0.0 || spec.beta <= 0.0)
        throw std::invalid_argument("overlap: exponents must be positive");
    if (spec.n < spec.s_min) throw std::invalid_argument("overlap: n smaller than s_min");

    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const std::size_t n = spec.n;
    const std::size_t overlap_nodes = static_cast<std::size_t>(
        std::llround(spec.overlap_fraction * static_cast<double>(n)));
    const std::size_t slots = n + overlap_nodes;

    // community sizes from the truncated power law, trimmed to exactly fill
    // the membership slots
    std::vector<std::size_t> sizes;
    std::size_t size_sum = 0;
    while (size_sum < slots) {
        const double draw = power_law_sample(spec.beta, static_cast<double>(spec.s_min),
                                             static_cast<double>(spec.s_max), unit(rng));
        const std::size_t s = std::clamp<std::size_t>(
            static_cast<std::size_t>(std::llround(draw)), spec.s_min, spec.s_max);
        sizes.push_back(s);
        size_sum += s;
    }
    std::size_t excess = size_sum - slots;
    while (excess > 0) {
        auto it = std::max_element(sizes.begin(), sizes.end());
        if (*it > spec.s_min) {
            const std::size_t cut = std::min(excess, *it - spec.s_min);
            *it -= cut;
            excess -= cut;
        } else {
            // all communities at s_min: drop one, then grow the rest back
            if (sizes.size() <= 1) throw std::invalid_argument("overlap: infeasible size spec");
            sizes.pop_back();
            const std::size_t have = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
            if (have > slots) {
                excess = have - slots;
                continue;
            }
            std::size_t deficit = slots - have;
            excess = 0;
            std::size_t guard = 0;
            while (deficit > 0) {
                bool grew = false;
                for (auto& s : sizes) {
                    if (deficit == 0) break;
                    if (s < spec.s_max) {
                        ++s;
                        --deficit;
                        grew = true;
                    }
                }
                if (!grew || ++guard > slots)
                    throw std::invalid_argument("overlap: infeasible size spec");
            }
        }
    }
    const std::size_t k = sizes.size();
    if (overlap_nodes > 0 && k < 2)
        throw std::invalid_argument("overlap: need >= 2 communities for overlapping nodes");

    // membership assignment: overlapping nodes first, each pick goes to the
    // communities with the most remaining capacity
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<std::size_t> capacity = sizes;
    std::vector<std::vector<int>> memberships(n);
    auto pick_top = [&](const std::vector<int>& exclude) -> int {
        int best = -1;
        std::size_t best_cap = 0;
        for (std::size_t t = 0; t < k; ++t) {
            if (capacity[t] == 0) continue;
            if (std::find(exclude.begin(), exclude.end(), static_cast<int>(t)) != exclude.end())
                continue;
            if (capacity[t] > best_cap) {
                best_cap = capacity[t];
                best = static_cast<int>(t);
            }
        }
        return best;
    };
    for (std::size_t idx = 0; idx < n; ++idx) {
        const int node = order[idx];
        const int want = idx < overlap_nodes ? 2 : 1;
        for (int w = 0; w < want; ++w) {
            const int t = pick_top(memberships[node]);
            if (t < 0) throw std::invalid_argument("overlap: infeasible membership assignment");
            memberships[node].push_back(t);
            --capacity[t];
        }
        std::sort(memberships[node].begin(), memberships[node].end());
    }

    // target degrees
    const double k_max = static_cast<double>(std::min(spec.max_degree, n - 1));
    const double k_lo = solve_lower_bound(spec.gamma, k_max, spec.mean_degree);
    std::vector<int> target_degree(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double draw = power_law_sample(spec.gamma, k_lo, k_max, unit(rng));
        target_degree[i] =
            std::clamp<int>(static_cast<int>(std::llround(draw)), 1, static_cast<int>(k_max));
    }

    std::unordered_set<std::uint64_t> edge_set;
    std::vector<std::pair<int, int>> edges;
    auto try_add = [&](int u, int v) {
        if (u == v) return false;
        if (!edge_set.insert(edge_key(u, v)).second) return false;
        edges.emplace_back(u, v);
        return true;
    };
    auto share_community = [&](int u, int v) {
        const auto& a = memberships[u];
        const auto& b = memberships[v];
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return true;
            if (a[i] < b[j])
                ++i;
            else
                ++j;
        }
        return false;
    };
    auto pair_stubs = [&](std::vector<int>& stubs, bool internal) {
        for (int round = 0; round < 20 && stubs.size() >= 2; ++round) {
            std::shuffle(stubs.begin(), stubs.end(), rng);
            std::vector<int> leftover;
            if (stubs.size() % 2) {
                leftover.push_back(stubs.back());
                stubs.pop_back();
            }
            for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
                const int u = stubs[i], v = stubs[i + 1];
                const bool ok = internal ? true : !share_community(u, v);
                if (!ok || !try_add(u, v)) {
                    leftover.push_back(u);
                    leftover.push_back(v);
                }
            }
            stubs = std::move(leftover);
        }
    };

    // internal stubs, per community
    std::vector<std::vector<int>> internal_stubs(k);
    std::vector<int> external_stubs;
    for (std::size_t i = 0; i < n; ++i) {
        const int ki = target_degree[i];
        const int internal = static_cast<int>(std::llround((1.0 - spec.mu) * ki));
        const int external = ki - internal;
        const auto& mine = memberships[i];
        const int l = static_cast<int>(mine.size());
        for (int s = 0; s < internal; ++s)
            internal_stubs[mine[s % l]].push_back(static_cast<int>(i));
        for (int s = 0; s < external; ++s) external_stubs.push_back(static_cast<int>(i));
    }
    for (std::size_t t = 0; t < k; ++t) pair_stubs(internal_stubs[t], /*internal=*/true);
    pair_stubs(external_stubs, /*internal=*/false);

    CommunityCover cover;
    cover.n = n;
    cover.communities.assign(k, {});
    for (std::size_t i = 0; i < n; ++i)
        for (int t : memberships[i]) cover.communities[t].push_back(static_cast<int>(i));
    for (auto& comm : cover.communities) std::sort(comm.begin(), comm.end());

    Graph g = graph_from_edges(std::move(edges), n);
    return {std::move(g), std::move(cover)};
}

} // namespace overlapnet
