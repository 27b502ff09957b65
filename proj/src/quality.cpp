#include "overlapnet/quality.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "overlapnet/io.hpp"

namespace overlapnet {

void validate_cover(const CommunityCover& cover) {
    std::vector<char> covered(cover.n, 0);
    for (const auto& comm : cover.communities) {
        if (comm.empty()) throw std::invalid_argument("cover has an empty community");
        for (int v : comm) {
            if (v < 0 || static_cast<std::size_t>(v) >= cover.n)
                throw std::invalid_argument("cover references node out of range");
            covered[v] = 1;
        }
    }
    for (int v : cover.outliers) {
        if (v < 0 || static_cast<std::size_t>(v) >= cover.n)
            throw std::invalid_argument("outlier out of range");
        if (covered[v]) throw std::invalid_argument("outlier also appears in a community");
        covered[v] = 2;
    }
    for (std::size_t i = 0; i < cover.n; ++i)
        if (!covered[i])
            throw std::invalid_argument("node " + std::to_string(i) +
                                        " is neither covered nor an outlier");
}

std::vector<int> label_counts(const CommunityCover& cover) {
    std::vector<int> l(cover.n, 0);
    for (const auto& comm : cover.communities)
        for (int v : comm) ++l[v];
    return l;
}

double community_density(std::size_t n_nodes, std::size_t m_edges) {
    if (n_nodes < 1) throw std::invalid_argument("community_density: empty community");
    const std::size_t clique = n_nodes * (n_nodes - 1) / 2;
    if (m_edges > clique) throw std::invalid_argument("community_density: m exceeds clique bound");
    if (n_nodes <= 2) return 0.0; // denominator vanishes
    const double num = static_cast<double>(m_edges) - static_cast<double>(n_nodes - 1);
    const double den = static_cast<double>(clique) - static_cast<double>(n_nodes - 1);
    return num / den;
}

DensityReport partition_density(const Graph& g, const CommunityCover& cover) {
    if (cover.n != g.n) throw std::invalid_argument("partition_density: cover/graph mismatch");
    validate_cover(cover);

    DensityReport report;
    const auto labels = label_counts(cover);

    std::size_t size_sum = 0;
    double weighted = 0.0;
    for (const auto& comm : cover.communities) {
        CommunityDensityRow row;
        row.n_nodes = comm.size();
        row.m_edges = induced_edge_count(g, comm);
        row.q_max = 0;
        for (int v : comm) row.q_max = std::max<std::size_t>(row.q_max, labels[v]);
        row.density = community_density(row.n_nodes, row.m_edges);
        size_sum += row.n_nodes;
        if (row.n_nodes > 2) {
            const double na = static_cast<double>(row.n_nodes);
            const double ma = static_cast<double>(row.m_edges);
            weighted += na / static_cast<double>(row.q_max) * (ma - (na - 1.0)) /
                        ((na - 2.0) * (na - 1.0));
        }
        report.per_community.push_back(row);
    }
    report.total_size = size_sum + cover.outliers.size();
    if (cover.communities.empty()) {
        report.degenerate = true;
        report.overall = 0.0;
    } else {
        report.overall = 2.0 / static_cast<double>(report.total_size) * weighted;
    }
    return report;
}

std::string DensityReport::to_json() const {
    nlohmann::json j;
    j["N"] = total_size;
    j["D"] = overall;
    j["degenerate"] = degenerate;
    auto& arr = j["communities"] = nlohmann::json::array();
    for (std::size_t i = 0; i < per_community.size(); ++i) {
        const auto& row = per_community[i];
        arr.push_back({{"id", i},
                       {"n", row.n_nodes},
                       {"m", row.m_edges},
                       {"q", row.q_max},
                       {"d", row.density}});
    }
    return j.dump(2);
}

std::string DensityReport::to_csv() const {
    std::ostringstream out;
    out << "community_id,n,m,q,d\n";
    for (std::size_t i = 0; i < per_community.size(); ++i) {
        const auto& row = per_community[i];
        out << i << "," << row.n_nodes << "," << row.m_edges << "," << row.q_max << ","
            << io::format_double(row.density) << "\n";
    }
    return out.str();
}

} // namespace overlapnet
