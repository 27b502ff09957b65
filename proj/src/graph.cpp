#include "overlapnet/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace overlapnet {

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

std::vector<std::vector<int>> Graph::adjacency_lists() const {
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

std::string LoadReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["m"] = m;
    j["dropped_duplicates"] = dropped_duplicates;
    j["dropped_self_loops"] = dropped_self_loops;
    return j.dump();
}

Graph graph_from_edges(std::vector<std::pair<int, int>> raw_edges, std::size_t n_floor,
                       LoadReport* report) {
    std::size_t self_loops = 0;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(raw_edges.size());
    int max_id = -1;
    for (auto [u, v] : raw_edges) {
        if (u < 0 || v < 0) throw std::invalid_argument("negative node id");
        max_id = std::max(max_id, std::max(u, v));
        if (u == v) {
            ++self_loops;
            continue;
        }
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
    }
    std::sort(edges.begin(), edges.end());
    const std::size_t before = edges.size();
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Graph g;
    g.n = std::max(n_floor, static_cast<std::size_t>(max_id + 1));
    g.edges = std::move(edges);
    if (report) {
        report->n = g.n;
        report->m = g.edges.size();
        report->dropped_duplicates = before - g.edges.size();
        report->dropped_self_loops = self_loops;
    }
    return g;
}

namespace {

// Split into non-empty whitespace-separated tokens.
std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

int parse_int(std::string_view tok, std::size_t line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": expected integer, got '" + std::string(tok) + "'");
    return value;
}

} // namespace

Graph load_edge_list(const std::string& text, bool one_based, LoadReport* report) {
    std::vector<std::pair<int, int>> raw;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool saw_data = false;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        std::string_view body(line);
        if (hash != std::string::npos) body = body.substr(0, hash);
        auto toks = tokenize(body);
        if (toks.empty()) continue;
        if (toks.size() != 2)
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": expected two integer tokens");
        int u = parse_int(toks[0], line_no);
        int v = parse_int(toks[1], line_no);
        if (one_based) {
            --u;
            --v;
        }
        if (u < 0 || v < 0)
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": node id out of range");
        raw.emplace_back(u, v);
        saw_data = true;
    }
    if (!saw_data) throw std::invalid_argument("empty edge list");
    return graph_from_edges(std::move(raw), 0, report);
}

std::pair<Graph, CommunityCover> load_lfr_files(const std::string& network_text,
                                                const std::string& community_text) {
    Graph g = load_edge_list(network_text, /*one_based=*/true);

    std::map<int, std::set<int>> node_comms; // 0-based node -> set of 0-based community ids
    std::istringstream in(community_text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        std::string_view body(line);
        if (hash != std::string::npos) body = body.substr(0, hash);
        auto toks = tokenize(body);
        if (toks.empty()) continue;
        if (toks.size() < 2)
            throw std::invalid_argument("community file line " + std::to_string(line_no) +
                                        ": expected node id and at least one community id");
        int node = parse_int(toks[0], line_no) - 1;
        if (node < 0 || static_cast<std::size_t>(node) >= g.n)
            throw std::invalid_argument("community file line " + std::to_string(line_no) +
                                        ": node not present in network file");
        for (std::size_t t = 1; t < toks.size(); ++t) {
            int comm = parse_int(toks[t], line_no) - 1;
            if (comm < 0)
                throw std::invalid_argument("community file line " + std::to_string(line_no) +
                                            ": community id out of range");
            node_comms[node].insert(comm);
        }
    }
    if (node_comms.size() != g.n)
        throw std::invalid_argument("community file covers " + std::to_string(node_comms.size()) +
                                    " nodes but network has " + std::to_string(g.n));

    int max_comm = -1;
    for (const auto& [node, comms] : node_comms)
        for (int c : comms) max_comm = std::max(max_comm, c);

    CommunityCover cover;
    cover.n = g.n;
    cover.communities.assign(max_comm + 1, {});
    for (const auto& [node, comms] : node_comms)
        for (int c : comms) cover.communities[c].push_back(node);
    // drop unused community ids, keep order
    std::erase_if(cover.communities, [](const std::vector<int>& c) { return c.empty(); });
    for (auto& c : cover.communities) std::sort(c.begin(), c.end());
    return {std::move(g), std::move(cover)};
}

Matrix adjacency_unit_diag(const Graph& g) {
    Matrix A(g.n, g.n);
    for (std::size_t i = 0; i < g.n; ++i) A(i, i) = 1.0;
    for (const auto& [u, v] : g.edges) {
        A(u, v) = 1.0;
        A(v, u) = 1.0;
    }
    return A;
}

std::size_t induced_edge_count(const Graph& g, const std::vector<int>& nodes) {
    std::vector<char> in_set(g.n, 0);
    for (int v : nodes) {
        if (v < 0 || static_cast<std::size_t>(v) >= g.n)
            throw std::out_of_range("node id out of range");
        in_set[v] = 1;
    }
    std::size_t count = 0;
    for (const auto& [u, v] : g.edges)
        if (in_set[u] && in_set[v]) ++count;
    return count;
}

} // namespace overlapnet
