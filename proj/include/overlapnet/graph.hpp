#ifndef OVERLAPNET_GRAPH_HPP
#define OVERLAPNET_GRAPH_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "overlapnet/cover.hpp"
#include "overlapnet/matrix.hpp"

namespace overlapnet {

// Undirected simple graph with contiguous 0-based node ids.
struct Graph {
    std::size_t n = 0;
    std::vector<std::pair<int, int>> edges; // u < v, sorted, unique
    std::vector<std::string> names;         // optional, size n or empty

    std::size_t edge_count() const { return edges.size(); }
    bool has_edge(int u, int v) const;
    std::vector<int> degrees() const;
    std::vector<std::vector<int>> adjacency_lists() const;
};

struct LoadReport {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t dropped_duplicates = 0;
    std::size_t dropped_self_loops = 0;

    std::string to_json() const;
};

// Parse a whitespace-separated edge list ('#' starts a comment line).
// Duplicate edges and self-loops are dropped and counted in the report.
Graph load_edge_list(const std::string& text, bool one_based, LoadReport* report = nullptr);

// Construct a Graph from an arbitrary edge list (ids 0-based); dedupes and
// drops self-loops like load_edge_list. n is max id + 1 unless a larger
// floor is given.
Graph graph_from_edges(std::vector<std::pair<int, int>> raw_edges, std::size_t n_floor = 0,
                       LoadReport* report = nullptr);

// Ingest a benchmark file pair: network file has 1-based edge pairs (each
// edge possibly listed twice), community file has "node<TAB>c1 c2 ..."
// with 1-based node and community ids.
std::pair<Graph, CommunityCover> load_lfr_files(const std::string& network_text,
                                                const std::string& community_text);

// Dense symmetric 0/1 adjacency with all diagonal entries set to 1.
Matrix adjacency_unit_diag(const Graph& g);

// Number of graph edges with both endpoints in `nodes`.
std::size_t induced_edge_count(const Graph& g, const std::vector<int>& nodes);

} // namespace overlapnet

#endif
