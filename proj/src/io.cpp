#include "overlapnet/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace overlapnet::io {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string format_cover(const CommunityCover& cover) {
    std::ostringstream out;
    for (std::size_t t = 0; t < cover.communities.size(); ++t) {
        out << t << ":";
        for (int v : cover.communities[t]) out << " " << v;
        out << "\n";
    }
    out << "outliers:";
    for (int v : cover.outliers) out << " " << v;
    out << "\n";
    return out.str();
}

CommunityCover parse_cover(const std::string& text) {
    CommunityCover cover;
    std::istringstream in(text);
    std::string line;
    int max_node = -1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("cover file: missing ':'");
        const std::string head = line.substr(0, colon);
        std::istringstream rest(line.substr(colon + 1));
        std::vector<int> nodes;
        int v;
        while (rest >> v) {
            nodes.push_back(v);
            max_node = std::max(max_node, v);
        }
        std::sort(nodes.begin(), nodes.end());
        if (head == "outliers") {
            cover.outliers = std::move(nodes);
        } else {
            if (nodes.empty()) throw std::invalid_argument("cover file: empty community");
            cover.communities.push_back(std::move(nodes));
        }
    }
    cover.n = static_cast<std::size_t>(max_node + 1);
    return cover;
}

std::string format_labels(const HardLabeling& labels) {
    std::ostringstream out;
    for (std::size_t i = 0; i < labels.labels.size(); ++i)
        out << i << " " << labels.labels[i] << "\n";
    return out.str();
}

HardLabeling parse_labels(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<int, int>> pairs;
    int max_node = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        int node, label;
        if (!(row >> node >> label)) throw std::invalid_argument("labels file: bad line");
        pairs.emplace_back(node, label);
        max_node = std::max(max_node, node);
    }
    if (pairs.empty()) throw std::invalid_argument("labels file: empty");
    HardLabeling labels;
    labels.labels.assign(max_node + 1, -1);
    for (auto [node, label] : pairs) {
        if (node < 0 || label < 0) throw std::invalid_argument("labels file: negative id");
        labels.labels[node] = label;
    }
    for (int l : labels.labels)
        if (l < 0) throw std::invalid_argument("labels file: node without label");
    return labels;
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    for (const auto& [u, v] : g.edges) out << u << " " << v << "\n";
    return out.str();
}

std::string format_lfr_network(const Graph& g) {
    std::ostringstream out;
    for (const auto& [u, v] : g.edges) out << u + 1 << "\t" << v + 1 << "\n";
    return out.str();
}

std::string format_lfr_communities(const CommunityCover& cover) {
    std::vector<std::vector<int>> node_comms(cover.n);
    for (std::size_t t = 0; t < cover.communities.size(); ++t)
        for (int v : cover.communities[t]) node_comms[v].push_back(static_cast<int>(t) + 1);
    std::ostringstream out;
    for (std::size_t i = 0; i < cover.n; ++i) {
        out << i + 1 << "\t";
        for (std::size_t j = 0; j < node_comms[i].size(); ++j) {
            if (j) out << " ";
            out << node_comms[i][j];
        }
        out << "\n";
    }
    return out.str();
}

std::string digest_hex(const std::string& bytes) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001B3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace overlapnet::io
