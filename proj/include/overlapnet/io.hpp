#ifndef OVERLAPNET_IO_HPP
#define OVERLAPNET_IO_HPP

#include <cstdint>
#include <string>

#include "overlapnet/cover.hpp"
#include "overlapnet/graph.hpp"

namespace overlapnet::io {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Cover file: one community per line "id: node node ...", final line
// "outliers: ...". Diff-friendly text.
std::string format_cover(const CommunityCover& cover);
CommunityCover parse_cover(const std::string& text);

// Labels file: "node label" per line, 0-based.
std::string format_labels(const HardLabeling& labels);
HardLabeling parse_labels(const std::string& text);

// Edge list: "u v" per line, 0-based.
std::string format_edge_list(const Graph& g);

// Benchmark file pair in the format load_lfr_files ingests (1-based).
std::string format_lfr_network(const Graph& g);
std::string format_lfr_communities(const CommunityCover& cover);

// FNV-1a 64-bit of a byte string, lowercase hex.
std::string digest_hex(const std::string& bytes);

// Doubles rendered with 12 significant digits.
std::string format_double(double v);

} // namespace overlapnet::io

#endif
