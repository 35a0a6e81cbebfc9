#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "xroute/graph.hpp"
#include "xroute/partition.hpp"
#include "xroute/perm.hpp"
#include "xroute/simulate.hpp"

namespace xroute {

// Graph file: "n d" then one "u v" line per edge, u < v, lexicographic order.
std::string graph_text(const Graph& g);
/// Strict reader: unsorted, non-canonical, duplicate or missing edges are
/// Parse errors; structural problems surface as the Graph errors.
Graph parse_graph(std::string_view text);

/// FNV-1a 64 of graph_text(g), as 16 lowercase hex digits.
std::string graph_hash(const Graph& g);

// Permutation file: one line of n integers, position v holds pi(v).
std::string permutation_text(const Permutation& p);
Permutation parse_permutation(std::string_view text);

// Schedule text: "round <i>: u-v u-v ..." per round, i from 1.
std::string schedule_text(const Schedule& s);
Schedule parse_schedule_text(std::string_view text);

// Schedule JSON: {"graph_hash": "...", "rounds": [[[u, v], ...], ...]}.
std::string schedule_json(const Schedule& s, const std::string& graph_hash);
struct HashedSchedule {
  std::string graph_hash;
  Schedule schedule;
};
HashedSchedule parse_schedule_json(std::string_view text);

/// Accepts either schedule format, telling them apart by the first
/// non-blank character. graph_hash is empty for the text format.
HashedSchedule parse_schedule_any(std::string_view text);

// Partition line: n characters '1' / '2'.
std::string partition_text(const Partition& p);
Partition parse_partition(std::string_view text);

std::string format_fixed(double value, int decimals);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace xroute
