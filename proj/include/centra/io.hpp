#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "centra/experiments.hpp"
#include "centra/graph.hpp"

namespace centra::io {

struct LabeledGraph {
  WeightedDigraph graph;
  /// id -> label, ids assigned in order of first appearance.
  std::vector<std::string> names;
};

/// Edge list: a header `src,dst,weight[,directed]`, then one edge per line.
/// `#` starts a comment line, blank lines are skipped. Rows with
/// directed=false expand to both directions. When the column is absent every
/// row is a single directed edge.
///
/// Errors carry the 1-based line: parse_error, self_loop, non_positive_weight,
/// duplicate_edge.
LabeledGraph parse_edge_list(std::istream& in, WeightKind kind);
LabeledGraph parse_edge_list(const std::filesystem::path& path, WeightKind kind);

/// Writes symmetric pairs as one directed=false row, everything else as
/// directed=true rows. parse_edge_list of the output reproduces the graph.
void write_edge_list(std::ostream& out, const WeightedDigraph& g,
                     const std::vector<std::string>& names = {});

/// Shortest decimal that round-trips; `inf` for infinity.
std::string format_number(double value);

/// Flat `key = value` experiment config. Keys: sizes, trials, noise
/// (type1|type2), p, delta, measures, thresholds, top_k, seed, jobs.
/// Lists are comma separated. Unknown keys are a parse_error. `default_seed`
/// applies when the file has no seed key.
ExperimentConfig parse_config(std::istream& in, std::uint64_t default_seed = 1);
ExperimentConfig parse_config(const std::filesystem::path& path, std::uint64_t default_seed = 1);

std::vector<std::string> split(const std::string& text, char sep);
std::string trim(const std::string& text);

std::vector<std::size_t> parse_size_list(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);
std::vector<Measure> parse_measure_list(const std::string& text);

}  // namespace centra::io
