#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "centra/error.hpp"

namespace centra {

using NodeId = std::size_t;

enum class WeightKind { similarity, dissimilarity };

WeightKind flipped(WeightKind kind);

struct Edge {
  NodeId src;
  NodeId dst;
  double weight;
};

/**
 * Immutable directed graph with strictly positive edge weights and no
 * self-loops. Nodes are 0..n-1. Edges are kept sorted by (src, dst) so every
 * traversal and every downstream result is independent of insertion order.
 *
 * Undirected graphs are represented as symmetric directed edge sets with equal
 * weights in both directions.
 */
class WeightedDigraph {
 public:
  /// Validates and builds. Throws Error with self_loop, non_positive_weight,
  /// duplicate_edge or node_out_of_range.
  WeightedDigraph(std::size_t n, std::vector<Edge> edges, WeightKind kind);

  std::size_t node_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  WeightKind weight_kind() const noexcept { return kind_; }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Edge> out_edges(NodeId x) const;
  /// Indices into edges() of the edges entering x, ordered by source.
  std::span<const std::size_t> in_edge_indices(NodeId x) const;

  std::optional<double> weight(NodeId src, NodeId dst) const;
  bool has_edge(NodeId src, NodeId dst) const { return weight(src, dst).has_value(); }

  /// Every edge has a reverse edge of identical weight.
  bool symmetric() const noexcept { return symmetric_; }

  /// Same node count and same edge set, weights ignored.
  bool same_topology(const WeightedDigraph& other) const;

  /// Copy with new weights, aligned with edges(). Topology and kind unchanged.
  WeightedDigraph with_weights(std::span<const double> weights) const;
  WeightedDigraph with_weights(std::span<const double> weights, WeightKind kind) const;

  friend bool operator==(const WeightedDigraph& a, const WeightedDigraph& b);

 private:
  WeightedDigraph() = default;
  void index();

  std::size_t n_ = 0;
  WeightKind kind_ = WeightKind::dissimilarity;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<std::size_t> in_index_;
  bool symmetric_ = true;
};

/// Convenience for the common undirected case: each (a, b, w) becomes the
/// pair (a, b, w), (b, a, w).
WeightedDigraph build_undirected(std::size_t n, std::span<const Edge> undirected_edges,
                                 WeightKind kind);

/// Two graphs over the same node and edge sets, differing only in weights.
class GraphPair {
 public:
  /// Throws Error(topology_mismatch) if the edge sets differ.
  GraphPair(WeightedDigraph g, WeightedDigraph h);

  const WeightedDigraph& g() const noexcept { return g_; }
  const WeightedDigraph& h() const noexcept { return h_; }

 private:
  WeightedDigraph g_;
  WeightedDigraph h_;
};

/// l1 distance between the weight assignments, summed over directed edges.
double graph_distance(const GraphPair& pair);
double graph_distance(const WeightedDigraph& g, const WeightedDigraph& h);

enum class WeightRule { affine_two_minus, reciprocal };

/// w -> 2 - w or w -> 1 / w; flips the weight kind.
WeightedDigraph convert_weights(const WeightedDigraph& g, WeightRule rule);

struct ReducedGraph {
  WeightedDigraph graph;
  /// old id -> new id, empty for the removed node.
  std::vector<std::optional<NodeId>> old_to_new;
  std::vector<NodeId> new_to_old;
};

/// Deletes x and every edge to or from it. Surviving nodes keep their
/// relative order.
ReducedGraph remove_node(const WeightedDigraph& g, NodeId x);

Eigen::MatrixXd adjacency_matrix(const WeightedDigraph& g);

/// Weak connectivity (edge directions ignored).
bool is_connected(const WeightedDigraph& g);
bool is_strongly_connected(const WeightedDigraph& g);

}  // namespace centra
