#pragma once

// Hand-built graphs shared by the unit and acceptance suites. Node ids follow
// the labels x1..x8 shifted down by one (x1 -> 0, x2 -> 1, ...).

#include <vector>

#include "centra/graph.hpp"
#include "centra/random.hpp"

namespace centra::fixtures {

inline constexpr NodeId x1 = 0, x2 = 1, x3 = 2, x4 = 3, x5 = 4, x6 = 5, x7 = 6, x8 = 7;

/// Two routes of equal length between the hubs x3 and x4: through x1 and
/// through x2. x5, x6 hang off x3; x7, x8 hang off x4. The x1 edges weigh
/// `via_x1` and the x2 edges `via_x2`.
inline WeightedDigraph two_route_graph(double via_x1, double via_x2,
                                       WeightKind kind = WeightKind::dissimilarity) {
  std::vector<Edge> undirected{
      {x1, x3, via_x1}, {x1, x4, via_x1}, {x3, x2, via_x2}, {x4, x2, via_x2},
      {x5, x3, 1.0},    {x6, x3, 1.0},    {x7, x4, 1.0},    {x8, x4, 1.0},
  };
  return build_undirected(8, undirected, kind);
}

/// Betweenness counterexample: G has unit weights, H lengthens both x1 edges
/// by eps.
inline WeightedDigraph tie_graph_g(WeightKind kind = WeightKind::dissimilarity) {
  return two_route_graph(1.0, 1.0, kind);
}
inline WeightedDigraph tie_graph_h(double eps, WeightKind kind = WeightKind::dissimilarity) {
  return two_route_graph(1.0 + eps, 1.0, kind);
}

/// Stable-betweenness example: the x2 route costs 1 + eps (G) or 1 + M (H)
/// per edge.
inline WeightedDigraph detour_graph(double extra, WeightKind kind = WeightKind::dissimilarity) {
  return two_route_graph(1.0, 1.0 + extra, kind);
}

inline WeightedDigraph two_node(double w, WeightKind kind = WeightKind::similarity) {
  std::vector<Edge> e{{0, 1, w}};
  return build_undirected(2, e, kind);
}

inline WeightedDigraph path_graph(std::size_t n, double w = 1.0,
                                  WeightKind kind = WeightKind::dissimilarity) {
  std::vector<Edge> e;
  for (NodeId i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, w});
  return build_undirected(n, e, kind);
}

inline WeightedDigraph star_graph(std::size_t leaves, double w = 1.0,
                                  WeightKind kind = WeightKind::similarity) {
  std::vector<Edge> e;
  for (NodeId i = 1; i <= leaves; ++i) e.push_back({0, i, w});
  return build_undirected(leaves + 1, e, kind);
}

inline WeightedDigraph complete_graph(std::size_t n, double w = 1.0,
                                      WeightKind kind = WeightKind::dissimilarity) {
  std::vector<Edge> e;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) e.push_back({i, j, w});
  }
  return build_undirected(n, e, kind);
}

/// Random small digraph for oracle comparisons. Each ordered pair is an edge
/// with probability `density`; with `symmetric` the pair is mirrored. With
/// `integer_weights` weights come from {1, 2, 3} so equal-length paths (and
/// shortest-path counts above 1) are common.
inline WeightedDigraph random_small_graph(std::size_t n, double density, bool symmetric,
                                          bool integer_weights, std::uint64_t seed,
                                          WeightKind kind = WeightKind::dissimilarity) {
  Rng rng(seed);
  std::vector<Edge> edges;
  auto draw = [&] {
    return integer_weights ? 1.0 + static_cast<double>(static_cast<int>(rng.uniform01() * 3.0))
                           : rng.uniform(0.5, 1.5);
  };
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = symmetric ? i + 1 : 0; j < n; ++j) {
      if (i == j || !rng.bernoulli(density)) continue;
      double w = draw();
      edges.push_back({i, j, w});
      if (symmetric) edges.push_back({j, i, w});
    }
  }
  return WeightedDigraph(n, std::move(edges), kind);
}

}  // namespace centra::fixtures
