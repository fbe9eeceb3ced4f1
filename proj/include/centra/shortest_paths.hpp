#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "centra/graph.hpp"

namespace centra {

/// Nonnegative path length that may be +infinity (no path).
class ExtendedLength {
 public:
  constexpr ExtendedLength() = default;
  constexpr explicit ExtendedLength(double value) : value_(value) {}

  static constexpr ExtendedLength infinity() {
    return ExtendedLength(std::numeric_limits<double>::infinity());
  }

  constexpr bool is_finite() const { return value_ != std::numeric_limits<double>::infinity(); }
  constexpr double value() const { return value_; }

  friend constexpr auto operator<=>(ExtendedLength, ExtendedLength) = default;

 private:
  double value_ = 0.0;
};

/// a - b with the convention inf - inf = 0. inf - finite yields +infinity.
/// Throws Error(negative_difference) when both are finite and a < b.
double extended_subtract(ExtendedLength a, ExtendedLength b);

/// |a - b| under the same convention; used to compare centrality values that
/// may be infinite.
double extended_abs_diff(double a, double b);

inline constexpr double kDefaultTieTolerance = 1e-9;

/// Two path lengths are equal when |a - b| <= tol * max(a, b).
bool lengths_tie(double a, double b, double tol = kDefaultTieTolerance);

struct SsspResult {
  NodeId source = 0;
  std::vector<ExtendedLength> dist;
  /// Number of distinct shortest paths; sigma[source] = 1, 0 when unreachable.
  std::vector<std::uint64_t> sigma;
};

/// Dijkstra with shortest-path counting. Requires dissimilarity weights.
SsspResult sssp_with_counts(const WeightedDigraph& g, NodeId source,
                            double tie_tol = kDefaultTieTolerance);

class ApspResult {
 public:
  explicit ApspResult(std::size_t n)
      : n_(n), dist_(n * n, ExtendedLength::infinity()) {}

  std::size_t node_count() const noexcept { return n_; }
  ExtendedLength at(NodeId i, NodeId j) const { return dist_[i * n_ + j]; }
  void set(NodeId i, NodeId j, ExtendedLength d) { dist_[i * n_ + j] = d; }

 private:
  std::size_t n_;
  std::vector<ExtendedLength> dist_;
};

/// One Dijkstra run per source. Requires dissimilarity weights.
ApspResult apsp(const WeightedDigraph& g);

/// All-pairs lengths in g with node `excluded` (and its edges) deleted,
/// indexed by the ORIGINAL node ids. Row and column `excluded` are infinite
/// except the diagonal. Equivalent to apsp(remove_node(g, excluded).graph)
/// mapped back through the id map, without materializing the reduced graph.
ApspResult apsp_excluding(const WeightedDigraph& g, NodeId excluded);

}  // namespace centra
