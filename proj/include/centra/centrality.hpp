#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "centra/graph.hpp"
#include "centra/shortest_paths.hpp"

namespace centra {

enum class Measure {
  degree,
  out_degree,
  in_degree,
  closeness_decentrality,
  closeness,
  betweenness,
  eigenvector,
  stable_betweenness,
  degree_squared,
  floor_degree,
};

enum class Orientation { higher_is_central, lower_is_central };

std::string_view to_string(Measure m);
/// Accepts the names produced by to_string plus the short aliases used on the
/// command line (D, C, B, E, SB, DS, FD, OD, ID).
std::optional<Measure> parse_measure(std::string_view name);

Orientation orientation_of(Measure m);
/// Degree-type and eigenvector measures read similarity weights; the
/// path-based ones read dissimilarities.
WeightKind input_kind(Measure m);

/// Per-node scores of one measure. Closeness decentrality and stable
/// betweenness may contain +infinity on disconnected inputs.
struct CentralityVector {
  Measure measure;
  std::vector<double> values;
  Orientation orientation;
};

enum class DegreeMode { undirected, out, in };

/// Sum of incident edge weights. Undirected mode requires a symmetric graph.
CentralityVector degree(const WeightedDigraph& g, DegreeMode mode = DegreeMode::undirected);

/// Sum of squared outgoing edge weights.
CentralityVector degree_squared(const WeightedDigraph& g);

/// Sum of floor(w) over outgoing edges.
CentralityVector floor_degree(const WeightedDigraph& g);

/// Sum of shortest path lengths to every node; +infinity if any node is
/// unreachable. Lower is more central.
CentralityVector closeness_decentrality(const WeightedDigraph& g);

/// Reciprocal of closeness decentrality. Requires a strongly connected graph.
CentralityVector closeness(const WeightedDigraph& g);

/// Unnormalized betweenness over ordered pairs (s, t) with s != x != t:
/// sum of sigma_st(x) / sigma_st, disconnected pairs contributing 0.
CentralityVector betweenness(const WeightedDigraph& g, double tie_tol = kDefaultTieTolerance);

/// Total increase of shortest path lengths between ordered pairs of other
/// nodes when x is deleted. Cut vertices score +infinity (inf - finite);
/// pairs already disconnected contribute 0 (inf - inf = 0).
CentralityVector stable_betweenness(const WeightedDigraph& g);

struct PowerIterationOptions {
  double tol = 1e-12;
  std::size_t max_iter = 100000;
};

struct EigenvectorResult {
  CentralityVector centrality;
  double eigenvalue;
  std::size_t iterations;
};

/// Dominant eigenvector of the adjacency matrix by power iteration, unit
/// Euclidean norm, all entries positive. Needs a connected symmetric graph
/// with similarity weights.
EigenvectorResult dominant_eigenvector(const WeightedDigraph& g, PowerIterationOptions opts = {});

CentralityVector eigenvector_centrality(const WeightedDigraph& g, PowerIterationOptions opts = {});

/// Eigenvalues of the (symmetric) adjacency matrix, ascending, from a dense
/// self-adjoint decomposition.
std::vector<double> adjacency_spectrum(const WeightedDigraph& g);

/// lambda_n - lambda_{n-1} of the adjacency matrix.
double spectral_gap(const WeightedDigraph& g);

/// Runs `m` with default parameters.
CentralityVector compute(Measure m, const WeightedDigraph& g);

}  // namespace centra
