#include "centra/graph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace centra {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::self_loop: return "SelfLoop";
    case Errc::non_positive_weight: return "NonPositiveWeight";
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::node_out_of_range: return "NodeOutOfRange";
    case Errc::topology_mismatch: return "TopologyMismatch";
    case Errc::weight_out_of_range: return "WeightOutOfRange";
    case Errc::wrong_weight_kind: return "WrongWeightKind";
    case Errc::negative_difference: return "NegativeDifference";
    case Errc::count_overflow: return "CountOverflow";
    case Errc::not_symmetric: return "NotSymmetric";
    case Errc::not_connected: return "NotConnected";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::size_too_small: return "SizeTooSmall";
    case Errc::universe_mismatch: return "UniverseMismatch";
    case Errc::zero_distance: return "ZeroDistance";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

WeightKind flipped(WeightKind kind) {
  return kind == WeightKind::similarity ? WeightKind::dissimilarity : WeightKind::similarity;
}

namespace {

std::string edge_text(NodeId src, NodeId dst) {
  std::ostringstream os;
  os << "(" << src << "," << dst << ")";
  return os.str();
}

bool edge_less(const Edge& a, const Edge& b) {
  return a.src != b.src ? a.src < b.src : a.dst < b.dst;
}

}  // namespace

WeightedDigraph::WeightedDigraph(std::size_t n, std::vector<Edge> edges, WeightKind kind)
    : n_(n), kind_(kind), edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (e.src >= n_ || e.dst >= n_) {
      throw Error(Errc::node_out_of_range, "edge " + edge_text(e.src, e.dst) +
                                               " references a node outside 0.." +
                                               std::to_string(n_ == 0 ? 0 : n_ - 1));
    }
    if (e.src == e.dst) {
      throw Error(Errc::self_loop, "self-loop on node " + std::to_string(e.src));
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw Error(Errc::non_positive_weight,
                  "edge " + edge_text(e.src, e.dst) + " has non-positive or non-finite weight");
    }
  }
  std::sort(edges_.begin(), edges_.end(), edge_less);
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].src == edges_[i - 1].src && edges_[i].dst == edges_[i - 1].dst) {
      throw Error(Errc::duplicate_edge, "duplicate edge " + edge_text(edges_[i].src, edges_[i].dst));
    }
  }
  index();
}

void WeightedDigraph::index() {
  out_offsets_.assign(n_ + 1, 0);
  in_offsets_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++out_offsets_[e.src + 1];
    ++in_offsets_[e.dst + 1];
  }
  for (std::size_t i = 0; i < n_; ++i) {
    out_offsets_[i + 1] += out_offsets_[i];
    in_offsets_[i + 1] += in_offsets_[i];
  }
  // edges_ is sorted by src, so filling in edge order leaves each bucket sorted by src
  in_index_.assign(edges_.size(), 0);
  std::vector<std::size_t> cursor(in_offsets_.begin(), in_offsets_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    in_index_[cursor[edges_[i].dst]++] = i;
  }
  symmetric_ = std::all_of(edges_.begin(), edges_.end(), [this](const Edge& e) {
    auto w = weight(e.dst, e.src);
    return w && *w == e.weight;
  });
}

std::span<const Edge> WeightedDigraph::out_edges(NodeId x) const {
  if (x >= n_) throw Error(Errc::node_out_of_range, "node " + std::to_string(x) + " out of range");
  return std::span<const Edge>(edges_).subspan(out_offsets_[x], out_offsets_[x + 1] - out_offsets_[x]);
}

std::span<const std::size_t> WeightedDigraph::in_edge_indices(NodeId x) const {
  if (x >= n_) throw Error(Errc::node_out_of_range, "node " + std::to_string(x) + " out of range");
  return std::span<const std::size_t>(in_index_).subspan(in_offsets_[x],
                                                         in_offsets_[x + 1] - in_offsets_[x]);
}

std::optional<double> WeightedDigraph::weight(NodeId src, NodeId dst) const {
  if (src >= n_ || dst >= n_) return std::nullopt;
  auto out = out_edges(src);
  auto it = std::lower_bound(out.begin(), out.end(), dst,
                             [](const Edge& e, NodeId d) { return e.dst < d; });
  if (it == out.end() || it->dst != dst) return std::nullopt;
  return it->weight;
}

bool WeightedDigraph::same_topology(const WeightedDigraph& other) const {
  if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].src != other.edges_[i].src || edges_[i].dst != other.edges_[i].dst) return false;
  }
  return true;
}

WeightedDigraph WeightedDigraph::with_weights(std::span<const double> weights) const {
  return with_weights(weights, kind_);
}

WeightedDigraph WeightedDigraph::with_weights(std::span<const double> weights,
                                              WeightKind kind) const {
  if (weights.size() != edges_.size()) {
    throw Error(Errc::invalid_argument, "weight vector does not match edge count");
  }
  WeightedDigraph out;
  out.n_ = n_;
  out.kind_ = kind;
  out.edges_ = edges_;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    double w = weights[i];
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw Error(Errc::non_positive_weight,
                  "edge " + edge_text(edges_[i].src, edges_[i].dst) + " would get a non-positive weight");
    }
    out.edges_[i].weight = w;
  }
  out.index();
  return out;
}

bool operator==(const WeightedDigraph& a, const WeightedDigraph& b) {
  if (a.kind_ != b.kind_ || !a.same_topology(b)) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    if (a.edges_[i].weight != b.edges_[i].weight) return false;
  }
  return true;
}

WeightedDigraph build_undirected(std::size_t n, std::span<const Edge> undirected_edges,
                                 WeightKind kind) {
  std::vector<Edge> edges;
  edges.reserve(2 * undirected_edges.size());
  for (const Edge& e : undirected_edges) {
    edges.push_back(e);
    edges.push_back({e.dst, e.src, e.weight});
  }
  return WeightedDigraph(n, std::move(edges), kind);
}

GraphPair::GraphPair(WeightedDigraph g, WeightedDigraph h) : g_(std::move(g)), h_(std::move(h)) {
  if (!g_.same_topology(h_)) {
    throw Error(Errc::topology_mismatch, "graphs do not share node and edge sets");
  }
}

double graph_distance(const GraphPair& pair) {
  auto a = pair.g().edges();
  auto b = pair.h().edges();
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::abs(a[i].weight - b[i].weight);
  return total;
}

double graph_distance(const WeightedDigraph& g, const WeightedDigraph& h) {
  return graph_distance(GraphPair(g, h));
}

WeightedDigraph convert_weights(const WeightedDigraph& g, WeightRule rule) {
  std::vector<double> weights;
  weights.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    if (rule == WeightRule::affine_two_minus) {
      if (e.weight >= 2.0) {
        throw Error(Errc::weight_out_of_range,
                    "affine 2-w conversion needs weights below 2, edge " + edge_text(e.src, e.dst) +
                        " has " + std::to_string(e.weight));
      }
      weights.push_back(2.0 - e.weight);
    } else {
      weights.push_back(1.0 / e.weight);
    }
  }
  return g.with_weights(weights, flipped(g.weight_kind()));
}

ReducedGraph remove_node(const WeightedDigraph& g, NodeId x) {
  const std::size_t n = g.node_count();
  if (x >= n) throw Error(Errc::node_out_of_range, "node " + std::to_string(x) + " out of range");
  std::vector<std::optional<NodeId>> old_to_new(n);
  std::vector<NodeId> new_to_old;
  new_to_old.reserve(n - 1);
  for (NodeId v = 0; v < n; ++v) {
    if (v == x) continue;
    old_to_new[v] = new_to_old.size();
    new_to_old.push_back(v);
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    if (e.src == x || e.dst == x) continue;
    edges.push_back({*old_to_new[e.src], *old_to_new[e.dst], e.weight});
  }
  return ReducedGraph{WeightedDigraph(n - 1, std::move(edges), g.weight_kind()),
                      std::move(old_to_new), std::move(new_to_old)};
}

Eigen::MatrixXd adjacency_matrix(const WeightedDigraph& g) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    a(static_cast<Eigen::Index>(e.src), static_cast<Eigen::Index>(e.dst)) = e.weight;
  }
  return a;
}

namespace {

std::size_t reach_count(const WeightedDigraph& g, NodeId start, bool forward, bool backward) {
  std::vector<char> seen(g.node_count(), 0);
  std::vector<NodeId> stack{start};
  seen[start] = 1;
  std::size_t count = 1;
  auto visit = [&](NodeId v) {
    if (!seen[v]) {
      seen[v] = 1;
      ++count;
      stack.push_back(v);
    }
  };
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    if (forward) {
      for (const Edge& e : g.out_edges(u)) visit(e.dst);
    }
    if (backward) {
      for (std::size_t i : g.in_edge_indices(u)) visit(g.edges()[i].src);
    }
  }
  return count;
}

}  // namespace

bool is_connected(const WeightedDigraph& g) {
  if (g.node_count() <= 1) return true;
  return reach_count(g, 0, true, true) == g.node_count();
}

bool is_strongly_connected(const WeightedDigraph& g) {
  if (g.node_count() <= 1) return true;
  return reach_count(g, 0, true, false) == g.node_count() &&
         reach_count(g, 0, false, true) == g.node_count();
}

}  // namespace centra
