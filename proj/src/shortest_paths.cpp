#include "centra/shortest_paths.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <utility>

namespace centra {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

void require_dissimilarity(const WeightedDigraph& g) {
  if (g.weight_kind() != WeightKind::dissimilarity) {
    throw Error(Errc::wrong_weight_kind, "shortest paths need dissimilarity weights");
  }
}

void require_node(const WeightedDigraph& g, NodeId x) {
  if (x >= g.node_count()) {
    throw Error(Errc::node_out_of_range, "node " + std::to_string(x) + " out of range");
  }
}

// Reusable Dijkstra state; one instance per thread.
template <bool kCount>
class Dijkstra {
 public:
  explicit Dijkstra(std::size_t n) : dist_(n), sigma_(kCount ? n : 0), settled_(n) {}

  void run(const WeightedDigraph& g, NodeId source, NodeId excluded, double tie_tol) {
    std::fill(dist_.begin(), dist_.end(), kInf);
    std::fill(settled_.begin(), settled_.end(), 0);
    if constexpr (kCount) std::fill(sigma_.begin(), sigma_.end(), 0);
    dist_[source] = 0.0;
    if constexpr (kCount) sigma_[source] = 1;
    if (source == excluded) return;

    using Item = std::pair<double, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    queue.emplace(0.0, source);
    while (!queue.empty()) {
      auto [d, u] = queue.top();
      queue.pop();
      if (settled_[u] || d > dist_[u]) continue;
      settled_[u] = 1;
      for (const Edge& e : g.out_edges(u)) {
        NodeId v = e.dst;
        if (v == excluded || settled_[v]) continue;
        double nd = dist_[u] + e.weight;
        if constexpr (kCount) {
          if (dist_[v] != kInf && lengths_tie(nd, dist_[v], tie_tol)) {
            std::uint64_t sum;
            if (__builtin_add_overflow(sigma_[v], sigma_[u], &sum)) {
              throw Error(Errc::count_overflow, "shortest path count overflows 64 bits");
            }
            sigma_[v] = sum;
            if (nd < dist_[v]) {
              dist_[v] = nd;
              queue.emplace(nd, v);
            }
            continue;
          }
        }
        if (nd < dist_[v]) {
          dist_[v] = nd;
          if constexpr (kCount) sigma_[v] = sigma_[u];
          queue.emplace(nd, v);
        }
      }
    }
  }

  const std::vector<double>& dist() const { return dist_; }
  const std::vector<std::uint64_t>& sigma() const { return sigma_; }

 private:
  std::vector<double> dist_;
  std::vector<std::uint64_t> sigma_;
  std::vector<char> settled_;
};

}  // namespace

double extended_subtract(ExtendedLength a, ExtendedLength b) {
  if (!a.is_finite() && !b.is_finite()) return 0.0;
  if (!a.is_finite()) return kInf;
  if (!b.is_finite() || a.value() < b.value()) {
    throw Error(Errc::negative_difference, "extended subtraction would be negative");
  }
  return a.value() - b.value();
}

double extended_abs_diff(double a, double b) {
  if (std::isinf(a) && std::isinf(b)) return 0.0;
  return std::abs(a - b);
}

bool lengths_tie(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(a, b);
}

SsspResult sssp_with_counts(const WeightedDigraph& g, NodeId source, double tie_tol) {
  require_dissimilarity(g);
  require_node(g, source);
  Dijkstra<true> dijkstra(g.node_count());
  dijkstra.run(g, source, kNoNode, tie_tol);
  SsspResult result;
  result.source = source;
  result.dist.reserve(g.node_count());
  for (double d : dijkstra.dist()) result.dist.emplace_back(d);
  result.sigma = dijkstra.sigma();
  return result;
}

ApspResult apsp(const WeightedDigraph& g) {
  require_dissimilarity(g);
  const std::size_t n = g.node_count();
  ApspResult result(n);
  Dijkstra<false> dijkstra(n);
  for (NodeId s = 0; s < n; ++s) {
    dijkstra.run(g, s, kNoNode, 0.0);
    for (NodeId t = 0; t < n; ++t) result.set(s, t, ExtendedLength(dijkstra.dist()[t]));
  }
  return result;
}

ApspResult apsp_excluding(const WeightedDigraph& g, NodeId excluded) {
  require_dissimilarity(g);
  require_node(g, excluded);
  const std::size_t n = g.node_count();
  ApspResult result(n);
  Dijkstra<false> dijkstra(n);
  for (NodeId s = 0; s < n; ++s) {
    if (s == excluded) {
      result.set(s, s, ExtendedLength(0.0));
      continue;
    }
    dijkstra.run(g, s, excluded, 0.0);
    for (NodeId t = 0; t < n; ++t) result.set(s, t, ExtendedLength(dijkstra.dist()[t]));
  }
  return result;
}

}  // namespace centra
