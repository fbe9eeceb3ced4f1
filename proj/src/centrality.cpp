#include "centra/centrality.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include <Eigen/Eigenvalues>

namespace centra {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct MeasureName {
  Measure measure;
  std::string_view name;
  std::string_view alias;
};

constexpr std::array<MeasureName, 10> kMeasureNames{{
    {Measure::degree, "degree", "D"},
    {Measure::out_degree, "out_degree", "OD"},
    {Measure::in_degree, "in_degree", "ID"},
    {Measure::closeness_decentrality, "closeness_decentrality", "C"},
    {Measure::closeness, "closeness", "CC"},
    {Measure::betweenness, "betweenness", "B"},
    {Measure::eigenvector, "eigenvector", "E"},
    {Measure::stable_betweenness, "stable_betweenness", "SB"},
    {Measure::degree_squared, "degree_squared", "DS"},
    {Measure::floor_degree, "floor_degree", "FD"},
}};

void require_kind(const WeightedDigraph& g, WeightKind kind, std::string_view what) {
  if (g.weight_kind() != kind) {
    throw Error(Errc::wrong_weight_kind,
                std::string(what) + " needs " +
                    (kind == WeightKind::similarity ? "similarity" : "dissimilarity") + " weights");
  }
}

template <class F>
CentralityVector sum_outgoing(const WeightedDigraph& g, Measure m, F term) {
  std::vector<double> values(g.node_count(), 0.0);
  for (const Edge& e : g.edges()) values[e.src] += term(e.weight);
  return {m, std::move(values), Orientation::higher_is_central};
}

}  // namespace

std::string_view to_string(Measure m) {
  for (const auto& entry : kMeasureNames) {
    if (entry.measure == m) return entry.name;
  }
  return "unknown";
}

std::optional<Measure> parse_measure(std::string_view name) {
  for (const auto& entry : kMeasureNames) {
    if (entry.name == name || entry.alias == name) return entry.measure;
  }
  return std::nullopt;
}

Orientation orientation_of(Measure m) {
  return m == Measure::closeness_decentrality ? Orientation::lower_is_central
                                              : Orientation::higher_is_central;
}

WeightKind input_kind(Measure m) {
  switch (m) {
    case Measure::closeness_decentrality:
    case Measure::closeness:
    case Measure::betweenness:
    case Measure::stable_betweenness:
      return WeightKind::dissimilarity;
    default:
      return WeightKind::similarity;
  }
}

CentralityVector degree(const WeightedDigraph& g, DegreeMode mode) {
  require_kind(g, WeightKind::similarity, "degree centrality");
  switch (mode) {
    case DegreeMode::undirected:
      if (!g.symmetric()) {
        throw Error(Errc::not_symmetric, "undirected degree needs a symmetric graph");
      }
      return sum_outgoing(g, Measure::degree, [](double w) { return w; });
    case DegreeMode::out:
      return sum_outgoing(g, Measure::out_degree, [](double w) { return w; });
    case DegreeMode::in: {
      std::vector<double> values(g.node_count(), 0.0);
      for (const Edge& e : g.edges()) values[e.dst] += e.weight;
      return {Measure::in_degree, std::move(values), Orientation::higher_is_central};
    }
  }
  throw Error(Errc::invalid_argument, "unknown degree mode");
}

CentralityVector degree_squared(const WeightedDigraph& g) {
  require_kind(g, WeightKind::similarity, "degree squared centrality");
  return sum_outgoing(g, Measure::degree_squared, [](double w) { return w * w; });
}

CentralityVector floor_degree(const WeightedDigraph& g) {
  require_kind(g, WeightKind::similarity, "floor degree centrality");
  return sum_outgoing(g, Measure::floor_degree, [](double w) { return std::floor(w); });
}

CentralityVector closeness_decentrality(const WeightedDigraph& g) {
  require_kind(g, WeightKind::dissimilarity, "closeness decentrality");
  const std::size_t n = g.node_count();
  ApspResult dist = apsp(g);
  std::vector<double> values(n, 0.0);
  for (NodeId x = 0; x < n; ++x) {
    double total = 0.0;
    for (NodeId t = 0; t < n; ++t) total += dist.at(x, t).value();
    values[x] = total;
  }
  return {Measure::closeness_decentrality, std::move(values), Orientation::lower_is_central};
}

CentralityVector closeness(const WeightedDigraph& g) {
  CentralityVector decentrality = closeness_decentrality(g);
  if (!is_strongly_connected(g)) {
    throw Error(Errc::not_connected, "closeness needs a strongly connected graph");
  }
  std::vector<double> values;
  values.reserve(decentrality.values.size());
  for (double v : decentrality.values) values.push_back(v > 0.0 ? 1.0 / v : 0.0);
  return {Measure::closeness, std::move(values), Orientation::higher_is_central};
}

CentralityVector betweenness(const WeightedDigraph& g, double tie_tol) {
  require_kind(g, WeightKind::dissimilarity, "betweenness");
  const std::size_t n = g.node_count();
  std::vector<SsspResult> runs;
  runs.reserve(n);
  for (NodeId s = 0; s < n; ++s) runs.push_back(sssp_with_counts(g, s, tie_tol));

  std::vector<double> values(n, 0.0);
  for (NodeId x = 0; x < n; ++x) {
    const SsspResult& from_x = runs[x];
    double total = 0.0;
    for (NodeId s = 0; s < n; ++s) {
      if (s == x) continue;
      const SsspResult& from_s = runs[s];
      ExtendedLength to_x = from_s.dist[x];
      if (!to_x.is_finite()) continue;
      auto via_count = static_cast<double>(from_s.sigma[x]);
      for (NodeId t = 0; t < n; ++t) {
        if (t == x || t == s || from_s.sigma[t] == 0) continue;
        ExtendedLength rest = from_x.dist[t];
        if (!rest.is_finite()) continue;
        if (!lengths_tie(to_x.value() + rest.value(), from_s.dist[t].value(), tie_tol)) continue;
        total += via_count * static_cast<double>(from_x.sigma[t]) /
                 static_cast<double>(from_s.sigma[t]);
      }
    }
    values[x] = total;
  }
  return {Measure::betweenness, std::move(values), Orientation::higher_is_central};
}

CentralityVector stable_betweenness(const WeightedDigraph& g) {
  require_kind(g, WeightKind::dissimilarity, "stable betweenness");
  const std::size_t n = g.node_count();
  ApspResult base = apsp(g);
  std::vector<double> values(n, 0.0);
  for (NodeId x = 0; x < n; ++x) {
    ApspResult without = apsp_excluding(g, x);
    double total = 0.0;
    for (NodeId s = 0; s < n && total != kInf; ++s) {
      if (s == x) continue;
      for (NodeId t = 0; t < n; ++t) {
        if (t == x || t == s) continue;
        total += extended_subtract(without.at(s, t), base.at(s, t));
      }
    }
    values[x] = total;
  }
  return {Measure::stable_betweenness, std::move(values), Orientation::higher_is_central};
}

EigenvectorResult dominant_eigenvector(const WeightedDigraph& g, PowerIterationOptions opts) {
  require_kind(g, WeightKind::similarity, "eigenvector centrality");
  if (!g.symmetric()) {
    throw Error(Errc::not_symmetric, "eigenvector centrality needs a symmetric graph");
  }
  if (!is_connected(g)) {
    throw Error(Errc::not_connected, "eigenvector centrality needs a connected graph");
  }
  const std::size_t n = g.node_count();
  if (n == 0) return {{Measure::eigenvector, {}, Orientation::higher_is_central}, 0.0, 0};
  if (n == 1) return {{Measure::eigenvector, {1.0}, Orientation::higher_is_central}, 0.0, 0};

  // Iterate on A + shift*I. Any positive shift makes the Perron root strictly
  // dominant in magnitude, which plain A lacks on bipartite graphs.
  double max_row = 0.0;
  {
    std::vector<double> rows(n, 0.0);
    for (const Edge& e : g.edges()) rows[e.src] += e.weight;
    max_row = *std::max_element(rows.begin(), rows.end());
  }
  const double shift = 0.5 * max_row;

  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> next(n);
  std::size_t iter = 0;
  bool converged = false;
  while (iter < opts.max_iter) {
    ++iter;
    for (NodeId i = 0; i < n; ++i) next[i] = shift * v[i];
    for (const Edge& e : g.edges()) next[e.src] += e.weight * v[e.dst];
    double norm = 0.0;
    for (double c : next) norm += c * c;
    norm = std::sqrt(norm);
    double change = 0.0;
    for (NodeId i = 0; i < n; ++i) {
      next[i] /= norm;
      change += (next[i] - v[i]) * (next[i] - v[i]);
    }
    std::swap(v, next);
    if (std::sqrt(change) <= opts.tol) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw Error(Errc::no_convergence, "power iteration did not converge in " +
                                          std::to_string(opts.max_iter) + " iterations");
  }
  if (std::accumulate(v.begin(), v.end(), 0.0) < 0.0) {
    for (double& c : v) c = -c;
  }
  double rayleigh = 0.0;
  for (const Edge& e : g.edges()) rayleigh += v[e.src] * e.weight * v[e.dst];
  return {{Measure::eigenvector, std::move(v), Orientation::higher_is_central}, rayleigh, iter};
}

CentralityVector eigenvector_centrality(const WeightedDigraph& g, PowerIterationOptions opts) {
  return dominant_eigenvector(g, opts).centrality;
}

std::vector<double> adjacency_spectrum(const WeightedDigraph& g) {
  if (!g.symmetric()) {
    throw Error(Errc::not_symmetric, "adjacency spectrum needs a symmetric graph");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency_matrix(g),
                                                        Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double spectral_gap(const WeightedDigraph& g) {
  std::vector<double> spectrum = adjacency_spectrum(g);
  if (spectrum.size() < 2) {
    throw Error(Errc::invalid_argument, "spectral gap needs at least two nodes");
  }
  return spectrum[spectrum.size() - 1] - spectrum[spectrum.size() - 2];
}

CentralityVector compute(Measure m, const WeightedDigraph& g) {
  switch (m) {
    case Measure::degree: return degree(g, DegreeMode::undirected);
    case Measure::out_degree: return degree(g, DegreeMode::out);
    case Measure::in_degree: return degree(g, DegreeMode::in);
    case Measure::closeness_decentrality: return closeness_decentrality(g);
    case Measure::closeness: return closeness(g);
    case Measure::betweenness: return betweenness(g);
    case Measure::eigenvector: return eigenvector_centrality(g);
    case Measure::stable_betweenness: return stable_betweenness(g);
    case Measure::degree_squared: return degree_squared(g);
    case Measure::floor_degree: return floor_degree(g);
  }
  throw Error(Errc::invalid_argument, "unknown measure");
}

}  // namespace centra
