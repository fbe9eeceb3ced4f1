#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "centra/centrality.hpp"
#include "support/fixtures.hpp"
#include "support/path_oracle.hpp"

using namespace centra;
using namespace centra::fixtures;

namespace {

bool rel_eq(double a, double b, double tol = 1e-9) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

TEST_CASE("measure names") {
  for (auto m : {Measure::degree, Measure::closeness_decentrality, Measure::betweenness,
                 Measure::eigenvector, Measure::stable_betweenness, Measure::degree_squared,
                 Measure::floor_degree}) {
    CHECK(parse_measure(to_string(m)) == m);
  }
  CHECK(parse_measure("SB") == Measure::stable_betweenness);
  CHECK_FALSE(parse_measure("nope").has_value());
  CHECK(orientation_of(Measure::closeness_decentrality) == Orientation::lower_is_central);
  CHECK(input_kind(Measure::eigenvector) == WeightKind::similarity);
  CHECK(input_kind(Measure::betweenness) == WeightKind::dissimilarity);
}

TEST_CASE("degree") {
  WeightedDigraph iso(3, {{0, 1, 1.0}, {1, 0, 1.0}}, WeightKind::similarity);
  CHECK(degree(iso).values[2] == 0.0);

  auto g = detour_graph(0.01, WeightKind::similarity);
  CHECK(degree(g).values[x3] == doctest::Approx(4.01).epsilon(1e-12));

  WeightedDigraph one(2, {{0, 1, 2.0}}, WeightKind::similarity);
  CHECK(degree(one, DegreeMode::out).values[0] == 2.0);
  CHECK(degree(one, DegreeMode::in).values[0] == 0.0);
  CHECK(degree(one, DegreeMode::in).values[1] == 2.0);
}

TEST_CASE("closeness decentrality") {
  auto pair = closeness_decentrality(two_node(0.7, WeightKind::dissimilarity));
  CHECK(pair.values[0] == 0.7);
  CHECK(pair.values[1] == 0.7);

  auto path = closeness_decentrality(path_graph(3));
  CHECK(path.values == std::vector<double>{3.0, 2.0, 3.0});

  CHECK(closeness_decentrality(tie_graph_g()).values[x1] == 12.0);

  WeightedDigraph split(3, {{0, 1, 1.0}, {1, 0, 1.0}}, WeightKind::dissimilarity);
  CHECK(std::isinf(closeness_decentrality(split).values[0]));

  auto c = closeness(path_graph(3));
  CHECK(c.values[1] == 0.5);
  CHECK_THROWS_AS(closeness(split), Error);
}

TEST_CASE("betweenness on the two-route graphs") {
  CHECK(betweenness(tie_graph_g()).values[x1] == 9.0);
  CHECK(betweenness(tie_graph_g()).values[x2] == 9.0);
  CHECK(betweenness(tie_graph_h(0.01)).values[x1] == 0.0);
  CHECK(betweenness(detour_graph(0.01)).values[x1] == 18.0);
  CHECK(betweenness(detour_graph(100.0)).values[x1] == 18.0);
}

TEST_CASE("stable betweenness on the detour graph") {
  CHECK(rel_eq(stable_betweenness(detour_graph(0.01)).values[x1], 0.36));
  CHECK(rel_eq(stable_betweenness(detour_graph(100.0)).values[x1], 3600.0));
}

TEST_CASE("stable betweenness of leaves and cut vertices") {
  // Triangle 0-1-2 with leaf 3 on node 2.
  std::vector<Edge> e{{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}, {2, 3, 1.0}};
  auto g = build_undirected(4, e, WeightKind::dissimilarity);
  auto sb = stable_betweenness(g);
  CHECK(sb.values[3] == 0.0);
  CHECK(std::isinf(sb.values[2]));
  CHECK(sb.values[0] == 0.0);
}

TEST_CASE("path measures match exhaustive enumeration") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto g = random_small_graph(6, 0.45, seed % 2 == 0, seed % 3 != 0, seed + 7000);
    auto b = betweenness(g);
    auto c = closeness_decentrality(g);
    auto sb = stable_betweenness(g);
    for (NodeId x = 0; x < g.node_count(); ++x) {
      CHECK(rel_eq(b.values[x], oracle::betweenness(g, x)));
      CHECK(rel_eq(c.values[x], oracle::closeness_decentrality(g, x)));
      CHECK(rel_eq(sb.values[x], oracle::stable_betweenness(g, x)));
      CHECK(sb.values[x] >= 0.0);
    }
  }
}

TEST_CASE("eigenvector centrality") {
  auto pair = dominant_eigenvector(two_node(2.5));
  CHECK(pair.centrality.values[0] == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-10));
  CHECK(pair.centrality.values[1] == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-10));
  CHECK(pair.eigenvalue == doctest::Approx(2.5).epsilon(1e-10));

  auto tri = eigenvector_centrality(complete_graph(3, 1.0, WeightKind::similarity));
  for (double v : tri.values) CHECK(v == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-10));

  for (std::size_t k : {2u, 5u, 9u}) {
    auto star = star_graph(k);
    auto ev = eigenvector_centrality(star);
    CHECK(ev.values[0] == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-10));
    for (NodeId i = 1; i <= k; ++i) {
      CHECK(ev.values[i] == doctest::Approx(1 / std::sqrt(2.0 * k)).epsilon(1e-10));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> dense(adjacency_matrix(star));
    Eigen::VectorXd top = dense.eigenvectors().col(star.node_count() - 1).cwiseAbs();
    for (NodeId i = 0; i <= k; ++i) CHECK(ev.values[i] == doctest::Approx(top(i)).epsilon(1e-9));
  }
}

TEST_CASE("eigenvector centrality agrees with dense decomposition") {
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 20; ++seed) {
    auto g = random_small_graph(9, 0.5, true, false, seed + 300, WeightKind::similarity);
    if (!is_connected(g)) continue;
    ++checked;
    auto ev = dominant_eigenvector(g);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> dense(adjacency_matrix(g));
    Eigen::VectorXd top = dense.eigenvectors().col(g.node_count() - 1).cwiseAbs();
    CHECK(ev.eigenvalue == doctest::Approx(dense.eigenvalues()(g.node_count() - 1)).epsilon(1e-9));
    for (NodeId i = 0; i < g.node_count(); ++i) {
      CHECK(ev.centrality.values[i] == doctest::Approx(top(i)).epsilon(1e-8));
      CHECK(ev.centrality.values[i] > 0.0);
    }
    auto spectrum = adjacency_spectrum(g);
    CHECK(spectral_gap(g) == doctest::Approx(spectrum.back() - spectrum[spectrum.size() - 2]));
  }
}

TEST_CASE("eigenvector centrality on bipartite graphs") {
  // A path has eigenvalues symmetric around 0; plain power iteration would oscillate.
  auto ev = dominant_eigenvector(path_graph(4, 1.0, WeightKind::similarity));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> dense(
      adjacency_matrix(path_graph(4, 1.0, WeightKind::similarity)));
  CHECK(ev.eigenvalue == doctest::Approx(dense.eigenvalues()(3)).epsilon(1e-10));
}

TEST_CASE("degree squared") {
  CHECK(degree_squared(two_node(1.0)).values[0] == 1.0);
  CHECK(degree_squared(two_node(1.5)).values[0] == 2.25);
  WeightedDigraph iso(3, {{0, 1, 1.0}, {1, 0, 1.0}}, WeightKind::similarity);
  CHECK(degree_squared(iso).values[2] == 0.0);
}

TEST_CASE("floor degree") {
  auto sub = star_graph(4, 0.8);
  for (double v : floor_degree(sub).values) CHECK(v == 0.0);
  CHECK(floor_degree(two_node(1.999)).values[0] == 1.0);
  std::vector<Edge> e{{0, 1, 0.7}, {0, 2, 1.2}, {0, 3, 1.2}};
  CHECK(floor_degree(build_undirected(4, e, WeightKind::similarity)).values[0] == 2.0);
}

TEST_CASE("compute dispatches every measure") {
  auto sim = tie_graph_g(WeightKind::similarity);
  auto dis = tie_graph_g();
  CHECK(compute(Measure::degree, sim).values[x3] == 4.0);
  CHECK(compute(Measure::betweenness, dis).values[x1] == 9.0);
  CHECK(compute(Measure::closeness_decentrality, dis).values[x1] == 12.0);
  CHECK(compute(Measure::stable_betweenness, dis).measure == Measure::stable_betweenness);
  CHECK(compute(Measure::eigenvector, sim).orientation == Orientation::higher_is_central);
}
