#include <doctest.h>

#include <set>

#include "centra/perturbation.hpp"
#include "support/fixtures.hpp"

using namespace centra;
using namespace centra::fixtures;

namespace {

// 100 undirected unit edges on 30 nodes.
WeightedDigraph hundred_edge_graph() {
  std::vector<Edge> e;
  for (NodeId i = 0; i < 30 && e.size() < 100; ++i) {
    for (NodeId j = i + 1; j < 30 && e.size() < 100; j += 3) e.push_back({i, j, 1.0});
  }
  REQUIRE(e.size() == 100);
  return build_undirected(30, e, WeightKind::dissimilarity);
}

}  // namespace

TEST_CASE("zero noise leaves the graph unchanged") {
  auto g = random_small_graph(8, 0.5, false, false, 4);
  CHECK(perturb(g, {0.7, 0.0, 99}) == g);
  CHECK(perturb(g, {0.0, 0.5, 99}) == g);
}

TEST_CASE("type-1 noise bounds") {
  auto g = hundred_edge_graph();
  auto h = perturb(g, NoiseSpec::type1(17));
  CHECK(h.same_topology(g));
  CHECK(h.symmetric());
  for (const Edge& e : h.edges()) {
    CHECK(e.weight >= 0.99);
    CHECK(e.weight <= 1.01);
  }
  CHECK(graph_distance(g, h) <= 2 * 100 * 0.01);
  CHECK(graph_distance(g, h) > 0.0);
}

TEST_CASE("distance bound holds for every spec") {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_small_graph(9, 0.4, trial % 2 == 0, false, 50 + trial);
    NoiseSpec spec{rng.uniform01(), rng.uniform(0.0, 0.9), static_cast<std::uint64_t>(trial)};
    auto h = perturb(g, spec);
    double bound = 0.0;
    for (const Edge& e : g.edges()) bound += spec.delta * e.weight;
    CHECK(graph_distance(g, h) <= bound * (1 + 1e-12));
    for (std::size_t i = 0; i < g.edge_count(); ++i) CHECK(h.edges()[i].weight > 0.0);
  }
}

TEST_CASE("sparse noise touches roughly p of the edges") {
  auto g = hundred_edge_graph();
  std::size_t touched = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    auto m = noise_multipliers(g, NoiseSpec::type2(s));
    for (double v : m) touched += v != 1.0;
  }
  // 50 draws x 100 undirected edges x 2 directions at p = 0.1: expect 1000.
  CHECK(touched > 800);
  CHECK(touched < 1200);
}

TEST_CASE("noise is deterministic per seed") {
  auto g = hundred_edge_graph();
  CHECK(perturb(g, NoiseSpec::type1(5)) == perturb(g, NoiseSpec::type1(5)));
  CHECK_FALSE(perturb(g, NoiseSpec::type1(5)) == perturb(g, NoiseSpec::type1(6)));
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(NoiseSpec({1.5, 0.1, 0}).validate(), Error);
  CHECK_THROWS_AS(NoiseSpec({0.5, 1.0, 0}).validate(), Error);
  CHECK_THROWS_AS(NoiseSpec({0.5, -0.1, 0}).validate(), Error);
  CHECK_NOTHROW(NoiseSpec::type2(0).validate());
}

TEST_CASE("magnitude sweep") {
  auto g = tie_graph_g();
  std::vector<double> zero{0.0};
  auto flat = magnitude_sweep(g, zero, 5, 1);
  REQUIRE(flat.size() == 1);
  for (const auto& h : flat[0].graphs) CHECK(h == g);

  std::vector<double> d{0.035};
  auto sweep = magnitude_sweep(g, d, 100, 42);
  REQUIRE(sweep[0].graphs.size() == 100);
  std::set<std::vector<double>> distinct;
  for (const auto& h : sweep[0].graphs) {
    std::vector<double> w;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
      double ratio = h.edges()[i].weight / g.edges()[i].weight;
      CHECK(ratio >= 0.965 - 1e-15);
      CHECK(ratio <= 1.035 + 1e-15);
      w.push_back(h.edges()[i].weight);
    }
    distinct.insert(w);
  }
  CHECK(distinct.size() == 100);

  auto again = magnitude_sweep(g, d, 100, 42);
  for (std::size_t t = 0; t < 100; ++t) CHECK(again[0].graphs[t] == sweep[0].graphs[t]);
}
