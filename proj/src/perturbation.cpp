#include "centra/perturbation.hpp"

#include <cmath>
#include <string>

#include "centra/random.hpp"

namespace centra {

void NoiseSpec::validate() const {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(Errc::invalid_argument, "noise probability must lie in [0, 1], got " + std::to_string(p));
  }
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw Error(Errc::invalid_argument, "noise amplitude must lie in [0, 1), got " + std::to_string(delta));
  }
}

std::vector<double> noise_multipliers(const WeightedDigraph& g, const NoiseSpec& spec) {
  spec.validate();
  auto edges = g.edges();
  std::vector<double> factor(edges.size(), 1.0);
  std::vector<char> done(edges.size(), 0);
  Rng rng(spec.seed);

  auto index_of = [&](NodeId src, NodeId dst) -> std::ptrdiff_t {
    auto out = g.out_edges(src);
    for (const Edge& e : out) {
      if (e.dst == dst) return &e - edges.data();
    }
    return -1;
  };

  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (done[i]) continue;
    done[i] = 1;
    std::ptrdiff_t twin = index_of(edges[i].dst, edges[i].src);
    if (twin >= 0) done[static_cast<std::size_t>(twin)] = 1;
    if (!rng.bernoulli(spec.p)) continue;
    double u = rng.uniform(1.0 - spec.delta, 1.0 + spec.delta);
    factor[i] = u;
    if (twin >= 0) factor[static_cast<std::size_t>(twin)] = u;
  }
  return factor;
}

WeightedDigraph perturb(const WeightedDigraph& g, const NoiseSpec& spec) {
  std::vector<double> factor = noise_multipliers(g, spec);
  auto edges = g.edges();
  std::vector<double> weights(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) weights[i] = edges[i].weight * factor[i];
  return g.with_weights(weights);
}

std::vector<SweepLevel> magnitude_sweep(const WeightedDigraph& g, std::span<const double> deltas,
                                        std::size_t trials, std::uint64_t seed) {
  std::vector<SweepLevel> levels;
  levels.reserve(deltas.size());
  for (std::size_t level = 0; level < deltas.size(); ++level) {
    SweepLevel out{deltas[level], {}};
    out.graphs.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
      NoiseSpec spec{1.0, deltas[level], derive_seed(seed, {level, t})};
      out.graphs.push_back(perturb(g, spec));
    }
    levels.push_back(std::move(out));
  }
  return levels;
}

}  // namespace centra
