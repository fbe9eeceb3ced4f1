#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "centra/graph.hpp"

namespace centra {

/// Multiplicative edge noise: each undirected edge is selected with
/// probability p and its weight multiplied by u ~ Uniform[1 - delta, 1 + delta].
struct NoiseSpec {
  double p = 1.0;
  double delta = 0.0;
  std::uint64_t seed = 0;

  /// p = 1, delta = 0.01: every edge, at most 1%.
  static NoiseSpec type1(std::uint64_t seed) { return {1.0, 0.01, seed}; }
  /// p = 0.1, delta = 0.1: one edge in ten, at most 10%.
  static NoiseSpec type2(std::uint64_t seed) { return {0.1, 0.1, seed}; }

  /// Throws Error(invalid_argument) unless 0 <= p <= 1 and 0 <= delta < 1.
  void validate() const;
};

/// Perturbed copy of g with the same topology. Edges are visited in sorted
/// (src, dst) order; an edge whose reverse also exists is drawn once together
/// with it, so symmetric input stays symmetric.
WeightedDigraph perturb(const WeightedDigraph& g, const NoiseSpec& spec);

/// Multiplier applied to each edge in edges() order; what perturb() uses.
std::vector<double> noise_multipliers(const WeightedDigraph& g, const NoiseSpec& spec);

struct SweepLevel {
  double delta;
  std::vector<WeightedDigraph> graphs;
};

/// For each delta, `trials` perturbations with p = 1 and seeds derived from
/// (seed, level index, trial index).
std::vector<SweepLevel> magnitude_sweep(const WeightedDigraph& g, std::span<const double> deltas,
                                        std::size_t trials, std::uint64_t seed);

}  // namespace centra
