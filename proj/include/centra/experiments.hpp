#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "centra/centrality.hpp"
#include "centra/graph.hpp"
#include "centra/perturbation.hpp"

namespace centra {

/// One network seen through both weight interpretations. `base` carries the
/// raw weights and is what noise is applied to; `twin` is derived from it by
/// `rule` and always shares its topology.
class DualNetwork {
 public:
  DualNetwork(WeightedDigraph base, WeightRule rule);

  const WeightedDigraph& base() const noexcept { return base_; }
  const WeightedDigraph& twin() const noexcept { return twin_; }
  WeightRule rule() const noexcept { return rule_; }

  const WeightedDigraph& similarity() const noexcept;
  const WeightedDigraph& dissimilarity() const noexcept;
  /// The view measure `m` consumes.
  const WeightedDigraph& view_for(Measure m) const noexcept;

  /// Same noise realization for both views: base is perturbed, twin re-derived.
  DualNetwork perturbed(const NoiseSpec& spec) const;

 private:
  WeightedDigraph base_;
  WeightedDigraph twin_;
  WeightRule rule_;
};

/// Undirected random network: each of the n(n-1)/2 pairs is an edge with
/// probability 10/n, dissimilarity weights ~ Uniform[0.5, 1.5], similarity
/// twin 2 - w. Throws Error(size_too_small) for n < 10.
DualNetwork random_network(std::size_t n, std::uint64_t seed);

/// random_network redrawn with derived seeds until it is connected, so every
/// measure (eigenvector in particular) is defined on it.
DualNetwork connected_random_network(std::size_t n, std::uint64_t seed);

/// Nodes from most to least central. Ties are broken by ascending node id.
class Ranking {
 public:
  explicit Ranking(std::vector<NodeId> order);

  std::span<const NodeId> order() const noexcept { return order_; }
  /// 1-based position of x.
  std::size_t rank_of(NodeId x) const { return rank_of_.at(x); }
  std::size_t size() const noexcept { return order_.size(); }

 private:
  std::vector<NodeId> order_;
  std::vector<std::size_t> rank_of_;
};

Ranking centrality_ranking(const CentralityVector& cv);

struct Displacement {
  std::vector<std::size_t> per_node;
  std::size_t max = 0;
  double mean = 0.0;
};

/// |rank_a(x) - rank_b(x)| per node. Throws Error(universe_mismatch) when the
/// rankings cover different node counts.
Displacement rank_displacement(const Ranking& a, const Ranking& b);

/// The first k entries agree position by position.
bool top_k_retained(const Ranking& a, const Ranking& b, std::size_t k);

/// max_x |C^G(x) - C^H(x)| / distance, with inf - inf = 0.
/// Throws Error(zero_distance) when distance is 0.
double stability_ratio(const CentralityVector& cg, const CentralityVector& ch, double distance);
double stability_ratio(Measure m, const GraphPair& pair);

/// Theoretical stability constant K_G of `m` on g: 1 for the degree family,
/// n for closeness decentrality, 4 / spectral gap for eigenvector, 2 n^2 for
/// stable betweenness. Throws Error(invalid_argument) for measures without one.
double stability_constant(Measure m, const WeightedDigraph& g);

struct TrialOutcome {
  std::size_t max_displacement = 0;
  double mean_displacement = 0.0;
  bool top_k_retained = false;
};

TrialOutcome compare_rankings(const Ranking& before, const Ranking& after, std::size_t top_k);

/// Robustness indicators of one measure across trials.
class IndicatorReport {
 public:
  void add(const TrialOutcome& trial);

  std::span<const TrialOutcome> trials() const noexcept { return trials_; }
  std::size_t trial_count() const noexcept { return trials_.size(); }
  /// max displacement -> number of trials.
  const std::map<std::size_t, std::size_t>& histogram() const noexcept { return histogram_; }

  double mean_max_displacement() const;
  /// Mean over nodes within a trial, then mean over trials.
  double mean_average_displacement() const;
  /// Fraction of trials whose max displacement exceeds `threshold`.
  double exceedance_probability(std::size_t threshold) const;
  double top_k_retention_probability() const;

 private:
  std::vector<TrialOutcome> trials_;
  std::map<std::size_t, std::size_t> histogram_;
};

struct ExperimentConfig {
  std::vector<std::size_t> sizes{20, 40, 60, 80, 100};
  std::size_t trials = 20;
  /// Amplitude and probability. The per-trial noise seed is derived from the
  /// master seed, so noise.seed is not used.
  NoiseSpec noise = NoiseSpec::type1(0);
  std::vector<Measure> measures{Measure::degree, Measure::closeness_decentrality,
                                Measure::betweenness, Measure::eigenvector,
                                Measure::stable_betweenness};
  std::vector<std::size_t> thresholds{3, 5, 10};
  std::size_t top_k = 5;
  std::uint64_t seed = 1;
  unsigned jobs = 0;

  /// Throws Error(invalid_argument) or Error(size_too_small).
  void validate() const;
};

struct ExperimentCell {
  std::size_t size;
  Measure measure;
  IndicatorReport report;
};

/// For every size and trial: draw a connected random network, perturb it,
/// rank both versions under every measure and record the indicators. Output
/// ordered by size, then by the config's measure order.
std::vector<ExperimentCell> run_perturbation_experiment(const ExperimentConfig& config);

struct SweepCell {
  double delta;
  Measure measure;
  IndicatorReport report;
};

/// Real-network protocol: for each delta, `trials` perturbations of `network`
/// (p = 1) compared against the unperturbed ranking.
std::vector<SweepCell> run_magnitude_sweep(const DualNetwork& network,
                                           std::span<const double> deltas, std::size_t trials,
                                           std::uint64_t seed, std::span<const Measure> measures,
                                           std::size_t top_k, unsigned jobs = 0);

/// Mean ranking variation between every pair of measures over a set of
/// networks. Both matrices are symmetric with a zero diagonal.
struct CrossMeasureMatrix {
  std::vector<Measure> measures;
  std::vector<std::vector<double>> mean_average;
  std::vector<std::vector<double>> mean_maximum;

  /// Throws std::out_of_range when either measure is absent.
  std::size_t index_of(Measure m) const;
};

CrossMeasureMatrix cross_measure_matrix(std::span<const DualNetwork> networks,
                                        std::span<const Measure> measures, unsigned jobs = 0);

/// Worst observed stability ratio of one measure against its constant K_G.
struct BoundCheck {
  Measure measure;
  std::size_t pairs = 0;
  /// Pairs at distance 0 (possible with sparse noise); not counted in `pairs`.
  std::size_t skipped = 0;
  double worst_ratio = 0.0;
  /// max over pairs of ratio / K_G; at most 1 when the bound holds.
  double worst_bound_fraction = 0.0;
  std::size_t violations = 0;
};

/// Measures with a known stability constant, in reporting order.
std::vector<Measure> bounded_measures();

/// For each size, `trials` connected random networks under type-1 noise and
/// `trials` under type-2, each compared with its perturbed copy. A pair
/// violates the bound when ratio > K_G * (1 + 1e-9).
std::vector<BoundCheck> verify_stability_bounds(std::span<const std::size_t> sizes,
                                                std::size_t trials, std::uint64_t seed,
                                                unsigned jobs = 0);

}  // namespace centra
