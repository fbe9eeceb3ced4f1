#include "centra/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "centra/parallel.hpp"
#include "centra/random.hpp"
#include "centra/shortest_paths.hpp"

namespace centra {

DualNetwork::DualNetwork(WeightedDigraph base, WeightRule rule)
    : base_(std::move(base)), twin_(convert_weights(base_, rule)), rule_(rule) {}

const WeightedDigraph& DualNetwork::similarity() const noexcept {
  return base_.weight_kind() == WeightKind::similarity ? base_ : twin_;
}

const WeightedDigraph& DualNetwork::dissimilarity() const noexcept {
  return base_.weight_kind() == WeightKind::dissimilarity ? base_ : twin_;
}

const WeightedDigraph& DualNetwork::view_for(Measure m) const noexcept {
  return input_kind(m) == WeightKind::similarity ? similarity() : dissimilarity();
}

DualNetwork DualNetwork::perturbed(const NoiseSpec& spec) const {
  return DualNetwork(perturb(base_, spec), rule_);
}

DualNetwork random_network(std::size_t n, std::uint64_t seed) {
  if (n < 10) {
    throw Error(Errc::size_too_small,
                "random networks need n >= 10 so that 10/n is a probability, got " + std::to_string(n));
  }
  const double q = 10.0 / static_cast<double>(n);
  Rng rng(seed);
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (!rng.bernoulli(q)) continue;
      double w = rng.uniform(0.5, 1.5);
      edges.push_back({i, j, w});
      edges.push_back({j, i, w});
    }
  }
  return DualNetwork(WeightedDigraph(n, std::move(edges), WeightKind::dissimilarity),
                     WeightRule::affine_two_minus);
}

DualNetwork connected_random_network(std::size_t n, std::uint64_t seed) {
  constexpr std::uint64_t kMaxAttempts = 1000;
  for (std::uint64_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    DualNetwork net = random_network(n, attempt == 0 ? seed : derive_seed(seed, {attempt}));
    if (is_connected(net.base())) return net;
  }
  throw Error(Errc::not_connected, "no connected random network after " +
                                       std::to_string(kMaxAttempts) + " draws");
}

Ranking::Ranking(std::vector<NodeId> order) : order_(std::move(order)), rank_of_(order_.size(), 0) {
  for (std::size_t k = 0; k < order_.size(); ++k) {
    NodeId x = order_[k];
    if (x >= order_.size() || rank_of_[x] != 0) {
      throw Error(Errc::invalid_argument, "ranking order is not a permutation");
    }
    rank_of_[x] = k + 1;
  }
}

Ranking centrality_ranking(const CentralityVector& cv) {
  std::vector<NodeId> order(cv.values.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  const auto& v = cv.values;
  if (cv.orientation == Orientation::higher_is_central) {
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return v[a] > v[b]; });
  } else {
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return v[a] < v[b]; });
  }
  return Ranking(std::move(order));
}

Displacement rank_displacement(const Ranking& a, const Ranking& b) {
  if (a.size() != b.size()) {
    throw Error(Errc::universe_mismatch, "rankings cover different node sets");
  }
  Displacement out;
  out.per_node.resize(a.size());
  std::size_t total = 0;
  for (NodeId x = 0; x < a.size(); ++x) {
    std::size_t ra = a.rank_of(x);
    std::size_t rb = b.rank_of(x);
    std::size_t d = ra > rb ? ra - rb : rb - ra;
    out.per_node[x] = d;
    out.max = std::max(out.max, d);
    total += d;
  }
  out.mean = a.size() == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(a.size());
  return out;
}

bool top_k_retained(const Ranking& a, const Ranking& b, std::size_t k) {
  if (k > a.size() || k > b.size()) {
    throw Error(Errc::invalid_argument, "top-k larger than the ranking");
  }
  return std::equal(a.order().begin(), a.order().begin() + static_cast<std::ptrdiff_t>(k),
                    b.order().begin());
}

double stability_ratio(const CentralityVector& cg, const CentralityVector& ch, double distance) {
  if (cg.values.size() != ch.values.size()) {
    throw Error(Errc::universe_mismatch, "centrality vectors cover different node sets");
  }
  if (!(distance > 0.0)) throw Error(Errc::zero_distance, "graphs are at distance zero");
  double worst = 0.0;
  for (std::size_t x = 0; x < cg.values.size(); ++x) {
    worst = std::max(worst, extended_abs_diff(cg.values[x], ch.values[x]));
  }
  return worst / distance;
}

double stability_ratio(Measure m, const GraphPair& pair) {
  double d = graph_distance(pair);
  if (!(d > 0.0)) throw Error(Errc::zero_distance, "graphs are at distance zero");
  return stability_ratio(compute(m, pair.g()), compute(m, pair.h()), d);
}

double stability_constant(Measure m, const WeightedDigraph& g) {
  const auto n = static_cast<double>(g.node_count());
  switch (m) {
    case Measure::degree:
    case Measure::out_degree:
    case Measure::in_degree:
      return 1.0;
    case Measure::closeness_decentrality:
      return n;
    case Measure::eigenvector:
      return 4.0 / spectral_gap(g);
    case Measure::stable_betweenness:
      return 2.0 * n * n;
    default:
      throw Error(Errc::invalid_argument,
                  std::string(to_string(m)) + " has no stability constant");
  }
}

TrialOutcome compare_rankings(const Ranking& before, const Ranking& after, std::size_t top_k) {
  Displacement d = rank_displacement(before, after);
  return {d.max, d.mean, top_k_retained(before, after, std::min(top_k, before.size()))};
}

void IndicatorReport::add(const TrialOutcome& trial) {
  trials_.push_back(trial);
  ++histogram_[trial.max_displacement];
}

double IndicatorReport::mean_max_displacement() const {
  if (trials_.empty()) return 0.0;
  double total = 0.0;
  for (const auto& t : trials_) total += static_cast<double>(t.max_displacement);
  return total / static_cast<double>(trials_.size());
}

double IndicatorReport::mean_average_displacement() const {
  if (trials_.empty()) return 0.0;
  double total = 0.0;
  for (const auto& t : trials_) total += t.mean_displacement;
  return total / static_cast<double>(trials_.size());
}

double IndicatorReport::exceedance_probability(std::size_t threshold) const {
  if (trials_.empty()) return 0.0;
  auto hits = std::count_if(trials_.begin(), trials_.end(),
                            [&](const TrialOutcome& t) { return t.max_displacement > threshold; });
  return static_cast<double>(hits) / static_cast<double>(trials_.size());
}

double IndicatorReport::top_k_retention_probability() const {
  if (trials_.empty()) return 0.0;
  auto kept = std::count_if(trials_.begin(), trials_.end(),
                            [](const TrialOutcome& t) { return t.top_k_retained; });
  return static_cast<double>(kept) / static_cast<double>(trials_.size());
}

void ExperimentConfig::validate() const {
  if (sizes.empty()) throw Error(Errc::invalid_argument, "no network sizes configured");
  for (std::size_t n : sizes) {
    if (n < 10) throw Error(Errc::size_too_small, "network size " + std::to_string(n) + " is below 10");
  }
  if (trials == 0) throw Error(Errc::invalid_argument, "trials must be positive");
  if (measures.empty()) throw Error(Errc::invalid_argument, "no measures configured");
  noise.validate();
}

std::vector<ExperimentCell> run_perturbation_experiment(const ExperimentConfig& config) {
  config.validate();
  const std::size_t measures = config.measures.size();
  const std::size_t items = config.sizes.size() * config.trials;
  std::vector<std::vector<TrialOutcome>> outcomes(items);

  parallel_for(items, config.jobs, [&](std::size_t item) {
    const std::size_t n = config.sizes[item / config.trials];
    const std::size_t trial = item % config.trials;
    DualNetwork net = connected_random_network(n, derive_seed(config.seed, {n, trial, 1}));
    NoiseSpec spec = config.noise;
    spec.seed = derive_seed(config.seed, {n, trial, 2});
    DualNetwork noisy = net.perturbed(spec);
    auto& row = outcomes[item];
    row.reserve(measures);
    for (Measure m : config.measures) {
      Ranking before = centrality_ranking(compute(m, net.view_for(m)));
      Ranking after = centrality_ranking(compute(m, noisy.view_for(m)));
      row.push_back(compare_rankings(before, after, config.top_k));
    }
  });

  std::vector<ExperimentCell> cells;
  cells.reserve(config.sizes.size() * measures);
  for (std::size_t s = 0; s < config.sizes.size(); ++s) {
    for (std::size_t mi = 0; mi < measures; ++mi) {
      ExperimentCell cell{config.sizes[s], config.measures[mi], {}};
      for (std::size_t t = 0; t < config.trials; ++t) {
        cell.report.add(outcomes[s * config.trials + t][mi]);
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

std::vector<SweepCell> run_magnitude_sweep(const DualNetwork& network,
                                           std::span<const double> deltas, std::size_t trials,
                                           std::uint64_t seed, std::span<const Measure> measures,
                                           std::size_t top_k, unsigned jobs) {
  for (double d : deltas) NoiseSpec{1.0, d, 0}.validate();
  std::vector<Ranking> baseline;
  baseline.reserve(measures.size());
  for (Measure m : measures) baseline.push_back(centrality_ranking(compute(m, network.view_for(m))));

  const std::size_t items = deltas.size() * trials;
  std::vector<std::vector<TrialOutcome>> outcomes(items);
  parallel_for(items, jobs, [&](std::size_t item) {
    const std::size_t level = item / trials;
    const std::size_t trial = item % trials;
    // Same stream as magnitude_sweep(), so the graphs are reproducible from it.
    DualNetwork noisy = network.perturbed({1.0, deltas[level], derive_seed(seed, {level, trial})});
    auto& row = outcomes[item];
    for (std::size_t mi = 0; mi < measures.size(); ++mi) {
      Ranking after = centrality_ranking(compute(measures[mi], noisy.view_for(measures[mi])));
      row.push_back(compare_rankings(baseline[mi], after, top_k));
    }
  });

  std::vector<SweepCell> cells;
  for (std::size_t level = 0; level < deltas.size(); ++level) {
    for (std::size_t mi = 0; mi < measures.size(); ++mi) {
      SweepCell cell{deltas[level], measures[mi], {}};
      for (std::size_t t = 0; t < trials; ++t) cell.report.add(outcomes[level * trials + t][mi]);
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

std::size_t CrossMeasureMatrix::index_of(Measure m) const {
  auto it = std::find(measures.begin(), measures.end(), m);
  if (it == measures.end()) throw std::out_of_range("measure not in matrix");
  return static_cast<std::size_t>(it - measures.begin());
}

CrossMeasureMatrix cross_measure_matrix(std::span<const DualNetwork> networks,
                                        std::span<const Measure> measures, unsigned jobs) {
  if (networks.empty()) throw Error(Errc::invalid_argument, "cross-measure matrix needs a network");
  const std::size_t k = measures.size();
  struct PerNetwork {
    std::vector<double> avg;
    std::vector<double> max;
  };
  std::vector<PerNetwork> per(networks.size());

  parallel_for(networks.size(), jobs, [&](std::size_t i) {
    std::vector<Ranking> rankings;
    rankings.reserve(k);
    for (Measure m : measures) rankings.push_back(centrality_ranking(compute(m, networks[i].view_for(m))));
    per[i].avg.assign(k * k, 0.0);
    per[i].max.assign(k * k, 0.0);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        Displacement d = rank_displacement(rankings[a], rankings[b]);
        per[i].avg[a * k + b] = per[i].avg[b * k + a] = d.mean;
        per[i].max[a * k + b] = per[i].max[b * k + a] = static_cast<double>(d.max);
      }
    }
  });

  CrossMeasureMatrix out{{measures.begin(), measures.end()},
                         std::vector<std::vector<double>>(k, std::vector<double>(k, 0.0)),
                         std::vector<std::vector<double>>(k, std::vector<double>(k, 0.0))};
  const auto count = static_cast<double>(networks.size());
  for (const PerNetwork& p : per) {
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        out.mean_average[a][b] += p.avg[a * k + b] / count;
        out.mean_maximum[a][b] += p.max[a * k + b] / count;
      }
    }
  }
  return out;
}

std::vector<Measure> bounded_measures() {
  return {Measure::degree, Measure::out_degree, Measure::in_degree,
          Measure::closeness_decentrality, Measure::eigenvector, Measure::stable_betweenness};
}

std::vector<BoundCheck> verify_stability_bounds(std::span<const std::size_t> sizes,
                                                std::size_t trials, std::uint64_t seed,
                                                unsigned jobs) {
  constexpr double kSlack = 1e-9;
  const std::vector<Measure> measures = bounded_measures();
  const std::size_t items = sizes.size() * 2 * trials;
  struct Sample {
    bool skipped = false;
    std::vector<double> ratio;
    std::vector<double> bound;
  };
  std::vector<Sample> samples(items);

  parallel_for(items, jobs, [&](std::size_t item) {
    const std::size_t n = sizes[item / (2 * trials)];
    const std::size_t noise_type = (item / trials) % 2;
    const std::size_t trial = item % trials;
    DualNetwork net = connected_random_network(n, derive_seed(seed, {n, noise_type, trial, 1}));
    const std::uint64_t noise_seed = derive_seed(seed, {n, noise_type, trial, 2});
    NoiseSpec spec = noise_type == 0 ? NoiseSpec::type1(noise_seed) : NoiseSpec::type2(noise_seed);
    DualNetwork noisy = net.perturbed(spec);
    Sample& out = samples[item];
    for (Measure m : measures) {
      const WeightedDigraph& g = net.view_for(m);
      const WeightedDigraph& h = noisy.view_for(m);
      double d = graph_distance(g, h);
      if (!(d > 0.0)) {
        out.skipped = true;
        return;
      }
      out.ratio.push_back(stability_ratio(compute(m, g), compute(m, h), d));
      out.bound.push_back(stability_constant(m, g));
    }
  });

  std::vector<BoundCheck> checks;
  for (std::size_t mi = 0; mi < measures.size(); ++mi) {
    BoundCheck check{measures[mi]};
    for (const Sample& s : samples) {
      if (s.skipped) {
        ++check.skipped;
        continue;
      }
      ++check.pairs;
      check.worst_ratio = std::max(check.worst_ratio, s.ratio[mi]);
      check.worst_bound_fraction = std::max(check.worst_bound_fraction, s.ratio[mi] / s.bound[mi]);
      if (s.ratio[mi] > s.bound[mi] * (1.0 + kSlack)) ++check.violations;
    }
    checks.push_back(check);
  }
  return checks;
}

}  // namespace centra
