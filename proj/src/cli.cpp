#include "centra/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "centra/centrality.hpp"
#include "centra/experiments.hpp"
#include "centra/io.hpp"
#include "centra/random.hpp"

namespace centra::cli {

namespace {

namespace fs = std::filesystem;

constexpr std::uint64_t kDefaultSeed = 1;

/// --seed, then CENTRA_SEED, then the built-in default.
std::uint64_t fallback_seed() {
  if (const char* env = std::getenv("CENTRA_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(Errc::invalid_argument, std::string("CENTRA_SEED is not an integer: ") + env);
    }
  }
  return kDefaultSeed;
}

WeightKind parse_kind(const std::string& text) {
  if (text == "similarity") return WeightKind::similarity;
  if (text == "dissimilarity") return WeightKind::dissimilarity;
  throw CLI::ValidationError("--weight-kind", "expected similarity or dissimilarity");
}

WeightRule parse_rule(const std::string& text) {
  if (text == "reciprocal") return WeightRule::reciprocal;
  if (text == "affine") return WeightRule::affine_two_minus;
  throw CLI::ValidationError("--convert", "expected reciprocal or affine");
}

std::ofstream open_csv(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::invalid_argument, "cannot write " + path.string());
  return out;
}

std::vector<Measure> default_real_measures(const WeightedDigraph& g) {
  if (g.symmetric()) {
    return {Measure::degree, Measure::closeness_decentrality, Measure::betweenness,
            Measure::eigenvector, Measure::stable_betweenness};
  }
  return {Measure::out_degree, Measure::in_degree, Measure::closeness_decentrality,
          Measure::betweenness, Measure::stable_betweenness};
}

struct CentralityArgs {
  std::string graph;
  std::string measure;
  std::string weight_kind = "similarity";
  std::string convert = "reciprocal";
};

void run_centrality(const CentralityArgs& args, std::ostream& out) {
  auto measure = parse_measure(args.measure);
  if (!measure) throw CLI::ValidationError("--measure", "unknown measure " + args.measure);
  io::LabeledGraph labeled = io::parse_edge_list(fs::path(args.graph), parse_kind(args.weight_kind));
  DualNetwork net(labeled.graph, parse_rule(args.convert));
  CentralityVector cv = compute(*measure, net.view_for(*measure));
  Ranking ranking = centrality_ranking(cv);
  out << "node,value,rank\n";
  for (NodeId x = 0; x < cv.values.size(); ++x) {
    out << labeled.names[x] << ',' << io::format_number(cv.values[x]) << ',' << ranking.rank_of(x)
        << '\n';
  }
}

struct ExperimentArgs {
  std::string config;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> jobs;
};

void write_size_csv(const fs::path& path, const std::vector<ExperimentCell>& cells,
                    double (*value)(const IndicatorReport&, std::size_t), std::size_t arg) {
  std::ofstream out = open_csv(path);
  out << "size,measure,value\n";
  for (const auto& c : cells) {
    out << c.size << ',' << to_string(c.measure) << ',' << io::format_number(value(c.report, arg))
        << '\n';
  }
}

void run_experiment(const ExperimentArgs& args, std::ostream& out) {
  ExperimentConfig config = io::parse_config(fs::path(args.config), fallback_seed());
  if (args.seed) config.seed = *args.seed;
  if (args.jobs) config.jobs = *args.jobs;
  std::vector<ExperimentCell> cells = run_perturbation_experiment(config);

  fs::path dir(args.out_dir);
  fs::create_directories(dir);
  write_size_csv(dir / "max_displacement.csv", cells,
                 [](const IndicatorReport& r, std::size_t) { return r.mean_max_displacement(); }, 0);
  write_size_csv(dir / "average_displacement.csv", cells,
                 [](const IndicatorReport& r, std::size_t) { return r.mean_average_displacement(); }, 0);
  for (std::size_t t : config.thresholds) {
    write_size_csv(dir / ("exceedance_gt_" + std::to_string(t) + ".csv"), cells,
                   [](const IndicatorReport& r, std::size_t th) { return r.exceedance_probability(th); },
                   t);
  }
  write_size_csv(dir / ("top_" + std::to_string(config.top_k) + "_retention.csv"), cells,
                 [](const IndicatorReport& r, std::size_t) { return r.top_k_retention_probability(); },
                 0);
  std::ofstream hist = open_csv(dir / "histogram.csv");
  hist << "size,measure,max_displacement,count\n";
  for (const auto& c : cells) {
    for (auto [displacement, count] : c.report.histogram()) {
      hist << c.size << ',' << to_string(c.measure) << ',' << displacement << ',' << count << '\n';
    }
  }
  out << "wrote " << cells.size() << " (size, measure) cells to " << dir.string() << '\n';
}

struct SweepArgs {
  std::string graph;
  std::string deltas = "0.005,0.01,0.015,0.02,0.025,0.03,0.035,0.04,0.045,0.05";
  std::size_t trials = 100;
  std::optional<std::uint64_t> seed;
  std::string weight_kind = "similarity";
  std::string convert = "reciprocal";
  std::string measures;
  std::string thresholds = "1,3,5";
  std::size_t top_k = 5;
  std::string out_dir = ".";
  std::optional<unsigned> jobs;
};

void run_sweep(const SweepArgs& args, std::ostream& out) {
  io::LabeledGraph labeled = io::parse_edge_list(fs::path(args.graph), parse_kind(args.weight_kind));
  DualNetwork net(labeled.graph, parse_rule(args.convert));
  std::vector<Measure> measures =
      args.measures.empty() ? default_real_measures(labeled.graph) : io::parse_measure_list(args.measures);
  std::vector<double> deltas = io::parse_double_list(args.deltas);
  std::vector<std::size_t> thresholds = io::parse_size_list(args.thresholds);
  std::uint64_t seed = args.seed.value_or(fallback_seed());
  std::size_t top_k = std::min(args.top_k, labeled.graph.node_count());
  std::vector<SweepCell> cells =
      run_magnitude_sweep(net, deltas, args.trials, seed, measures, top_k, args.jobs.value_or(0));

  fs::path dir(args.out_dir);
  fs::create_directories(dir);
  std::ofstream exceed = open_csv(dir / "exceedance.csv");
  exceed << "delta,measure,threshold,value\n";
  std::ofstream hist = open_csv(dir / "histogram.csv");
  hist << "delta,measure,max_displacement,count\n";
  std::ofstream summary = open_csv(dir / "indicators.csv");
  summary << "delta,measure,mean_max_displacement,mean_average_displacement,top_k_retention\n";
  for (const auto& c : cells) {
    std::string delta = io::format_number(c.delta);
    std::string_view name = to_string(c.measure);
    for (std::size_t t : thresholds) {
      exceed << delta << ',' << name << ',' << t << ','
             << io::format_number(c.report.exceedance_probability(t)) << '\n';
    }
    for (auto [displacement, count] : c.report.histogram()) {
      hist << delta << ',' << name << ',' << displacement << ',' << count << '\n';
    }
    summary << delta << ',' << name << ',' << io::format_number(c.report.mean_max_displacement())
            << ',' << io::format_number(c.report.mean_average_displacement()) << ','
            << io::format_number(c.report.top_k_retention_probability()) << '\n';
  }
  out << "wrote " << cells.size() << " (delta, measure) cells to " << dir.string() << '\n';
}

struct CompareArgs {
  std::string sizes = "100";
  std::size_t trials = 30;
  std::optional<std::uint64_t> seed;
  std::string measures = "D,C,B,E,SB,DS";
  std::string out_file;
  std::optional<unsigned> jobs;
};

void run_compare(const CompareArgs& args, std::ostream& out) {
  std::vector<std::size_t> sizes = io::parse_size_list(args.sizes);
  std::vector<Measure> measures = io::parse_measure_list(args.measures);
  std::uint64_t seed = args.seed.value_or(fallback_seed());
  std::ostringstream csv;
  csv << "size,measure_a,measure_b,mean_average_displacement,mean_max_displacement\n";
  for (std::size_t n : sizes) {
    std::vector<DualNetwork> networks;
    networks.reserve(args.trials);
    for (std::size_t i = 0; i < args.trials; ++i) {
      networks.push_back(connected_random_network(n, derive_seed(seed, {n, i})));
    }
    CrossMeasureMatrix m = cross_measure_matrix(networks, measures, args.jobs.value_or(0));
    for (std::size_t a = 0; a < measures.size(); ++a) {
      for (std::size_t b = a + 1; b < measures.size(); ++b) {
        csv << n << ',' << to_string(measures[a]) << ',' << to_string(measures[b]) << ','
            << io::format_number(m.mean_average[a][b]) << ','
            << io::format_number(m.mean_maximum[a][b]) << '\n';
      }
    }
  }
  if (args.out_file.empty()) {
    out << csv.str();
  } else {
    std::ofstream file = open_csv(args.out_file);
    file << csv.str();
  }
}

struct VerifyArgs {
  std::string sizes = "10,20,30,40,50,60";
  std::size_t trials = 42;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> jobs;
};

int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<std::size_t> sizes = io::parse_size_list(args.sizes);
  std::vector<BoundCheck> checks = verify_stability_bounds(
      sizes, args.trials, args.seed.value_or(fallback_seed()), args.jobs.value_or(0));
  out << "measure,pairs,skipped,worst_ratio,worst_bound_fraction,violations\n";
  std::size_t violations = 0;
  for (const auto& c : checks) {
    out << to_string(c.measure) << ',' << c.pairs << ',' << c.skipped << ','
        << io::format_number(c.worst_ratio) << ',' << io::format_number(c.worst_bound_fraction)
        << ',' << c.violations << '\n';
    violations += c.violations;
  }
  if (violations > 0) {
    err << "stability bound violated on " << violations << " measure/pair combinations\n";
    return kExitBoundViolation;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Centrality measures, stability bounds and perturbation experiments", "centra"};
  app.require_subcommand(1);

  CentralityArgs centrality_args;
  auto* centrality = app.add_subcommand("centrality", "Per-node values and ranking as CSV");
  centrality->add_option("--graph", centrality_args.graph, "Edge-list file")->required()->check(CLI::ExistingFile);
  centrality->add_option("--measure", centrality_args.measure, "Measure name or alias (D, C, B, E, SB, ...)")->required();
  centrality->add_option("--weight-kind", centrality_args.weight_kind, "How file weights are read")
      ->check(CLI::IsMember({"similarity", "dissimilarity"}));
  centrality->add_option("--convert", centrality_args.convert, "Rule deriving the other weight kind")
      ->check(CLI::IsMember({"reciprocal", "affine"}));

  ExperimentArgs experiment_args;
  auto* experiment = app.add_subcommand("perturb-experiment", "Random-network robustness indicators");
  experiment->add_option("--config", experiment_args.config, "key = value config file")->required()->check(CLI::ExistingFile);
  experiment->add_option("--out", experiment_args.out_dir, "Output directory for CSV files");
  experiment->add_option("--seed", experiment_args.seed, "Master seed (overrides config)");
  experiment->add_option("--jobs", experiment_args.jobs, "Worker threads (default: all cores)");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Perturbation-magnitude sweep on one network");
  sweep->add_option("--graph", sweep_args.graph, "Edge-list file")->required()->check(CLI::ExistingFile);
  sweep->add_option("--deltas", sweep_args.deltas, "Comma-separated amplitudes");
  sweep->add_option("--trials", sweep_args.trials, "Perturbations per amplitude");
  sweep->add_option("--seed", sweep_args.seed, "Seed");
  sweep->add_option("--weight-kind", sweep_args.weight_kind, "How file weights are read")
      ->check(CLI::IsMember({"similarity", "dissimilarity"}));
  sweep->add_option("--convert", sweep_args.convert, "Rule deriving the other weight kind")
      ->check(CLI::IsMember({"reciprocal", "affine"}));
  sweep->add_option("--measures", sweep_args.measures, "Comma-separated measures");
  sweep->add_option("--thresholds", sweep_args.thresholds, "Exceedance thresholds");
  sweep->add_option("--top-k", sweep_args.top_k, "Top-k retention size");
  sweep->add_option("--out", sweep_args.out_dir, "Output directory for CSV files");
  sweep->add_option("--jobs", sweep_args.jobs, "Worker threads");

  CompareArgs compare_args;
  auto* compare = app.add_subcommand("compare-measures", "Ranking variation between measure pairs");
  compare->add_option("--sizes", compare_args.sizes, "Comma-separated network sizes");
  compare->add_option("--trials", compare_args.trials, "Networks per size");
  compare->add_option("--seed", compare_args.seed, "Seed");
  compare->add_option("--measures", compare_args.measures, "Comma-separated measures");
  compare->add_option("--out", compare_args.out_file, "CSV file (default stdout)");
  compare->add_option("--jobs", compare_args.jobs, "Worker threads");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify-bounds", "Empirical stability ratios against K_G");
  verify->add_option("--sizes", verify_args.sizes, "Comma-separated network sizes");
  verify->add_option("--trials", verify_args.trials, "Pairs per size and noise type");
  verify->add_option("--seed", verify_args.seed, "Seed");
  verify->add_option("--jobs", verify_args.jobs, "Worker threads");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*centrality) run_centrality(centrality_args, out);
    if (*experiment) run_experiment(experiment_args, out);
    if (*sweep) run_sweep(sweep_args, out);
    if (*compare) run_compare(compare_args, out);
    if (*verify) return run_verify(verify_args, out, err);
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return kExitDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitOk;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace centra::cli
