#include "centra/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <unordered_map>
#include <utility>

namespace centra::io {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what, Errc code = Errc::parse_error) {
  throw Error(code, "line " + std::to_string(line) + ": " + what, line);
}

bool skippable(const std::string& line) {
  std::string t = trim(line);
  return t.empty() || t.front() == '#';
}

double parse_double(const std::string& text, std::size_t line) {
  std::string t = trim(text);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    fail(line, "not a number: '" + t + "'");
  }
  return value;
}

std::uint64_t parse_unsigned(const std::string& text, std::size_t line) {
  std::string t = trim(text);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    fail(line, "not a non-negative integer: '" + t + "'");
  }
  return value;
}

bool parse_bool(const std::string& text, std::size_t line) {
  std::string t = trim(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "true" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "no") return false;
  fail(line, "not a boolean: '" + t + "'");
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path.string());
  return in;
}

}  // namespace

std::string trim(const std::string& text) {
  auto begin = std::find_if_not(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); });
  auto end = std::find_if_not(text.rbegin(), text.rend(), [](unsigned char c) { return std::isspace(c); }).base();
  return begin < end ? std::string(begin, end) : std::string();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

LabeledGraph parse_edge_list(std::istream& in, WeightKind kind) {
  std::string line;
  std::size_t line_no = 0;
  bool has_directed = false;
  bool header_seen = false;
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> names;
  std::map<std::pair<NodeId, NodeId>, std::size_t> seen;
  std::vector<Edge> edges;

  auto id_of = [&](const std::string& name) {
    auto [it, inserted] = ids.try_emplace(name, names.size());
    if (inserted) names.push_back(name);
    return it->second;
  };
  auto add = [&](NodeId src, NodeId dst, double w) {
    auto [it, inserted] = seen.try_emplace({src, dst}, line_no);
    if (!inserted) {
      fail(line_no, "duplicate edge " + names[src] + " -> " + names[dst] + " (first on line " +
                        std::to_string(it->second) + ")",
           Errc::duplicate_edge);
    }
    edges.push_back({src, dst, w});
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (skippable(line)) continue;
    auto fields = split(line, ',');
    for (auto& f : fields) f = trim(f);
    if (!header_seen) {
      header_seen = true;
      bool ok = (fields.size() == 3 || fields.size() == 4) && fields[0] == "src" &&
                fields[1] == "dst" && fields[2] == "weight" &&
                (fields.size() == 3 || fields[3] == "directed");
      if (!ok) fail(line_no, "expected header 'src,dst,weight[,directed]'");
      has_directed = fields.size() == 4;
      continue;
    }
    std::size_t expected = has_directed ? 4 : 3;
    if (fields.size() != expected) {
      fail(line_no, "expected " + std::to_string(expected) + " fields, got " +
                        std::to_string(fields.size()));
    }
    if (fields[0].empty() || fields[1].empty()) fail(line_no, "empty node label");
    double w = parse_double(fields[2], line_no);
    if (fields[0] == fields[1]) fail(line_no, "self-loop on " + fields[0], Errc::self_loop);
    if (!(w > 0.0) || !std::isfinite(w)) {
      fail(line_no, "weight must be positive and finite", Errc::non_positive_weight);
    }
    bool directed = has_directed ? parse_bool(fields[3], line_no) : true;
    NodeId src = id_of(fields[0]);
    NodeId dst = id_of(fields[1]);
    add(src, dst, w);
    if (!directed) add(dst, src, w);
  }
  if (!header_seen) fail(std::max<std::size_t>(line_no, 1), "missing header");
  return {WeightedDigraph(names.size(), std::move(edges), kind), std::move(names)};
}

LabeledGraph parse_edge_list(const std::filesystem::path& path, WeightKind kind) {
  std::ifstream in = open(path);
  return parse_edge_list(in, kind);
}

void write_edge_list(std::ostream& out, const WeightedDigraph& g, const std::vector<std::string>& names) {
  auto label = [&](NodeId x) { return x < names.size() ? names[x] : std::to_string(x); };
  out << "src,dst,weight,directed\n";
  for (const Edge& e : g.edges()) {
    auto reverse = g.weight(e.dst, e.src);
    bool paired = reverse && *reverse == e.weight;
    if (paired && e.src > e.dst) continue;
    out << label(e.src) << ',' << label(e.dst) << ',' << format_number(e.weight) << ','
        << (paired ? "false" : "true") << '\n';
  }
}

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_unsigned(part, 0));
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_double(part, 0));
  return out;
}

std::vector<Measure> parse_measure_list(const std::string& text) {
  std::vector<Measure> out;
  for (const auto& part : split(text, ',')) {
    auto m = parse_measure(trim(part));
    if (!m) throw Error(Errc::parse_error, "unknown measure '" + trim(part) + "'");
    out.push_back(*m);
  }
  return out;
}

ExperimentConfig parse_config(std::istream& in, std::uint64_t default_seed) {
  ExperimentConfig config;
  config.seed = default_seed;
  std::string line;
  std::size_t line_no = 0;
  std::set<std::string> keys_seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (skippable(line)) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (!keys_seen.insert(key).second) fail(line_no, "key '" + key + "' given twice");
    try {
      if (key == "sizes") {
        config.sizes = parse_size_list(value);
      } else if (key == "trials") {
        config.trials = parse_unsigned(value, line_no);
      } else if (key == "noise") {
        if (value == "type1") {
          config.noise = NoiseSpec::type1(0);
        } else if (value == "type2") {
          config.noise = NoiseSpec::type2(0);
        } else {
          fail(line_no, "noise must be type1 or type2");
        }
      } else if (key == "p") {
        config.noise.p = parse_double(value, line_no);
      } else if (key == "delta") {
        config.noise.delta = parse_double(value, line_no);
      } else if (key == "measures") {
        config.measures = parse_measure_list(value);
      } else if (key == "thresholds") {
        config.thresholds = parse_size_list(value);
      } else if (key == "top_k") {
        config.top_k = parse_unsigned(value, line_no);
      } else if (key == "seed") {
        config.seed = parse_unsigned(value, line_no);
      } else if (key == "jobs") {
        config.jobs = static_cast<unsigned>(parse_unsigned(value, line_no));
      } else {
        fail(line_no, "unknown key '" + key + "'");
      }
    } catch (const Error& e) {
      if (e.line()) throw;
      fail(line_no, e.what());
    }
  }
  if (keys_seen.count("noise") && (keys_seen.count("p") || keys_seen.count("delta"))) {
    throw Error(Errc::parse_error, "give either a noise preset or p/delta, not both");
  }
  config.validate();
  return config;
}

ExperimentConfig parse_config(const std::filesystem::path& path, std::uint64_t default_seed) {
  std::ifstream in = open(path);
  return parse_config(in, default_seed);
}

}  // namespace centra::io
