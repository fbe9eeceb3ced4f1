#include <doctest.h>

#include <sstream>

#include "centra/io.hpp"
#include "support/fixtures.hpp"

using namespace centra;
using namespace centra::fixtures;

namespace {

Error parse_error_of(const std::string& text) {
  std::istringstream in(text);
  try {
    io::parse_edge_list(in, WeightKind::similarity);
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected centra::Error");
  return Error(Errc::invalid_argument, "");
}

io::LabeledGraph parse(const std::string& text, WeightKind kind = WeightKind::similarity) {
  std::istringstream in(text);
  return io::parse_edge_list(in, kind);
}

}  // namespace

TEST_CASE("edge list parsing") {
  auto two = parse("src,dst,weight,directed\na,b,1.0,false\n");
  CHECK(two.graph.node_count() == 2);
  CHECK(two.graph.edge_count() == 2);
  CHECK(two.graph.symmetric());
  CHECK(two.names == std::vector<std::string>{"a", "b"});

  auto directed = parse("# comment\n\nsrc,dst,weight\nb,a,2.5\n");
  CHECK(directed.graph.edge_count() == 1);
  CHECK(*directed.graph.weight(0, 1) == 2.5);
}

TEST_CASE("edge list errors carry line numbers") {
  auto loop = parse_error_of("src,dst,weight\nx,y,1\na,a,1.0\n");
  CHECK(loop.code() == Errc::self_loop);
  CHECK(loop.line() == 3);

  CHECK(parse_error_of("src,dst,weight\na,b,0\n").code() == Errc::non_positive_weight);
  CHECK(parse_error_of("src,dst,weight\na,b,1\na,b,2\n").code() == Errc::duplicate_edge);
  CHECK(parse_error_of("src,dst,weight,directed\na,b,1,false\nb,a,1,true\n").code() ==
        Errc::duplicate_edge);
  CHECK(parse_error_of("from,to\n").code() == Errc::parse_error);
  CHECK(parse_error_of("src,dst,weight\na,b,heavy\n").line() == 2);
  CHECK(parse_error_of("").code() == Errc::parse_error);
}

TEST_CASE("similarity file to dissimilarity view") {
  // Airport-style: passenger counts as similarities, inverses as lengths.
  std::ostringstream text;
  text << "src,dst,weight,directed\n";
  for (int i = 0; i < 25; ++i) text << "ap" << i << ",ap" << (i + 1) % 25 << ',' << 10 * (i + 1) << ",false\n";
  auto air = parse(text.str());
  CHECK(air.graph.node_count() == 25);
  auto dis = convert_weights(air.graph, WeightRule::reciprocal);
  CHECK(dis.weight_kind() == WeightKind::dissimilarity);
  CHECK(*dis.weight(0, 1) == doctest::Approx(0.1));
}

TEST_CASE("edge list round trip") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = random_small_graph(8, 0.4, seed % 2 == 0, false, seed);
    std::ostringstream out;
    io::write_edge_list(out, g);
    auto back = parse(out.str(), g.weight_kind());
    // Labels are assigned in order of appearance; map them back to the original ids.
    std::vector<Edge> edges;
    for (const Edge& e : back.graph.edges()) {
      edges.push_back({std::stoul(back.names[e.src]), std::stoul(back.names[e.dst]), e.weight});
    }
    std::size_t n = g.node_count();
    CHECK(WeightedDigraph(n, edges, g.weight_kind()) ==
          WeightedDigraph(n, {g.edges().begin(), g.edges().end()}, g.weight_kind()));
  }
}

TEST_CASE("number formatting") {
  CHECK(io::format_number(9.0) == "9");
  CHECK(io::format_number(0.1) == "0.1");
  CHECK(io::format_number(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("config parsing") {
  std::istringstream in(
      "# desk run\n"
      "sizes = 20, 40\n"
      "trials = 7\n"
      "noise = type2\n"
      "measures = D, B, SB\n"
      "thresholds = 1,2\n"
      "top_k = 3\n"
      "seed = 99\n");
  auto c = io::parse_config(in);
  CHECK(c.sizes == std::vector<std::size_t>{20, 40});
  CHECK(c.trials == 7);
  CHECK(c.noise.p == 0.1);
  CHECK(c.noise.delta == 0.1);
  CHECK(c.measures ==
        std::vector<Measure>{Measure::degree, Measure::betweenness, Measure::stable_betweenness});
  CHECK(c.thresholds == std::vector<std::size_t>{1, 2});
  CHECK(c.top_k == 3);
  CHECK(c.seed == 99);

  std::istringstream custom("p = 0.5\ndelta = 0\n");
  auto d = io::parse_config(custom, 12);
  CHECK(d.noise.p == 0.5);
  CHECK(d.noise.delta == 0.0);
  CHECK(d.seed == 12);
}

TEST_CASE("config errors") {
  auto fails = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(io::parse_config(in), Error);
  };
  fails("bogus = 1\n");
  fails("trials = 3\ntrials = 4\n");
  fails("noise = type1\ndelta = 0.2\n");
  fails("noise = type3\n");
  fails("sizes = 5\n");
  fails("measures = D, X\n");
  fails("trials 3\n");
}
