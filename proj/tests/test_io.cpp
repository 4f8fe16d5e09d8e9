#include <doctest.h>

#include <sstream>

#include "bngraph/graph_io.hpp"

using namespace bngraph;

TEST_CASE("graph text format") {
  std::istringstream in(
      "# triangle\n"
      "graph 3\n"
      "e 0 1\n"
      "e 1 2 1\n"
      "e 0 2   # third side\n");
  const Multigraph g = parse_graph(in);
  CHECK(g.n() == 3);
  CHECK(g.m() == 3);

  // default multiplicity is 1; explicit multiplicities aggregate
  std::istringstream in2("graph 2\ne 0 1 3\ne 1 0\n");
  CHECK(parse_graph(in2).m() == 4);
}

TEST_CASE("graph parse errors carry line numbers") {
  std::istringstream missing("e 0 1\n");
  CHECK_THROWS_WITH_AS(parse_graph(missing), "line 1: edge before `graph <n>` header",
                       ParseError);

  std::istringstream twice("graph 2\ngraph 2\n");
  CHECK_THROWS_AS(parse_graph(twice), ParseError);

  std::istringstream junk("graph 2\nx 0 1\n");
  try {
    parse_graph(junk);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }

  std::istringstream trailing("graph 2\ne 0 1 1 9\n");
  CHECK_THROWS_AS(parse_graph(trailing), ParseError);

  std::istringstream empty("");
  CHECK_THROWS_AS(parse_graph(empty), ParseError);

  // structurally invalid graphs surface as parse errors too
  std::istringstream loop("graph 2\ne 0 0\n");
  CHECK_THROWS_AS(parse_graph(loop), ParseError);

  CHECK_THROWS_AS(load_graph("/nonexistent/graph.txt"), FileNotFound);
}

TEST_CASE("emit round-trips") {
  const Multigraph g(4, {{0, 1, 2}, {1, 2, 1}, {2, 3, 5}, {0, 3, 1}});
  std::istringstream in(emit_graph(g));
  const Multigraph h = parse_graph(in);
  CHECK(h.n() == g.n());
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v) CHECK(h.mult(u, v) == g.mult(u, v));
  std::istringstream in2(emit_graph(h));
  CHECK(emit_graph(parse_graph(in2)) == emit_graph(g));
}

TEST_CASE("divisor literals") {
  const QVec d = parse_divisor("1,1/2,-3/2");
  REQUIRE(d.size() == 3);
  CHECK(d[0] == Rat(1));
  CHECK(d[1] == Rat(1, 2));
  CHECK(d[2] == Rat(-3, 2));
  CHECK(parse_divisor(" 2 , -1 ")[1] == Rat(-1));
  CHECK_THROWS_AS(parse_divisor("1,x"), std::invalid_argument);
}

TEST_CASE("gauge specs") {
  CHECK(parse_gauge("simplex").kind == Gauge::Kind::Simplex);
  CHECK(parse_gauge("cosimplex").kind == Gauge::Kind::Cosimplex);
  CHECK(parse_gauge("ell1").kind == Gauge::Kind::Ell1);
  const Gauge p = parse_gauge("P:1:3/2");
  CHECK(p.kind == Gauge::Kind::Minkowski);
  CHECK(p.alpha == Rat(1));
  CHECK(p.alpha_bar == Rat(3, 2));
  CHECK_THROWS_AS(parse_gauge("P:0:0"), BadGauge);
  CHECK_THROWS_AS(parse_gauge("euclid"), BadGauge);
  CHECK_THROWS_AS(parse_gauge("P:1"), BadGauge);
}
