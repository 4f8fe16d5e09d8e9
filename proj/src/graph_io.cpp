#include "bngraph/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace bngraph {

Multigraph parse_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank or comment-only
    if (tok == "graph") {
      if (n >= 0) throw ParseError(lineno, "duplicate graph header");
      if (!(ls >> n) || n < 2) throw ParseError(lineno, "expected `graph <n>` with n >= 2");
    } else if (tok == "e") {
      if (n < 0) throw ParseError(lineno, "edge before `graph <n>` header");
      Edge e;
      if (!(ls >> e.u >> e.v)) throw ParseError(lineno, "expected `e <u> <v> [mult]`");
      if (!(ls >> e.mult)) e.mult = 1;
      edges.push_back(e);
    } else {
      throw ParseError(lineno, "unknown directive `" + tok + "`");
    }
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "trailing tokens: `" + extra + "`");
  }
  if (n < 0) throw ParseError(lineno ? lineno : 1, "missing `graph <n>` header");
  try {
    return Multigraph(n, edges);
  } catch (const std::exception& e) {
    throw ParseError(lineno ? lineno : 1, e.what());
  }
}

Multigraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFound("cannot open graph file: " + path);
  return parse_graph(in);
}

std::string emit_graph(const Multigraph& g) {
  std::string out = "graph " + std::to_string(g.n()) + "\n";
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.mult(u, v) > 0)
        out += "e " + std::to_string(u) + " " + std::to_string(v) + " " +
               std::to_string(g.mult(u, v)) + "\n";
  return out;
}

QVec parse_divisor(const std::string& literal) {
  std::vector<Rat> vals;
  std::string cur;
  for (std::size_t i = 0; i <= literal.size(); ++i) {
    if (i == literal.size() || literal[i] == ',') {
      vals.push_back(Rat::parse(cur));
      cur.clear();
    } else if (!std::isspace((unsigned char)literal[i])) {
      cur += literal[i];
    }
  }
  QVec out((Eigen::Index)vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) out[(Eigen::Index)i] = vals[i];
  return out;
}

Gauge parse_gauge(const std::string& spec) {
  if (spec == "simplex") return Gauge::simplex();
  if (spec == "cosimplex") return Gauge::cosimplex();
  if (spec == "ell1") return Gauge::ell1();
  if (spec.rfind("P:", 0) == 0) {
    const auto rest = spec.substr(2);
    const auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw BadGauge("expected P:<alpha>:<alpha_bar>, got `" + spec + "`");
    return Gauge::minkowski(Rat::parse(rest.substr(0, colon)),
                            Rat::parse(rest.substr(colon + 1)));
  }
  throw BadGauge("unknown gauge spec `" + spec + "`");
}

}  // namespace bngraph
