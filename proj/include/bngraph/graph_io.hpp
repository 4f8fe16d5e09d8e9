#pragma once
// Text formats shared with the CLI.
//
// Graph file:  line 1 `graph <n>`, then `e <u> <v> [mult]` lines (mult
// defaults to 1), `#` starts a comment, vertices 0-indexed, whitespace
// separated, LF line endings.
//
// Divisor literal: comma-separated rationals, e.g. `1,1/2,-3/2`.
// Gauge spec: `simplex` | `cosimplex` | `ell1` | `P:<alpha>:<alpha_bar>`.

#include <iosfwd>
#include <string>

#include "bngraph/gauge.hpp"
#include "bngraph/multigraph.hpp"

namespace bngraph {

Multigraph parse_graph(std::istream& in);
Multigraph load_graph(const std::string& path);  // FileNotFound on failure
std::string emit_graph(const Multigraph& g);     // canonical round-trip form

QVec parse_divisor(const std::string& literal);
Gauge parse_gauge(const std::string& spec);

}  // namespace bngraph
