#pragma once
// Typed error conditions surfaced by the library.  The CLI maps them onto
// its exit-code contract; library code throws and never returns sentinels
// (rank = -1 is a mathematical value, not an error).

#include <stdexcept>
#include <string>

namespace bngraph {

struct DisconnectedGraph : std::runtime_error {
  explicit DisconnectedGraph(const std::string& m) : std::runtime_error(m) {}
};
struct LoopEdge : std::runtime_error {
  explicit LoopEdge(const std::string& m) : std::runtime_error(m) {}
};
struct BadVertexIndex : std::runtime_error {
  explicit BadVertexIndex(const std::string& m) : std::runtime_error(m) {}
};
struct BadScale : std::runtime_error {
  explicit BadScale(const std::string& m) : std::runtime_error(m) {}
};
struct DegreeMismatch : std::runtime_error {
  explicit DegreeMismatch(const std::string& m) : std::runtime_error(m) {}
};
struct BadGauge : std::runtime_error {
  explicit BadGauge(const std::string& m) : std::runtime_error(m) {}
};
struct NonIntegerDegree : std::runtime_error {
  explicit NonIntegerDegree(const std::string& m) : std::runtime_error(m) {}
};
struct DegreeOutOfRange : std::runtime_error {
  explicit DegreeOutOfRange(const std::string& m) : std::runtime_error(m) {}
};
struct RhoNegative : std::runtime_error {
  explicit RhoNegative(const std::string& m) : std::runtime_error(m) {}
};
struct DegreeTooHigh : std::runtime_error {
  explicit DegreeTooHigh(const std::string& m) : std::runtime_error(m) {}
};
struct LambdaOutOfRange : std::runtime_error {
  explicit LambdaOutOfRange(const std::string& m) : std::runtime_error(m) {}
};

// A declared precondition of an operation does not hold (e.g. genus >= 1).
struct PreconditionViolation : std::runtime_error {
  explicit PreconditionViolation(const std::string& m) : std::runtime_error(m) {}
};

// Graph/divisor text input errors, with 1-based line numbers where known.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& m)
      : std::runtime_error("line " + std::to_string(line_) + ": " + m), line(line_) {}
};
struct FileNotFound : std::runtime_error {
  explicit FileNotFound(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace bngraph
