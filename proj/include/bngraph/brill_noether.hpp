#pragma once
// Brill-Noether numerology, existence scans over divisor classes, gonality
// bounds, and the translators between (r, d) pairs and gauge parameters.

#include <optional>
#include <string>
#include <vector>

#include "bngraph/covering.hpp"
#include "bngraph/quadext.hpp"

namespace bngraph {

// rho(g, r, d) = g - (r+1)(g-d+r)
Rat rho(const Rat& g, const Rat& r, const Rat& d);

// rho~(g, Gamma, r, d) = g - Gamma (r+1)(g-d+r); equals rho at Gamma = 1.
Rat rho_tilde(const Rat& g, std::int64_t gamma, const Rat& r, const Rat& d);

enum class Verdict { ExistenceHolds, ExistenceFails, NotApplicable };
std::string to_string(Verdict v);

struct BNReport {
  std::string graph;
  std::int64_t d = 0;
  std::int64_t max_rank = -1;
  IVec witness;             // lexicographically least reduced rep of max rank
  std::int64_t bn_bound = -1;  // largest r >= 0 with rho(g,r,d) >= 0, or -1
  Verdict verdict = Verdict::NotApplicable;

  std::string json() const;  // stable key order, rationals never involved
};

// Scan all degree-d classes (0 <= d <= 2g-2): max rank, witness, verdict
// ExistenceHolds iff max_rank >= bn_bound when a bound exists.
BNReport bn_scan(const Multigraph& g, std::int64_t d, const NonSpecialSet& ns,
                 const std::string& label = "");

// bn_scan for every degree 0..2g-2, plus the degree-(g-1) consistency link
// with the integral covering radius for the l1 ball.
std::vector<BNReport> verify_existence(const Multigraph& g, const NonSpecialSet& ns,
                                       const std::string& label = "");

// ceil(g(2n*Gamma - 1)/(2n*Gamma) + 2n - 1): upper bound on the gonality.
std::int64_t gonality_bound_approx(const Multigraph& g);

// Upper bound on the k-th gonality over R-divisors:
// dense graphs: ceil(gk/(k+1) + k); otherwise the stretch-factor form
// ceil(g(Gamma(k+1) - 1)/(Gamma(k+1)) + k).
std::int64_t r_gonality_bound(const Multigraph& g, std::int64_t k);

// lambda = (g - d + r)/(r + 1); requires r >= 0, rho >= 0, d <= g-1.
Rat lambda_from_rd(const Rat& g, const Rat& r, const Rat& d);

// r0 = sqrt(g/lambda) - 1 (symbolic), d0 = g + (r0+1)(1-lambda) - 1;
// rho(g, r0, d0) = 0 by exact expansion.  lambda must lie in [1/g, g].
struct RdPair {
  QuadExt r0;
  QuadExt d0;
};
RdPair rd_from_lambda(const Rat& g, const Rat& lambda);

// (2m/n - n/2)^2 >= 4g, exactly.
bool dense_eq_hypothesis(const Multigraph& g);

// Rank lower bounds for K_n at degree g-1: sqrt(g)/sqrt(8) - 1 in general
// and sqrt(g)/sqrt(2) - 1 for odd n, with g = (n-1)(n-2)/2.
struct KnBounds {
  std::int64_t genus;
  QuadExt general;
  QuadExt odd;
};
KnBounds kn_rank_bound(int n);

// floor(sqrt(x)) for x >= 0.
std::int64_t isqrt(std::int64_t x);

// Evidence search: an integer divisor class of rank exactly r with degree
// at most d_max, scanning degrees upward.  Returns the reduced witness.
std::optional<IVec> find_rank_witness(const Multigraph& g, const NonSpecialSet& ns,
                                      std::int64_t r, std::int64_t d_max);

// Evidence search on the half-integer grid around reduced representatives:
// an R-divisor of degree exactly d whose rank_r equals r (rational).
std::optional<QVec> find_real_rank_witness(const Multigraph& g,
                                           const NonSpecialSet& ns, const Rat& r,
                                           std::int64_t d);

}  // namespace bngraph
