#pragma once
// Rank of divisors and R-divisors in the formulations used throughout:
// the brute-force definitional oracle, the non-special-set minimum
// (deg+ over N_G), a recursion-based table for whole-degree scans, and the
// Riemann-Roch identities built on top.

#include <optional>
#include <utility>
#include <vector>

#include "bngraph/orientations.hpp"

namespace bngraph {

// --- closest non-special point -------------------------------------------
//
// Everything below reduces to the l1-nearest point of N_G (the full set,
// representatives plus all lattice translates): for fixed degrees,
// deg+(D - t) = (|D - t|_1 + deg D - (g-1)) / 2.  The searches are
// certified: an upper bound from the orbit representatives bounds every
// competitor coordinatewise, and membership of a candidate is decided by
// Dhar reduction (non-effectiveness at degree g-1).

struct NearestNonspecial {
  IVec point;
  std::int64_t l1;
};
struct NearestNonspecialQ {
  IVec point;
  Rat l1;
};

// Integer centre: exact, by shells of increasing l1 radius.
NearestNonspecial closest_nonspecial_l1(const Multigraph& g, const IVec& centre,
                                        const NonSpecialSet& ns);

// Rational centre: exact, by a bounded box around the centre with
// branch-and-bound pruning.
NearestNonspecialQ closest_nonspecial_l1(const Multigraph& g, const QVec& centre,
                                         const NonSpecialSet& ns);

// --- rank ------------------------------------------------------------------

// Brute force over all effective divisors of each degree; an oracle for
// small instances (n <= 5, |deg| small).
std::int64_t rank_definitional(const Multigraph& g, const IVec& d, int q = 0);

// min over nu in N_G of deg+(D - nu), minus 1.
std::int64_t rank_bn(const Multigraph& g, const IVec& d, const NonSpecialSet& ns);

// Exact rational rank of an R-divisor; restricts to rank_bn on integers,
// 1-Lipschitz in l1.
Rat rank_r(const Multigraph& g, const QVec& d, const NonSpecialSet& ns);

// r~(D) = r(D - (1,...,1)); the minimum runs over Ext^c(G) = N_G + (1,..,1).
Rat modified_rank(const Multigraph& g, const QVec& d, const NonSpecialSet& ns);

// True iff some nu~ in Ext^c(G) has D - nu~ >= 0 coordinatewise.
bool sigma_contains(const Multigraph& g, const QVec& d, const NonSpecialSet& ns);

// r(D) - r(K_G - D) - (deg D - (g-1)); zero for every input.
Rat rr_defect(const Multigraph& g, const QVec& d, const NonSpecialSet& ns);

// r~(D) - r~(K~_G - D) - (deg D - (g_R - 1)) with g_R = m + 1.
Rat rr_defect_v1(const Multigraph& g, const QVec& d, const NonSpecialSet& ns);

// Nearest-integer rounding (ties toward +infinity) away from v0; v0 absorbs
// the remainder so the degree is preserved exactly.  Throws
// NonIntegerDegree unless deg(d) is an integer.
IVec round_divisor(const Multigraph& g, const QVec& d, int v0);

// Least degree with a class of rank >= 1; at most g + 1.
std::int64_t gonality(const Multigraph& g, const NonSpecialSet& ns);

// Rank of every degree-d class, computed by the recursion
// r(D) = 1 + min_v r(D - (v)) over effective-equivalent classes with the
// Dhar effectiveness test as base case.  Independent of the non-special
// search path; pairs align with enumerate_classes order.
std::vector<std::pair<IVec, std::int64_t>> class_ranks(const Multigraph& g,
                                                       std::int64_t d, int q);

}  // namespace bngraph
