#pragma once
// Distance-to-target functions h_{C,T}, covering-radius computations
// (exact integral, certified lower bounds, grid-sampled estimates) and the
// polytope-containment form of the rank.

#include <vector>

#include "bngraph/gauge.hpp"
#include "bngraph/rank.hpp"

namespace bngraph {

// A discrete subset of a degree hyperplane carrying the translation action
// of the Laplacian lattice: orbit representatives plus a basis.  Targets
// that are affine shifts of the non-special set or of the lattice itself
// carry a membership oracle so that h-value searches can test candidates
// with a single Dhar reduction.
struct DiscreteTarget {
  enum class View { Explicit, NonspecialShifted, LatticeShifted };

  std::vector<QVec> reps;
  std::vector<IVec> lattice_basis;

  View view = View::Explicit;
  const Multigraph* graph = nullptr;
  int base_vertex = 0;
  QVec shift;  // member t of T  <=>  t + shift lies in N_G (resp. L_G)
};

DiscreteTarget target_nonspecial(const Multigraph& g, const NonSpecialSet& ns);
DiscreteTarget target_crit_simplex(const Multigraph& g, const NonSpecialSet& ns);
DiscreteTarget target_crit_cosimplex(const Multigraph& g, const NonSpecialSet& ns);
DiscreteTarget target_lattice(const Multigraph& g);

// h_{C,T}(p) = min over the full set T (reps + lattice) of d_C(p, t),
// computed exactly by a bounded box search; the box is certified by the
// coordinate reach of the gauge at the best representative distance.
Rat h_value(const Gauge& c, const DiscreteTarget& t, const QVec& p);

// Max of h over one integer point per degree-(g-1) class.  Exact.
Rat integral_covering_radius(const Multigraph& g, const Gauge& c,
                             const NonSpecialSet& ns);

// Same quantity for the l1 gauge through the rank recursion:
// 2 * (max rank over degree-(g-1) classes + 1).  Independent route used to
// cross-check integral_covering_radius.
Rat integral_covering_radius_via_rank(const Multigraph& g, int q);

struct CoveringBound {
  Rat value;              // max(h_at_canonical, norm_conversion)
  bool exact;             // true for the simplex gauges, where value = m/n
  Rat h_at_canonical;     // h at the projection of K_G to degree g-1
  Rat norm_conversion;    // simplicial covering radii m/n through the
                          // norm-conversion inequality
};

// Certified lower bound on the covering radius of N_G.
CoveringBound covering_lower_certificate(const Multigraph& g, const Gauge& c,
                                         const NonSpecialSet& ns);

// Max of h over a rational grid (denominator = resolution) of the
// fundamental parallelepiped translated into the degree-(g-1) hyperplane.
// A lower bound on the covering radius, nondecreasing in the resolution.
Rat covering_radius_sampled(const Multigraph& g, const Gauge& c,
                            const NonSpecialSet& ns, int resolution);

// Rank through polytope containment: the minimal dilation k such that the
// projection of D to degree g-1 lies in some P(., .)(nu), both dilation
// parameters affine in k.  Agrees with rank_r everywhere.
Rat rank_geometric(const Multigraph& g, const QVec& d, const NonSpecialSet& ns);

}  // namespace bngraph
