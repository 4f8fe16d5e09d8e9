#pragma once
// Acyclic orientations with a unique fixed sink and the non-special set
// built from their indegree divisors.

#include <vector>

#include "bngraph/dhar.hpp"
#include "bngraph/multigraph.hpp"

namespace bngraph {

// One direction bit per adjacent vertex pair; in an acyclic orientation all
// parallel edges of a pair share a direction.
struct Orientation {
  // toward_smaller(u,v) for u < v: true if the edges point u <- v.
  std::vector<std::vector<char>> toward_lower;
  IVec indegree;
};

// All acyclic orientations whose unique sink is q, enumerated through
// topological orders (q first) and deduplicated; lexicographic order on the
// direction bits.  The count is independent of q.
std::vector<Orientation> acyclic_orientations_with_sink(const Multigraph& g, int q);

// Coefficient indeg(v) - 1 at every vertex; degree m - n = g - 1.
IVec orientation_divisor(const Orientation& o);

struct NonSpecialSet {
  int base_vertex = 0;
  std::vector<IVec> reps;          // one divisor per orbit of L_G on N_G
  std::vector<IVec> lattice_basis; // first n-1 Laplacian rows
};

// Orbit representatives of the divisors of degree g-1 and rank -1.
// Verified at construction: every rep non-special, all reps pairwise
// inequivalent.  Requires g >= 1.
NonSpecialSet nonspecial_set(const Multigraph& g, int q = 0);

// (Crit_simplex, Crit_cosimplex): projections pi_0 of the reps, and the
// same list shifted by -pi_0(K_G).
std::pair<std::vector<QVec>, std::vector<QVec>> crit_points(const Multigraph& g, int q = 0);

}  // namespace bngraph
