#pragma once
// Chip-firing reduction: q-reduced representatives via Dhar's burning
// algorithm, linear equivalence, and divisor-class enumeration through
// superstable configurations.

#include <vector>

#include "bngraph/multigraph.hpp"

namespace bngraph {

struct ReduceResult {
  IVec reduced;   // the unique q-reduced divisor equivalent to the input
  IVec firings;   // f with  L * f = input - reduced
};

// Total function: works for arbitrary integer divisors, idempotent on
// q-reduced input.
ReduceResult dhar_reduce(const Multigraph& g, const IVec& d, int q);

// deg equal and identical q-reduced forms (q = base).
bool is_equivalent(const Multigraph& g, const IVec& a, const IVec& b, int q = 0);

// The class of d contains an effective divisor iff its q-reduced form is
// non-negative at q as well.
bool has_effective_rep(const Multigraph& g, const IVec& d, int q = 0);

// Degree g-1 and no effective representative (rank -1).
bool is_nonspecial(const Multigraph& g, const IVec& d, int q = 0);

// Membership in the Laplacian lattice: degree 0 and reduces to zero.
bool in_laplacian_lattice(const Multigraph& g, const IVec& d);

// One q-reduced representative per linear-equivalence class of degree d:
// every superstable configuration c off q (0 <= c(v) <= val(v)-1, no
// fireable subset) with coefficient d - deg(c) at q.  Lexicographic in c;
// the count equals the spanning-tree number for every d and q.
std::vector<IVec> enumerate_classes(const Multigraph& g, std::int64_t d, int q);

}  // namespace bngraph
