#pragma once
// Undirected connected loopless multigraph with a fixed 0-indexed vertex
// order.  All vectors in the library are indexed by that order.  Instances
// are immutable after construction and safe to share across threads.

#include <tuple>
#include <vector>

#include "bngraph/errors.hpp"
#include "bngraph/types.hpp"

namespace bngraph {

struct Edge {
  int u;
  int v;
  std::int64_t mult = 1;
};

class Multigraph {
 public:
  // Validates: n >= 2, indices in range, no loops, multiplicities >= 1,
  // connectivity.  Repeated (u,v) entries aggregate.
  Multigraph(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  std::int64_t m() const { return m_; }
  std::int64_t genus() const { return m_ - n_ + 1; }
  std::int64_t mult(int u, int v) const { return mult_(u, v); }
  std::int64_t valency(int v) const { return val_[v]; }

  // Number of spanning trees (= determinant of any reduced Laplacian,
  // = order of the divisor class group in each degree).
  std::int64_t tree_count() const { return tree_count_; }

  // Integer vector h with h[q] = 0 and (L h)(v) = tree_count() for every
  // v != q; used to clear arbitrary debt off q in one chip-firing move.
  const IVec& debt_clearing_vector(int q) const { return jolt_[q]; }
  const IVec& debt_clearing_image(int q) const { return jolt_image_[q]; }

 private:
  int n_;
  std::int64_t m_;
  IMat mult_;
  std::vector<std::int64_t> val_;
  std::int64_t tree_count_;
  std::vector<IVec> jolt_;
  std::vector<IVec> jolt_image_;
};

inline Multigraph new_multigraph(int n, const std::vector<Edge>& edges) {
  return Multigraph(n, edges);
}

inline std::int64_t genus(const Multigraph& g) { return g.genus(); }

// Diagonal = valencies, off-diagonal = -mult(u,v); symmetric, rows sum to 0.
IMat laplacian(const Multigraph& g);

// First n-1 Laplacian rows: a basis of the Laplacian lattice L_G, a
// full-rank sublattice of the root lattice A_{n-1}.
std::vector<IVec> laplacian_lattice_basis(const Multigraph& g);

// K_G: coefficient val(v) - 2 at each vertex; degree 2g - 2.
IVec canonical_divisor(const Multigraph& g);

// K~_G: coefficient val(v); degree 2m = 2(g_R - 1) with g_R = m + 1.
IVec modified_canonical(const Multigraph& g);

// Gamma = max(ceil((n^2+n-1)/m), 1); equals 1 exactly for dense graphs.
std::int64_t stretch_factor(const Multigraph& g);

// m > n^2 + n - 1, equivalently g > n^2.
bool is_dense(const Multigraph& g);

// Same vertices, every multiplicity scaled by beta >= 1.
Multigraph scale_graph(const Multigraph& g, std::int64_t beta);

// Index of L_G inside A_{n-1}, via Smith normal form of the change of
// basis; equals the spanning-tree count.
std::int64_t lattice_index_in_root_lattice(const Multigraph& g);

}  // namespace bngraph
