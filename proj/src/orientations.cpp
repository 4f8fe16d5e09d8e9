#include "bngraph/orientations.hpp"

#include <algorithm>
#include <set>

namespace bngraph {

namespace {

std::vector<std::vector<char>> bits_from_order(const Multigraph& g,
                                               const std::vector<int>& order) {
  // order[k] = k-th vertex; every pair points to the earlier vertex.
  const int n = g.n();
  std::vector<int> pos(n);
  for (int k = 0; k < n; ++k) pos[order[k]] = k;
  std::vector<std::vector<char>> bits(n, std::vector<char>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.mult(u, v) > 0) bits[u][v] = pos[u] < pos[v] ? 1 : 0;
  return bits;
}

IVec indegree_of(const Multigraph& g, const std::vector<std::vector<char>>& bits) {
  const int n = g.n();
  IVec indeg = IVec::Zero(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.mult(u, v) > 0) {
        if (bits[u][v])
          indeg[u] += g.mult(u, v);
        else
          indeg[v] += g.mult(u, v);
      }
  return indeg;
}

bool unique_sink_at(const Multigraph& g, const std::vector<std::vector<char>>& bits,
                    int q) {
  // sink: no outgoing pair
  const int n = g.n();
  for (int v = 0; v < n; ++v) {
    bool sink = true;
    for (int u = 0; u < n && sink; ++u) {
      if (u == v || g.mult(std::min(u, v), std::max(u, v)) == 0) continue;
      const bool v_to_u =
          v < u ? bits[v][u] == 0 : bits[u][v] == 1;  // edge leaves v
      if (v_to_u) sink = false;
    }
    if (sink != (v == q)) return false;
  }
  return true;
}

}  // namespace

std::vector<Orientation> acyclic_orientations_with_sink(const Multigraph& g, int q) {
  const int n = g.n();
  if (q < 0 || q >= n) throw BadVertexIndex("base vertex out of range");
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (v != q) rest.push_back(v);

  std::set<std::vector<std::vector<char>>> seen;
  std::sort(rest.begin(), rest.end());
  do {
    std::vector<int> order;
    order.reserve(n);
    order.push_back(q);
    order.insert(order.end(), rest.begin(), rest.end());
    auto bits = bits_from_order(g, order);
    if (!unique_sink_at(g, bits, q)) continue;
    seen.insert(std::move(bits));
  } while (std::next_permutation(rest.begin(), rest.end()));

  std::vector<Orientation> out;
  out.reserve(seen.size());
  for (const auto& bits : seen) out.push_back({bits, indegree_of(g, bits)});
  return out;
}

IVec orientation_divisor(const Orientation& o) {
  IVec d = o.indegree;
  for (Eigen::Index v = 0; v < d.size(); ++v) d[v] -= 1;
  return d;
}

NonSpecialSet nonspecial_set(const Multigraph& g, int q) {
  if (g.genus() < 1)
    throw PreconditionViolation("nonspecial_set requires genus >= 1");
  NonSpecialSet out;
  out.base_vertex = q;
  out.lattice_basis = laplacian_lattice_basis(g);

  std::set<IVec, IVecLess> reduced_forms;
  for (const Orientation& o : acyclic_orientations_with_sink(g, q)) {
    IVec rep = orientation_divisor(o);
    if (degree(rep) != g.genus() - 1)
      throw std::logic_error("orientation divisor has wrong degree");
    if (!is_nonspecial(g, rep, q))
      throw std::logic_error("orientation divisor has an effective representative");
    reduced_forms.insert(dhar_reduce(g, rep, q).reduced);
    out.reps.push_back(std::move(rep));
  }
  if (reduced_forms.size() != out.reps.size())
    throw std::logic_error("non-special representatives are not pairwise inequivalent");
  return out;
}

std::pair<std::vector<QVec>, std::vector<QVec>> crit_points(const Multigraph& g, int q) {
  const NonSpecialSet ns = nonspecial_set(g, q);
  const QVec pk = project(to_rational(canonical_divisor(g)), Rat(0));
  std::vector<QVec> crit, crit_bar;
  crit.reserve(ns.reps.size());
  crit_bar.reserve(ns.reps.size());
  for (const IVec& rep : ns.reps) {
    QVec c = project(to_rational(rep), Rat(0));
    QVec cb = c;
    for (Eigen::Index i = 0; i < cb.size(); ++i) cb[i] -= pk[i];
    crit.push_back(std::move(c));
    crit_bar.push_back(std::move(cb));
  }
  return {crit, crit_bar};
}

}  // namespace bngraph
