#include "bngraph/dhar.hpp"

#include <stdexcept>

namespace bngraph {

namespace {

// Burn from q against the current amounts: v ignites once its edges into
// the fire exceed d[v].  Returns the burnt mask; unburnt == V iff the
// off-q part is superstable.
std::vector<char> burn(const Multigraph& g, const IVec& d, int q) {
  const int n = g.n();
  std::vector<char> burnt(n, 0);
  burnt[q] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (burnt[v]) continue;
      std::int64_t heat = 0;
      for (int u = 0; u < n; ++u)
        if (burnt[u]) heat += g.mult(u, v);
      if (heat > d[v]) {
        burnt[v] = 1;
        changed = true;
      }
    }
  }
  return burnt;
}

}  // namespace

ReduceResult dhar_reduce(const Multigraph& g, const IVec& d, int q) {
  const int n = g.n();
  if (q < 0 || q >= n) throw BadVertexIndex("base vertex out of range");
  if (d.size() != n) throw BadVertexIndex("divisor length does not match graph");
  IVec cur = d;
  IVec f = IVec::Zero(n);

  // Clear any debt off q in a single equivalent move.
  std::int64_t worst = 0;
  for (int v = 0; v < n; ++v)
    if (v != q && cur[v] < worst) worst = cur[v];
  if (worst < 0) {
    const std::int64_t step = g.tree_count();
    const std::int64_t reps = (-worst + step - 1) / step;
    cur += reps * g.debt_clearing_image(q);
    f -= reps * g.debt_clearing_vector(q);
  }

  // Dhar loop: fire the maximal unburnt set as many times as legal.
  for (long guard = 0;; ++guard) {
    if (guard > 100000000L) throw std::logic_error("dhar_reduce did not terminate");
    const std::vector<char> burnt = burn(g, cur, q);
    bool all = true;
    for (int v = 0; v < n; ++v) all = all && burnt[v];
    if (all) break;
    std::int64_t k = 0;
    bool first = true;
    std::vector<std::int64_t> out_deg(n, 0);
    for (int v = 0; v < n; ++v) {
      if (burnt[v]) continue;
      for (int u = 0; u < n; ++u)
        if (burnt[u]) out_deg[v] += g.mult(u, v);
      if (out_deg[v] > 0) {
        const std::int64_t kv = cur[v] / out_deg[v];
        if (first || kv < k) {
          k = kv;
          first = false;
        }
      }
    }
    if (first || k < 1) throw std::logic_error("dhar_reduce: no legal firing");
    for (int v = 0; v < n; ++v) {
      if (burnt[v]) {
        std::int64_t gain = 0;
        for (int u = 0; u < n; ++u)
          if (!burnt[u]) gain += g.mult(u, v);
        cur[v] += k * gain;
      } else {
        cur[v] -= k * out_deg[v];
        f[v] += k;
      }
    }
  }
  // f is defined up to the all-ones kernel; pin the representative with
  // smallest entry zero
  const std::int64_t base = f.minCoeff();
  if (base != 0) f.array() -= base;
  return {cur, f};
}

bool is_equivalent(const Multigraph& g, const IVec& a, const IVec& b, int q) {
  if (degree(a) != degree(b)) return false;
  return dhar_reduce(g, a, q).reduced == dhar_reduce(g, b, q).reduced;
}

bool has_effective_rep(const Multigraph& g, const IVec& d, int q) {
  return dhar_reduce(g, d, q).reduced[q] >= 0;
}

bool is_nonspecial(const Multigraph& g, const IVec& d, int q) {
  return degree(d) == g.genus() - 1 && !has_effective_rep(g, d, q);
}

bool in_laplacian_lattice(const Multigraph& g, const IVec& d) {
  if (degree(d) != 0) return false;
  return dhar_reduce(g, d, 0).reduced.isZero();
}

std::vector<IVec> enumerate_classes(const Multigraph& g, std::int64_t d, int q) {
  const int n = g.n();
  if (q < 0 || q >= n) throw BadVertexIndex("base vertex out of range");
  std::vector<int> off;  // vertices other than q, in index order
  for (int v = 0; v < n; ++v)
    if (v != q) off.push_back(v);

  std::vector<IVec> classes;
  IVec conf = IVec::Zero(n);
  // Odometer over 0 <= c(v) <= val(v)-1 in lexicographic order.
  std::vector<std::int64_t> c(off.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < off.size(); ++i) conf[off[i]] = c[i];
    conf[q] = 0;
    const std::vector<char> burnt = burn(g, conf, q);
    bool superstable = true;
    for (int v = 0; v < n; ++v) superstable = superstable && burnt[v];
    if (superstable) {
      IVec rep = conf;
      std::int64_t s = 0;
      for (std::size_t i = 0; i < off.size(); ++i) s += c[i];
      rep[q] = d - s;
      classes.push_back(rep);
    }
    std::size_t i = off.size();
    while (i > 0) {
      --i;
      if (c[i] + 1 < g.valency(off[i])) {
        ++c[i];
        for (std::size_t j = i + 1; j < off.size(); ++j) c[j] = 0;
        break;
      }
      if (i == 0) return classes;
    }
  }
}

}  // namespace bngraph
