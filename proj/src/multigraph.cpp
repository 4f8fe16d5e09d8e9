#include "bngraph/multigraph.hpp"

#include <string>
#include <vector>

#include "bngraph/snf.hpp"

namespace bngraph {

namespace {

IMat reduced_laplacian(const IMat& lap, int q) {
  const Eigen::Index n = lap.rows();
  IMat red(n - 1, n - 1);
  Eigen::Index ri = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i == q) continue;
    Eigen::Index rj = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == q) continue;
      red(ri, rj) = lap(i, j);
      ++rj;
    }
    ++ri;
  }
  return red;
}

}  // namespace

Multigraph::Multigraph(int n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 2) throw BadVertexIndex("need at least 2 vertices, got " + std::to_string(n));
  mult_ = IMat::Zero(n, n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw BadVertexIndex("edge endpoint out of range: (" + std::to_string(e.u) +
                           "," + std::to_string(e.v) + ")");
    if (e.u == e.v) throw LoopEdge("loop at vertex " + std::to_string(e.u));
    if (e.mult < 1)
      throw BadVertexIndex("edge multiplicity must be >= 1, got " +
                           std::to_string(e.mult));
    mult_(e.u, e.v) += e.mult;
    mult_(e.v, e.u) += e.mult;
  }
  m_ = 0;
  val_.assign(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) val_[u] += mult_(u, v);
    m_ += val_[u];
  }
  m_ /= 2;

  // connectivity
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v) {
      if (!seen[v] && mult_(u, v) > 0) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  if (reached != n) {
    for (int v = 0; v < n; ++v)
      if (!seen[v]) throw DisconnectedGraph("vertex " + std::to_string(v) +
                                            " is not reachable from vertex 0");
  }

  const IMat lap = laplacian(*this);
  tree_count_ = bareiss_det(reduced_laplacian(lap, 0));

  // Stretch factor of a connected multigraph never exceeds n + 3.
  if (stretch_factor(*this) > n_ + 3)
    throw std::logic_error("stretch factor bound violated");

  // Debt-clearing vectors: solve L~_q y = (1,...,1) and scale by the tree
  // count; the scaled solution is the adjugate row sum, hence integral.
  jolt_.resize(n);
  jolt_image_.resize(n);
  for (int q = 0; q < n; ++q) {
    const IMat red = reduced_laplacian(lap, q);
    QMat a(n - 1, n - 1);
    QVec b(n - 1);
    for (Eigen::Index i = 0; i < n - 1; ++i) {
      b[i] = Rat(1);
      for (Eigen::Index j = 0; j < n - 1; ++j) a(i, j) = Rat(red(i, j));
    }
    const QVec y = solve_linear(a, b);
    IVec h = IVec::Zero(n);
    Eigen::Index k = 0;
    for (int v = 0; v < n; ++v) {
      if (v == q) continue;
      const Rat hv = y[k++] * Rat(tree_count_);
      if (!hv.is_integer()) throw std::logic_error("adjugate solve is not integral");
      h[v] = hv.num();
    }
    IVec img(n);
    for (int v = 0; v < n; ++v) {
      __int128 s = 0;
      for (int u = 0; u < n; ++u) s += (__int128)lap(v, u) * h[u];
      if (s > INT64_MAX || s < INT64_MIN)
        throw std::overflow_error("debt-clearing image overflow");
      img[v] = (std::int64_t)s;
    }
    jolt_[q] = std::move(h);
    jolt_image_[q] = std::move(img);
  }
}

IMat laplacian(const Multigraph& g) {
  const int n = g.n();
  IMat lap = IMat::Zero(n, n);
  for (int u = 0; u < n; ++u) {
    lap(u, u) = g.valency(u);
    for (int v = 0; v < n; ++v)
      if (v != u) lap(u, v) = -g.mult(u, v);
  }
  return lap;
}

std::vector<IVec> laplacian_lattice_basis(const Multigraph& g) {
  const IMat lap = laplacian(g);
  std::vector<IVec> basis;
  basis.reserve(g.n() - 1);
  for (int i = 0; i + 1 < g.n(); ++i) basis.push_back(lap.row(i).transpose());
  return basis;
}

IVec canonical_divisor(const Multigraph& g) {
  IVec k(g.n());
  for (int v = 0; v < g.n(); ++v) k[v] = g.valency(v) - 2;
  return k;
}

IVec modified_canonical(const Multigraph& g) {
  IVec k(g.n());
  for (int v = 0; v < g.n(); ++v) k[v] = g.valency(v);
  return k;
}

std::int64_t stretch_factor(const Multigraph& g) {
  const std::int64_t n = g.n();
  const std::int64_t target = n * n + n - 1;
  const std::int64_t c = (target + g.m() - 1) / g.m();
  return c > 1 ? c : 1;
}

bool is_dense(const Multigraph& g) {
  const std::int64_t n = g.n();
  return g.m() > n * n + n - 1;
}

Multigraph scale_graph(const Multigraph& g, std::int64_t beta) {
  if (beta < 1) throw BadScale("scale factor must be >= 1, got " + std::to_string(beta));
  std::vector<Edge> edges;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.mult(u, v) > 0) edges.push_back({u, v, beta * g.mult(u, v)});
  return Multigraph(g.n(), edges);
}

std::int64_t lattice_index_in_root_lattice(const Multigraph& g) {
  // Express each basis row in the root-lattice basis a_i = e_i - e_{i+1}
  // (coefficients are prefix sums), then take the Smith normal form.
  const std::vector<IVec> basis = laplacian_lattice_basis(g);
  const int n = g.n();
  IMat c(n - 1, n - 1);
  for (int i = 0; i < n - 1; ++i) {
    std::int64_t prefix = 0;
    for (int k = 0; k < n - 1; ++k) {
      prefix += basis[i][k];
      c(i, k) = prefix;
    }
  }
  const SmithResult snf = smith_normal_form(c);
  std::int64_t idx = 1;
  for (std::int64_t d : snf.invariants) idx *= d;
  return idx < 0 ? -idx : idx;
}

}  // namespace bngraph
