#include "bngraph/covering.hpp"

#include <stdexcept>

#include "bngraph/snf.hpp"

namespace bngraph {

namespace {

QVec ones_scaled(int n, const Rat& v) {
  QVec out(n);
  for (int i = 0; i < n; ++i) out[i] = v;
  return out;
}

// Solve sum_i f_i * basis_i = ell exactly; member iff consistent with
// integral coefficients.
bool lattice_contains(const std::vector<IVec>& basis, const IVec& ell) {
  const int n = (int)ell.size();
  const int k = (int)basis.size();
  QMat a(n, k);
  QVec b(n);
  for (int r = 0; r < n; ++r) {
    b[r] = Rat(ell[r]);
    for (int c = 0; c < k; ++c) a(r, c) = Rat(basis[c][r]);
  }
  // row-reduce [a | b]
  int row = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < k && row < n; ++c) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (!a(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    a.row(row).swap(a.row(piv));
    std::swap(b[row], b[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == row || a(r, c).is_zero()) continue;
      const Rat f = a(r, c) / a(row, c);
      for (int cc = c; cc < k; ++cc) a(r, cc) -= f * a(row, cc);
      b[r] -= f * b[row];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (int r = row; r < n; ++r)
    if (!b[r].is_zero()) return false;  // inconsistent
  for (int r = 0; r < row; ++r) {
    const Rat f = b[r] / a(r, pivot_col[r]);
    if (!f.is_integer()) return false;
  }
  return true;
}

std::int64_t integer_degree_or_throw(const QVec& v) {
  const Rat d = degree(v);
  if (!d.is_integer())
    throw std::logic_error("target hyperplane degree is not an integer");
  return d.num();
}

}  // namespace

DiscreteTarget target_nonspecial(const Multigraph& g, const NonSpecialSet& ns) {
  DiscreteTarget t;
  for (const IVec& rep : ns.reps) t.reps.push_back(to_rational(rep));
  t.lattice_basis = ns.lattice_basis;
  t.view = DiscreteTarget::View::NonspecialShifted;
  t.graph = &g;
  t.base_vertex = ns.base_vertex;
  t.shift = ones_scaled(g.n(), Rat(0));
  return t;
}

DiscreteTarget target_crit_simplex(const Multigraph& g, const NonSpecialSet& ns) {
  DiscreteTarget t = target_nonspecial(g, ns);
  const Rat s = Rat(g.genus() - 1, g.n());
  for (QVec& rep : t.reps)
    for (Eigen::Index i = 0; i < rep.size(); ++i) rep[i] -= s;
  t.shift = ones_scaled(g.n(), s);
  return t;
}

DiscreteTarget target_crit_cosimplex(const Multigraph& g, const NonSpecialSet& ns) {
  DiscreteTarget t = target_crit_simplex(g, ns);
  const QVec pk = project(to_rational(canonical_divisor(g)), Rat(0));
  for (QVec& rep : t.reps)
    for (Eigen::Index i = 0; i < rep.size(); ++i) rep[i] -= pk[i];
  for (Eigen::Index i = 0; i < t.shift.size(); ++i) t.shift[i] += pk[i];
  return t;
}

DiscreteTarget target_lattice(const Multigraph& g) {
  DiscreteTarget t;
  t.reps.push_back(ones_scaled(g.n(), Rat(0)));
  t.lattice_basis = laplacian_lattice_basis(g);
  t.view = DiscreteTarget::View::LatticeShifted;
  t.graph = &g;
  t.shift = ones_scaled(g.n(), Rat(0));
  return t;
}

Rat h_value(const Gauge& c, const DiscreteTarget& t, const QVec& p) {
  if (t.reps.empty()) throw std::invalid_argument("target without representatives");
  const int n = (int)p.size();
  if ((int)t.reps.front().size() != n)
    throw DegreeMismatch("point dimension does not match target");
  if (degree(p) != degree(t.reps.front()))
    throw DegreeMismatch("point degree " + degree(p).str() +
                         " does not match target degree " +
                         degree(t.reps.front()).str());

  Rat best = gauge_distance(c, p, t.reps.front());
  for (const QVec& rep : t.reps) best = min(best, gauge_distance(c, p, rep));
  if (best.is_zero()) return best;

  const auto [reach_lo, reach_hi] = gauge_coordinate_reach(c, n);

  if (t.view != DiscreteTarget::View::Explicit) {
    // Candidates are u = t + shift with u integral in N_G resp. L_G; the
    // box around p + shift holds every candidate within distance best.
    const Multigraph& g = *t.graph;
    QVec centre(n);
    for (int i = 0; i < n; ++i) centre[i] = p[i] + t.shift[i];
    const std::int64_t want = integer_degree_or_throw(centre);
    std::vector<std::int64_t> lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
      lo[i] = (centre[i] - best * reach_lo).ceil();
      hi[i] = (centre[i] + best * reach_hi).floor();
    }
    std::vector<std::int64_t> suffix_lo(n + 1, 0), suffix_hi(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) {
      suffix_lo[i] = suffix_lo[i + 1] + lo[i];
      suffix_hi[i] = suffix_hi[i + 1] + hi[i];
    }
    IVec u(n);
    auto rec = [&](auto&& self, int i, std::int64_t rest) -> void {
      if (i == n - 1) {
        if (rest < lo[i] || rest > hi[i]) return;
        u[i] = rest;
        QVec cand(n);
        for (int j = 0; j < n; ++j) cand[j] = Rat(u[j]) - t.shift[j];
        const Rat d = gauge_distance(c, p, cand);
        if (d >= best) return;
        const bool member =
            t.view == DiscreteTarget::View::NonspecialShifted
                ? is_nonspecial(g, u, t.base_vertex)
                : in_laplacian_lattice(g, u);
        if (member) best = d;
        return;
      }
      if (rest - suffix_hi[i + 1] > hi[i] || rest - suffix_lo[i + 1] < lo[i]) return;
      for (std::int64_t v = lo[i]; v <= hi[i]; ++v) {
        u[i] = v;
        self(self, i + 1, rest - v);
      }
    };
    rec(rec, 0, want);
    return best;
  }

  // Explicit view: per-representative closest-vector search in the lattice.
  for (const QVec& rep : t.reps) {
    QVec x(n);
    for (int i = 0; i < n; ++i) x[i] = p[i] - rep[i];
    std::vector<std::int64_t> lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
      lo[i] = (x[i] - best * reach_lo).ceil();
      hi[i] = (x[i] + best * reach_hi).floor();
    }
    std::vector<std::int64_t> suffix_lo(n + 1, 0), suffix_hi(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) {
      suffix_lo[i] = suffix_lo[i + 1] + lo[i];
      suffix_hi[i] = suffix_hi[i + 1] + hi[i];
    }
    IVec ell(n);
    auto rec = [&](auto&& self, int i, std::int64_t rest) -> void {
      if (i == n - 1) {
        if (rest < lo[i] || rest > hi[i]) return;
        ell[i] = rest;
        QVec cand(n);
        for (int j = 0; j < n; ++j) cand[j] = rep[j] + Rat(ell[j]);
        const Rat d = gauge_distance(c, p, cand);
        if (d >= best) return;
        if (lattice_contains(t.lattice_basis, ell)) best = d;
        return;
      }
      if (rest - suffix_hi[i + 1] > hi[i] || rest - suffix_lo[i + 1] < lo[i]) return;
      for (std::int64_t v = lo[i]; v <= hi[i]; ++v) {
        ell[i] = v;
        self(self, i + 1, rest - v);
      }
    };
    rec(rec, 0, 0);
  }
  return best;
}

Rat integral_covering_radius(const Multigraph& g, const Gauge& c,
                             const NonSpecialSet& ns) {
  if (g.genus() < 1)
    throw PreconditionViolation("integral covering radius requires genus >= 1");
  const std::vector<IVec> classes = enumerate_classes(g, g.genus() - 1, ns.base_vertex);
  Rat best = 0;
  if (c.kind == Gauge::Kind::Ell1) {
    for (const IVec& rep : classes) {
      const NearestNonspecial near = closest_nonspecial_l1(g, rep, ns);
      best = max(best, Rat(near.l1));
    }
    return best;
  }
  const DiscreteTarget target = target_nonspecial(g, ns);
  for (const IVec& rep : classes) best = max(best, h_value(c, target, to_rational(rep)));
  return best;
}

Rat integral_covering_radius_via_rank(const Multigraph& g, int q) {
  if (g.genus() < 1)
    throw PreconditionViolation("integral covering radius requires genus >= 1");
  std::int64_t best = -1;
  for (const auto& [rep, rank] : class_ranks(g, g.genus() - 1, q))
    if (rank > best) best = rank;
  return Rat(2 * (best + 1));
}

CoveringBound covering_lower_certificate(const Multigraph& g, const Gauge& c,
                                         const NonSpecialSet& ns) {
  if (g.genus() < 1)
    throw PreconditionViolation("covering bound requires genus >= 1");
  const DiscreteTarget target = target_nonspecial(g, ns);
  const QVec pk = project(to_rational(canonical_divisor(g)), Rat(g.genus() - 1));
  const Rat at_canonical = h_value(c, target, pk);

  const Rat simplicial_cov = Rat(g.m(), g.n());  // Cov(simplex) = Cov(cosimplex)
  Rat conversion;
  switch (c.kind) {
    case Gauge::Kind::Simplex:
    case Gauge::Kind::Cosimplex:
      conversion = simplicial_cov;
      break;
    case Gauge::Kind::Ell1:
      // P(1,1) = 2n * (l1 unit ball), so the conversion bound scales by 2n.
      conversion = Rat(2 * g.n()) * simplicial_cov / Rat(g.n());
      break;
    case Gauge::Kind::Minkowski: {
      const Rat lhs = simplicial_cov / (c.alpha_bar * Rat(g.n() - 1) + c.alpha);
      const Rat rhs = simplicial_cov / (c.alpha * Rat(g.n() - 1) + c.alpha_bar);
      conversion = max(lhs, rhs);
      break;
    }
  }
  CoveringBound out;
  out.h_at_canonical = at_canonical;
  out.norm_conversion = conversion;
  out.value = max(at_canonical, conversion);
  out.exact = c.kind == Gauge::Kind::Simplex || c.kind == Gauge::Kind::Cosimplex;
  return out;
}

Rat covering_radius_sampled(const Multigraph& g, const Gauge& c,
                            const NonSpecialSet& ns, int resolution) {
  if (resolution < 1)
    throw PreconditionViolation("grid resolution must be >= 1");
  if (g.genus() < 1)
    throw PreconditionViolation("covering radius requires genus >= 1");
  const DiscreteTarget target = target_nonspecial(g, ns);
  const int n = g.n();
  const std::vector<IVec>& basis = ns.lattice_basis;
  const Rat shift = Rat(g.genus() - 1, n);

  Rat best = 0;
  std::vector<int> idx(basis.size(), 0);
  while (true) {
    QVec p = ones_scaled(n, shift);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (idx[b] == 0) continue;
      const Rat coef = Rat(idx[b], resolution);
      for (int i = 0; i < n; ++i) p[i] += coef * Rat(basis[b][i]);
    }
    best = max(best, h_value(c, target, p));
    std::size_t b = 0;
    while (b < idx.size() && ++idx[b] == resolution) idx[b++] = 0;
    if (b == idx.size()) break;
  }
  return best;
}

Rat rank_geometric(const Multigraph& g, const QVec& d, const NonSpecialSet& ns) {
  const int n = g.n();
  const Rat deg_d = degree(d);
  const Rat gm1 = Rat(g.genus() - 1);
  // Dilation parameters affine in k: alpha(k) = (k+s)/n, bar(k) = (k+sb)/n.
  const Rat s = deg_d <= gm1 ? Rat(0) : deg_d - gm1;
  const Rat sb = deg_d <= gm1 ? gm1 - deg_d : Rat(0);
  const QVec pi = project(d, gm1);

  // Containment of pi in P(alpha(k), bar(k))(nu) holds iff
  //   f(k) = sum_i max(-(k+s)/n, x_i - (k+sb)/n) <= 0,  x = pi - nu;
  // every term has slope -1/n, so the root is max(0, f(0) scaled).
  auto min_dilation = [&](const IVec& nu) {
    Rat f0 = 0;
    for (int i = 0; i < n; ++i) {
      const Rat xi = pi[i] - Rat(nu[i]);
      f0 += max(-s / Rat(n), xi - sb / Rat(n));
    }
    return max(Rat(0), f0);
  };

  Rat best = min_dilation(ns.reps.front());
  for (const IVec& rep : ns.reps) best = min(best, min_dilation(rep));

  // Any nu with dilation <= best has every coordinate of x bounded.
  const Rat x_hi = best + (Rat(n - 1) * s + sb) / Rat(n);
  std::vector<std::int64_t> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    lo[i] = (pi[i] - x_hi).ceil();
    hi[i] = (pi[i] + Rat(n - 1) * x_hi).floor();
  }
  std::vector<std::int64_t> suffix_lo(n + 1, 0), suffix_hi(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    suffix_lo[i] = suffix_lo[i + 1] + lo[i];
    suffix_hi[i] = suffix_hi[i + 1] + hi[i];
  }
  const std::int64_t want = g.genus() - 1;
  IVec u(n);
  auto rec = [&](auto&& self, int i, std::int64_t rest) -> void {
    if (i == n - 1) {
      if (rest < lo[i] || rest > hi[i]) return;
      u[i] = rest;
      const Rat k = min_dilation(u);
      if (k >= best) return;
      if (is_nonspecial(g, u, ns.base_vertex)) best = k;
      return;
    }
    if (rest - suffix_hi[i + 1] > hi[i] || rest - suffix_lo[i + 1] < lo[i]) return;
    for (std::int64_t v = lo[i]; v <= hi[i]; ++v) {
      u[i] = v;
      self(self, i + 1, rest - v);
    }
  };
  rec(rec, 0, want);

  return deg_d <= gm1 ? best - Rat(1) : deg_d - Rat(g.genus()) + best;
}

}  // namespace bngraph
