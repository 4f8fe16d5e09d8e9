#include "bngraph/rank.hpp"

#include <map>
#include <stdexcept>

namespace bngraph {

namespace {

// All z in Z^n with sum(z) == target_sum and sum|z| == radius, visited in
// lexicographic order; stops early once visit returns true.
template <typename Visit>
bool for_each_shell_point(int n, std::int64_t target_sum, std::int64_t radius,
                          Visit&& visit) {
  IVec z(n);
  // feasible(left_abs, left_sum): |left_sum| <= left_abs, same parity
  auto feasible = [](std::int64_t abs_left, std::int64_t sum_left) {
    const std::int64_t a = sum_left < 0 ? -sum_left : sum_left;
    return a <= abs_left && ((abs_left - a) % 2 == 0);
  };
  auto rec = [&](auto&& self, int i, std::int64_t abs_left,
                 std::int64_t sum_left) -> bool {
    if (i == n - 1) {
      const std::int64_t a = sum_left < 0 ? -sum_left : sum_left;
      if (a != abs_left) return false;
      z[i] = sum_left;
      return visit(z);
    }
    for (std::int64_t v = -abs_left; v <= abs_left; ++v) {
      const std::int64_t av = v < 0 ? -v : v;
      if (!feasible(abs_left - av, sum_left - v)) continue;
      z[i] = v;
      if (self(self, i + 1, abs_left - av, sum_left - v)) return true;
    }
    return false;
  };
  if (!feasible(radius, target_sum)) return false;
  return rec(rec, 0, radius, target_sum);
}

}  // namespace

NearestNonspecial closest_nonspecial_l1(const Multigraph& g, const IVec& centre,
                                        const NonSpecialSet& ns) {
  const int n = g.n();
  const std::int64_t sigma = degree(centre) - (g.genus() - 1);
  std::int64_t ub = -1;
  for (const IVec& rep : ns.reps) {
    const std::int64_t d = l1_norm(IVec(centre - rep));
    if (ub < 0 || d < ub) ub = d;
  }
  const std::int64_t start = sigma < 0 ? -sigma : sigma;
  for (std::int64_t s = start; s <= ub; s += 2) {
    IVec hit;
    const bool found = for_each_shell_point(n, sigma, s, [&](const IVec& z) {
      IVec t = centre - z;
      if (is_nonspecial(g, t, ns.base_vertex)) {
        hit = std::move(t);
        return true;
      }
      return false;
    });
    if (found) return {hit, s};
  }
  throw std::logic_error("closest_nonspecial_l1: representative bound missed");
}

NearestNonspecialQ closest_nonspecial_l1(const Multigraph& g, const QVec& centre,
                                         const NonSpecialSet& ns) {
  const int n = g.n();
  IVec centre_int;
  if (integral(centre, &centre_int)) {
    const NearestNonspecial near = closest_nonspecial_l1(g, centre_int, ns);
    return {near.point, Rat(near.l1)};
  }

  auto dist_to = [&](const IVec& point) {
    Rat s = 0;
    for (int i = 0; i < n; ++i) s += abs(centre[i] - Rat(point[i]));
    return s;
  };

  // Seed candidates: the orbit representatives themselves, and the nearest
  // non-special point of the rounded centre.
  Rat best = dist_to(ns.reps.front());
  IVec best_t = ns.reps.front();
  for (const IVec& rep : ns.reps) {
    const Rat d = dist_to(rep);
    if (d < best) {
      best = d;
      best_t = rep;
    }
  }
  IVec rounded(n);
  for (int i = 0; i < n; ++i) rounded[i] = centre[i].round_half_up();
  {
    const NearestNonspecial near = closest_nonspecial_l1(g, rounded, ns);
    const Rat d = dist_to(near.point);
    if (d < best) {
      best = d;
      best_t = near.point;
    }
  }

  // Bounded box around the centre; every competitor strictly inside the
  // current bound lies inside it.
  std::vector<std::int64_t> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    lo[i] = (centre[i] - best).ceil();
    hi[i] = (centre[i] + best).floor();
  }
  const std::int64_t want = g.genus() - 1;

  IVec t(n);
  std::vector<std::int64_t> suffix_lo(n + 1, 0), suffix_hi(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    suffix_lo[i] = suffix_lo[i + 1] + lo[i];
    suffix_hi[i] = suffix_hi[i + 1] + hi[i];
  }
  QVec suffix_centre_sum(n + 1);
  suffix_centre_sum[n] = Rat(0);
  for (int i = n - 1; i >= 0; --i)
    suffix_centre_sum[i] = suffix_centre_sum[i + 1] + centre[i];

  auto rec = [&](auto&& self, int i, std::int64_t rest_sum, Rat partial) -> void {
    if (partial >= best) return;
    if (i == n - 1) {
      if (rest_sum < lo[i] || rest_sum > hi[i]) return;
      t[i] = rest_sum;
      const Rat d = partial + abs(Rat(rest_sum) - centre[i]);
      if (d >= best) return;
      if (is_nonspecial(g, t, ns.base_vertex)) {
        best = d;
        best_t = t;
      }
      return;
    }
    if (rest_sum - suffix_hi[i + 1] > hi[i] || rest_sum - suffix_lo[i + 1] < lo[i])
      return;
    for (std::int64_t v = lo[i]; v <= hi[i]; ++v) {
      const Rat here = partial + abs(Rat(v) - centre[i]);
      if (here >= best) continue;
      // remaining l1 mass is at least |remaining sum - remaining centre mass|
      const Rat tail = abs(Rat(rest_sum - v) - suffix_centre_sum[i + 1]);
      if (here + tail >= best) continue;
      t[i] = v;
      self(self, i + 1, rest_sum - v, here);
    }
  };
  rec(rec, 0, want, Rat(0));
  return {best_t, best};
}

std::int64_t rank_definitional(const Multigraph& g, const IVec& d, int q) {
  if (!has_effective_rep(g, d, q)) return -1;
  const int n = g.n();
  const std::int64_t dmax = degree(d) + 1;
  IVec e = IVec::Zero(n);
  for (std::int64_t r = 1; r <= dmax; ++r) {
    // all effective E of degree r
    bool emptied = false;
    auto rec = [&](auto&& self, int i, std::int64_t left) -> bool {
      if (i == n - 1) {
        e[i] = left;
        return !has_effective_rep(g, IVec(d - e), q);
      }
      for (std::int64_t v = 0; v <= left; ++v) {
        e[i] = v;
        if (self(self, i + 1, left - v)) return true;
      }
      return false;
    };
    emptied = rec(rec, 0, r);
    if (emptied) return r - 1;
  }
  return dmax - 1;  // unreachable: degree r = deg(d)+1 always empties
}

std::int64_t rank_bn(const Multigraph& g, const IVec& d, const NonSpecialSet& ns) {
  const std::int64_t sigma = degree(d) - (g.genus() - 1);
  const NearestNonspecial near = closest_nonspecial_l1(g, d, ns);
  return (near.l1 + sigma) / 2 - 1;
}

Rat rank_r(const Multigraph& g, const QVec& d, const NonSpecialSet& ns) {
  const Rat sigma = degree(d) - Rat(g.genus() - 1);
  const NearestNonspecialQ near = closest_nonspecial_l1(g, d, ns);
  return (near.l1 + sigma) / Rat(2) - Rat(1);
}

Rat modified_rank(const Multigraph& g, const QVec& d, const NonSpecialSet& ns) {
  QVec shifted = d;
  for (Eigen::Index i = 0; i < shifted.size(); ++i) shifted[i] -= Rat(1);
  return rank_r(g, shifted, ns);
}

bool sigma_contains(const Multigraph& g, const QVec& d, const NonSpecialSet& ns) {
  // Some nu~ = t + (1,...,1) with t in N_G and nu~ <= D, i.e. t <= D - 1.
  const int n = g.n();
  const std::int64_t want = g.genus() - 1;
  std::vector<std::int64_t> hi(n);
  std::int64_t hi_sum = 0;
  for (int i = 0; i < n; ++i) {
    hi[i] = (d[i] - Rat(1)).floor();
    hi_sum += hi[i];
  }
  if (hi_sum < want) return false;
  IVec t(n);
  std::vector<std::int64_t> suffix_hi(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) suffix_hi[i] = suffix_hi[i + 1] + hi[i];
  auto rec = [&](auto&& self, int i, std::int64_t rest) -> bool {
    if (i == n - 1) {
      if (rest > hi[i]) return false;
      t[i] = rest;
      return is_nonspecial(g, t, ns.base_vertex);
    }
    const std::int64_t v_min = rest - suffix_hi[i + 1];
    for (std::int64_t v = hi[i]; v >= v_min; --v) {
      t[i] = v;
      if (self(self, i + 1, rest - v)) return true;
    }
    return false;
  };
  return rec(rec, 0, want);
}

Rat rr_defect(const Multigraph& g, const QVec& d, const NonSpecialSet& ns) {
  if (g.genus() < 1) throw PreconditionViolation("rr_defect requires genus >= 1");
  const IVec k = canonical_divisor(g);
  QVec kd(d.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) kd[i] = Rat(k[i]) - d[i];
  const Rat lhs = rank_r(g, d, ns) - rank_r(g, kd, ns);
  const Rat rhs = degree(d) - Rat(g.genus() - 1);
  return lhs - rhs;
}

Rat rr_defect_v1(const Multigraph& g, const QVec& d, const NonSpecialSet& ns) {
  if (g.genus() < 1) throw PreconditionViolation("rr_defect_v1 requires genus >= 1");
  const IVec k = modified_canonical(g);
  QVec kd(d.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) kd[i] = Rat(k[i]) - d[i];
  const Rat lhs = modified_rank(g, d, ns) - modified_rank(g, kd, ns);
  const Rat rhs = degree(d) - Rat(g.m());  // g_R - 1 = m
  return lhs - rhs;
}

IVec round_divisor(const Multigraph& g, const QVec& d, int v0) {
  if (v0 < 0 || v0 >= g.n()) throw BadVertexIndex("rounding vertex out of range");
  const Rat deg = degree(d);
  if (!deg.is_integer())
    throw NonIntegerDegree("cannot round a divisor of degree " + deg.str());
  IVec out(g.n());
  std::int64_t others = 0;
  for (int v = 0; v < g.n(); ++v) {
    if (v == v0) continue;
    out[v] = d[v].round_half_up();
    others += out[v];
  }
  out[v0] = deg.num() - others;
  return out;
}

std::int64_t gonality(const Multigraph& g, const NonSpecialSet& ns) {
  if (g.genus() < 1) throw PreconditionViolation("gonality requires genus >= 1");
  for (std::int64_t d = 1;; ++d) {
    for (const IVec& rep : enumerate_classes(g, d, ns.base_vertex)) {
      if (rank_bn(g, rep, ns) >= 1) return d;
    }
    if (d > g.genus() + 1)
      throw std::logic_error("gonality exceeded the Riemann-Roch bound");
  }
}

std::vector<std::pair<IVec, std::int64_t>> class_ranks(const Multigraph& g,
                                                       std::int64_t d, int q) {
  std::vector<std::pair<IVec, std::int64_t>> out;
  if (d < 0) {
    for (IVec& rep : enumerate_classes(g, d, q)) out.emplace_back(std::move(rep), -1);
    return out;
  }
  const int n = g.n();
  std::map<IVec, std::int64_t, IVecLess> prev;
  std::map<IVec, std::int64_t, IVecLess> cur;
  for (std::int64_t t = 0; t <= d; ++t) {
    cur.clear();
    std::vector<IVec> reps = enumerate_classes(g, t, q);
    for (IVec& rep : reps) {
      std::int64_t rank;
      if (rep[q] < 0) {
        rank = -1;  // reps are q-reduced, so effectiveness shows at q
      } else if (t == 0) {
        rank = 0;
      } else {
        std::int64_t best = -1;
        bool first = true;
        for (int v = 0; v < n; ++v) {
          IVec sub = rep;
          sub[v] -= 1;
          const IVec key = dhar_reduce(g, sub, q).reduced;
          const auto it = prev.find(key);
          if (it == prev.end())
            throw std::logic_error("class_ranks: missing lower-degree class");
          if (first || it->second < best) {
            best = it->second;
            first = false;
          }
        }
        rank = 1 + best;
      }
      if (t == d) out.emplace_back(rep, rank);
      cur.emplace(std::move(rep), rank);
    }
    prev.swap(cur);
  }
  return out;
}

}  // namespace bngraph
