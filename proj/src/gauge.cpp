#include "bngraph/gauge.hpp"

#include <algorithm>

namespace bngraph {

namespace {

QVec difference_checked(const QVec& p, const QVec& q) {
  if (p.size() != q.size())
    throw DegreeMismatch("points of different dimension");
  if (degree(p) != degree(q))
    throw DegreeMismatch("points on different degree hyperplanes: " +
                         degree(p).str() + " vs " + degree(q).str());
  QVec x(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i) x[i] = q[i] - p[i];
  return x;
}

Rat minkowski_distance(const Rat& a, const Rat& ab, const QVec& x) {
  // Feasibility: x in mu*(a*simplex + ab*cosimplex) iff
  //   f(mu) = sum_i max(-mu*a, x_i - mu*ab) <= 0,
  // f continuous and strictly decreasing for a, ab not both zero with
  // positive part; solve the linear piece containing the sign change.
  const Eigen::Index n = x.size();
  auto f = [&](const Rat& mu) {
    Rat s = 0;
    for (Eigen::Index i = 0; i < n; ++i) s += max(-mu * a, x[i] - mu * ab);
    return s;
  };
  // breakpoints: -mu a = x_i - mu ab  =>  mu = x_i / (ab - a)
  std::vector<Rat> breaks{Rat(0)};
  if (a != ab) {
    const Rat den = ab - a;
    for (Eigen::Index i = 0; i < n; ++i) {
      const Rat mu = x[i] / den;
      if (sign(mu) > 0) breaks.push_back(mu);
    }
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  Rat lo = 0, flo = f(Rat(0));
  if (sign(flo) <= 0) return Rat(0);
  bool bracketed = false;
  Rat hi = 0, fhi = 0;
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    const Rat fb = f(breaks[i]);
    if (sign(fb) <= 0) {
      hi = breaks[i];
      fhi = fb;
      bracketed = true;
      break;
    }
    lo = breaks[i];
    flo = fb;
  }
  if (!bracketed) {
    // past the last breakpoint every term is linear; slope is constant
    Rat slope = 0;
    const Rat probe = breaks.back() + Rat(1);
    slope = f(probe) - f(breaks.back());
    if (sign(slope) >= 0) throw BadGauge("degenerate gauge: distance undefined");
    lo = breaks.back();
    flo = f(lo);
    return lo - flo / slope;
  }
  // linear interpolation on the bracketing piece is exact
  const Rat slope = (fhi - flo) / (hi - lo);
  return lo - flo / slope;
}

}  // namespace

Rat simplicial_distance(const QVec& p, const QVec& q, bool cosimplex) {
  const QVec x = difference_checked(p, q);
  Rat extreme = x[0];
  for (Eigen::Index i = 1; i < x.size(); ++i)
    extreme = cosimplex ? max(extreme, x[i]) : min(extreme, x[i]);
  return abs(extreme);
}

Rat gauge_distance(const Gauge& c, const QVec& p, const QVec& q) {
  switch (c.kind) {
    case Gauge::Kind::Simplex:
      return simplicial_distance(p, q, false);
    case Gauge::Kind::Cosimplex:
      return simplicial_distance(p, q, true);
    case Gauge::Kind::Ell1:
      return l1_norm(difference_checked(p, q));
    case Gauge::Kind::Minkowski: {
      if (sign(c.alpha) < 0 || sign(c.alpha_bar) < 0 ||
          (c.alpha.is_zero() && c.alpha_bar.is_zero()))
        throw BadGauge("invalid Minkowski gauge parameters");
      if (c.alpha_bar.is_zero())
        return simplicial_distance(p, q, false) / c.alpha;
      if (c.alpha.is_zero())
        return simplicial_distance(p, q, true) / c.alpha_bar;
      return minkowski_distance(c.alpha, c.alpha_bar, difference_checked(p, q));
    }
  }
  throw BadGauge("unknown gauge kind");
}

std::vector<QVec> vertices_P(int n, const Rat& alpha, const Rat& alpha_bar) {
  if (n < 2) throw BadGauge("vertices_P needs n >= 2");
  if (sign(alpha) <= 0 || sign(alpha_bar) <= 0)
    throw BadGauge("vertices_P needs strictly positive parameters");
  const Rat at_i = alpha * Rat(n - 1) + alpha_bar;
  const Rat at_j = -(alpha_bar * Rat(n - 1) + alpha);
  const Rat elsewhere = alpha_bar - alpha;
  std::vector<QVec> out;
  out.reserve((std::size_t)n * (n - 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      QVec w(n);
      for (int k = 0; k < n; ++k) w[k] = elsewhere;
      w[i] = at_i;
      w[j] = at_j;
      out.push_back(std::move(w));
    }
  }
  return out;
}

std::pair<Rat, Rat> gauge_coordinate_reach(const Gauge& c, int n) {
  switch (c.kind) {
    case Gauge::Kind::Simplex:
      return {Rat(1), Rat(n - 1)};
    case Gauge::Kind::Cosimplex:
      return {Rat(n - 1), Rat(1)};
    case Gauge::Kind::Ell1:
      return {Rat(1), Rat(1)};
    case Gauge::Kind::Minkowski:
      return {c.alpha + c.alpha_bar * Rat(n - 1),
              c.alpha * Rat(n - 1) + c.alpha_bar};
  }
  throw BadGauge("unknown gauge kind");
}

}  // namespace bngraph
