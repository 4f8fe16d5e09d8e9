#include "bngraph/brill_noether.hpp"

#include <stdexcept>

namespace bngraph {

Rat rho(const Rat& g, const Rat& r, const Rat& d) {
  return g - (r + Rat(1)) * (g - d + r);
}

Rat rho_tilde(const Rat& g, std::int64_t gamma, const Rat& r, const Rat& d) {
  if (gamma < 1) throw PreconditionViolation("stretch factor must be >= 1");
  return g - Rat(gamma) * (r + Rat(1)) * (g - d + r);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ExistenceHolds:
      return "ExistenceHolds";
    case Verdict::ExistenceFails:
      return "ExistenceFails";
    case Verdict::NotApplicable:
      return "NotApplicable";
  }
  return "NotApplicable";
}

std::string BNReport::json() const {
  std::string s = "{\"graph\":\"" + graph + "\",\"d\":" + std::to_string(d) +
                  ",\"maxRank\":" + std::to_string(max_rank) + ",\"witness\":[";
  for (Eigen::Index i = 0; i < witness.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(witness[i]);
  }
  s += "],\"bnBound\":" + std::to_string(bn_bound) + ",\"verdict\":\"" +
       to_string(verdict) + "\"}";
  return s;
}

namespace {

std::int64_t bn_bound_for(std::int64_t g, std::int64_t d) {
  std::int64_t best = -1;
  for (std::int64_t r = 0; r <= d + 1; ++r)
    if (sign(rho(Rat(g), Rat(r), Rat(d))) >= 0) best = r;
  return best;
}

std::string default_label(const Multigraph& g) {
  return "n" + std::to_string(g.n()) + "m" + std::to_string(g.m()) + "g" +
         std::to_string(g.genus());
}

}  // namespace

BNReport bn_scan(const Multigraph& g, std::int64_t d, const NonSpecialSet& ns,
                 const std::string& label) {
  if (g.genus() < 1) throw PreconditionViolation("bn_scan requires genus >= 1");
  if (d < 0 || d > 2 * g.genus() - 2)
    throw DegreeOutOfRange("degree " + std::to_string(d) + " outside 0..2g-2");
  BNReport rep;
  rep.graph = label.empty() ? default_label(g) : label;
  rep.d = d;
  rep.bn_bound = bn_bound_for(g.genus(), d);

  bool first = true;
  for (const IVec& cls : enumerate_classes(g, d, ns.base_vertex)) {
    const std::int64_t rank = rank_bn(g, cls, ns);
    if (first || rank > rep.max_rank) {
      rep.max_rank = rank;
      rep.witness = cls;
      first = false;
    } else if (rank == rep.max_rank && IVecLess()(cls, rep.witness)) {
      rep.witness = cls;
    }
  }
  if (rep.bn_bound < 0)
    rep.verdict = Verdict::NotApplicable;
  else
    rep.verdict = rep.max_rank >= rep.bn_bound ? Verdict::ExistenceHolds
                                               : Verdict::ExistenceFails;
  return rep;
}

std::vector<BNReport> verify_existence(const Multigraph& g, const NonSpecialSet& ns,
                                       const std::string& label) {
  if (g.genus() < 1)
    throw PreconditionViolation("verify_existence requires genus >= 1");
  std::vector<BNReport> out;
  for (std::int64_t d = 0; d <= 2 * g.genus() - 2; ++d)
    out.push_back(bn_scan(g, d, ns, label));

  // Consistency of the two degree-(g-1) formulations: rank at g-1 reaches
  // floor(sqrt g) - 1 exactly when the integral l1 covering radius reaches
  // 2 floor(sqrt g).
  const std::int64_t root = isqrt(g.genus());
  const BNReport& mid = out[g.genus() - 1];
  const Rat cov = integral_covering_radius(g, Gauge::ell1(), ns);
  const bool rank_side = mid.max_rank >= root - 1;
  const bool cov_side = cov >= Rat(2 * root);
  if (rank_side != cov_side)
    throw std::logic_error("degree g-1 rank and integral covering radius disagree");
  return out;
}

std::int64_t gonality_bound_approx(const Multigraph& g) {
  if (g.genus() < 1)
    throw PreconditionViolation("gonality bound requires genus >= 1");
  const std::int64_t gamma = stretch_factor(g);
  const Rat two_n_gamma = Rat(2 * g.n() * gamma);
  const Rat bound =
      Rat(g.genus()) * (two_n_gamma - Rat(1)) / two_n_gamma + Rat(2 * g.n() - 1);
  return bound.ceil();
}

std::int64_t r_gonality_bound(const Multigraph& g, std::int64_t k) {
  if (g.genus() < 1 || k < 1)
    throw PreconditionViolation("r_gonality_bound requires genus >= 1 and k >= 1");
  if (is_dense(g)) {
    const Rat bound = Rat(g.genus() * k, k + 1) + Rat(k);
    return bound.ceil();
  }
  const std::int64_t gamma = stretch_factor(g);
  const Rat denom = Rat(gamma * (k + 1));
  const Rat bound = Rat(g.genus()) * (denom - Rat(1)) / denom + Rat(k);
  return bound.ceil();
}

Rat lambda_from_rd(const Rat& g, const Rat& r, const Rat& d) {
  if (sign(r) < 0) throw PreconditionViolation("rank must be non-negative");
  if (sign(rho(g, r, d)) < 0)
    throw RhoNegative("rho(g,r,d) < 0 for g=" + g.str() + " r=" + r.str() +
                      " d=" + d.str());
  if (d > g - Rat(1))
    throw DegreeTooHigh("lambda_from_rd needs d <= g-1, got d=" + d.str());
  return (g - d + r) / (r + Rat(1));
}

RdPair rd_from_lambda(const Rat& g, const Rat& lambda) {
  if (lambda < Rat(1) / g || lambda > g)
    throw LambdaOutOfRange("lambda=" + lambda.str() + " outside [1/g, g]");
  const QuadExt r0 = QuadExt::sqrt_of(g / lambda) - Rat(1);
  // d0 = g + (r0 + 1)(1 - lambda) - 1
  const QuadExt d0 = (r0 + Rat(1)) * (Rat(1) - lambda) + (g - Rat(1));
  // exact check: rho(g, r0, d0) = g - (r0+1)^2 lambda = 0
  const QuadExt r1 = r0 + Rat(1);
  const QuadExt check = (r1 * r1) * lambda - g;
  if (check.sign_of() != 0)
    throw std::logic_error("rd_from_lambda: rho(g, r0, d0) != 0");
  return {r0, d0};
}

bool dense_eq_hypothesis(const Multigraph& g) {
  const Rat lhs = Rat(2 * g.m(), g.n()) - Rat(g.n(), 2);
  return lhs * lhs >= Rat(4 * g.genus());
}

KnBounds kn_rank_bound(int n) {
  if (n < 3) throw PreconditionViolation("kn_rank_bound requires n >= 3");
  const std::int64_t g = (std::int64_t)(n - 1) * (n - 2) / 2;
  KnBounds out;
  out.genus = g;
  out.general = QuadExt::sqrt_of(Rat(g, 8)) - Rat(1);
  out.odd = QuadExt::sqrt_of(Rat(g, 2)) - Rat(1);
  return out;
}

std::int64_t isqrt(std::int64_t x) {
  if (x < 0) throw std::domain_error("isqrt of negative value");
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

std::optional<IVec> find_rank_witness(const Multigraph& g, const NonSpecialSet& ns,
                                      std::int64_t r, std::int64_t d_max) {
  for (std::int64_t d = std::max<std::int64_t>(r, 0); d <= d_max; ++d) {
    for (const IVec& cls : enumerate_classes(g, d, ns.base_vertex))
      if (rank_bn(g, cls, ns) == r) return cls;
  }
  return std::nullopt;
}

std::optional<QVec> find_real_rank_witness(const Multigraph& g,
                                           const NonSpecialSet& ns, const Rat& r,
                                           std::int64_t d) {
  const int n = g.n();
  for (const IVec& cls : enumerate_classes(g, d, ns.base_vertex)) {
    const QVec base = to_rational(cls);
    if (rank_r(g, base, ns) == r) return base;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        QVec cand = base;
        cand[i] += Rat(1, 2);
        cand[j] -= Rat(1, 2);
        if (rank_r(g, cand, ns) == r) return cand;
      }
    }
  }
  return std::nullopt;
}

}  // namespace bngraph
