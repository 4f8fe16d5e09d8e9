#pragma once
// Polyhedral distance functions on the degree hyperplanes: the two standard
// simplices, their Minkowski combinations P(alpha, alpha_bar), and the l1
// unit ball.  All values exact rationals.

#include <vector>

#include "bngraph/errors.hpp"
#include "bngraph/types.hpp"

namespace bngraph {

struct Gauge {
  enum class Kind { Simplex, Cosimplex, Minkowski, Ell1 };
  Kind kind = Kind::Simplex;
  Rat alpha = 1;      // Minkowski only
  Rat alpha_bar = 0;  // Minkowski only

  static Gauge simplex() { return {Kind::Simplex, 1, 0}; }
  static Gauge cosimplex() { return {Kind::Cosimplex, 0, 1}; }
  static Gauge ell1() { return {Kind::Ell1, 0, 0}; }
  static Gauge minkowski(const Rat& a, const Rat& ab) {
    if (sign(a) < 0 || sign(ab) < 0 || (a.is_zero() && ab.is_zero()))
      throw BadGauge("P(alpha, alpha_bar) needs alpha, alpha_bar >= 0, not both 0");
    return {Kind::Minkowski, a, ab};
  }
};

// d_simplex(p,q) = |min_i (q_i - p_i)|, d_cosimplex(p,q) = |max_i (q_i - p_i)|;
// requires deg p = deg q.
Rat simplicial_distance(const QVec& p, const QVec& q, bool cosimplex);

// Gauge distance d_C(p, q) = min { mu >= 0 : q in p + mu C }.  For the
// Minkowski polytope the unique root of the piecewise-linear feasibility
// function  mu -> sum_i max(-mu*alpha, x_i - mu*alpha_bar)  is solved
// exactly over the sorted breakpoints.
Rat gauge_distance(const Gauge& c, const QVec& p, const QVec& q);

// The n(n-1) vertices w_{i,j} = alpha*b_i - alpha_bar*b_j (i != j) of
// P(alpha, alpha_bar) for positive parameters, in row-major (i,j) order.
std::vector<QVec> vertices_P(int n, const Rat& alpha, const Rat& alpha_bar);

// Coordinatewise reach of the unit body: z in mu*C implies
// z_i in [-mu*first, mu*second].  Used to certify bounded searches.
std::pair<Rat, Rat> gauge_coordinate_reach(const Gauge& c, int n);

}  // namespace bngraph
