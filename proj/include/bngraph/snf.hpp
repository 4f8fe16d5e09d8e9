#pragma once
// Exact integer/rational linear algebra: Bareiss determinants, Smith normal
// form of integer matrices, and a small dense rational solver.

#include <vector>

#include "bngraph/types.hpp"

namespace bngraph {

using QMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

// Fraction-free determinant of an integer matrix.
std::int64_t bareiss_det(const IMat& a);

// L*A*R = D with L, R unimodular and D diagonal with d_1 | d_2 | ... .
struct SmithResult {
  IMat d, l, r;
  std::vector<std::int64_t> invariants;  // non-negative diagonal entries
};
SmithResult smith_normal_form(const IMat& a);

// Solves a*x = b exactly; throws std::domain_error if a is singular.
QVec solve_linear(QMat a, QVec b);

}  // namespace bngraph
