#include "bngraph/snf.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace bngraph {

namespace {

std::int64_t narrow128(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer matrix arithmetic overflow");
  return (std::int64_t)v;
}

}  // namespace

std::int64_t bareiss_det(const IMat& a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return 1;
  IMat m = a;
  std::int64_t prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index piv = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      m.row(k).swap(m.row(piv));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        const __int128 num = (__int128)m(i, j) * m(k, k) - (__int128)m(i, k) * m(k, j);
        m(i, j) = narrow128(num / prev);  // Bareiss: division is exact
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

bool pivot_isolated(const IMat& d, Eigen::Index s) {
  for (Eigen::Index i = s + 1; i < d.rows(); ++i)
    if (d(i, s) != 0) return false;
  for (Eigen::Index j = s + 1; j < d.cols(); ++j)
    if (d(s, j) != 0) return false;
  return true;
}

void locate_min_nonzero(const IMat& d, Eigen::Index s, Eigen::Index& ir, Eigen::Index& ic) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  ir = s;
  ic = s;
  for (Eigen::Index i = s; i < d.rows(); ++i)
    for (Eigen::Index j = s; j < d.cols(); ++j)
      if (d(i, j) != 0 && std::abs(d(i, j)) < best) {
        best = std::abs(d(i, j));
        ir = i;
        ic = j;
      }
}

}  // namespace

SmithResult smith_normal_form(const IMat& a) {
  const Eigen::Index m = a.rows(), n = a.cols();
  SmithResult out;
  out.d = a;
  out.l = IMat::Identity(m, m);
  out.r = IMat::Identity(n, n);
  IMat& d = out.d;
  const Eigen::Index nmin = std::min(m, n);

  for (Eigen::Index s = 0; s < nmin; ++s) {
    while (!pivot_isolated(d, s)) {
      Eigen::Index ir, ic;
      locate_min_nonzero(d, s, ir, ic);
      if (d(ir, ic) == 0) break;
      d.row(s).swap(d.row(ir));
      out.l.row(s).swap(out.l.row(ir));
      d.col(s).swap(d.col(ic));
      out.r.col(s).swap(out.r.col(ic));
      for (Eigen::Index i = s + 1; i < m; ++i) {
        if (d(i, s) != 0) {
          const std::int64_t k = d(i, s) / d(s, s);
          d.row(i) -= k * d.row(s);
          out.l.row(i) -= k * out.l.row(s);
        }
      }
      for (Eigen::Index j = s + 1; j < n; ++j) {
        if (d(s, j) != 0) {
          const std::int64_t k = d(s, j) / d(s, s);
          d.col(j) -= k * d.col(s);
          out.r.col(j) -= k * out.r.col(s);
        }
      }
      if (pivot_isolated(d, s)) {
        // enforce divisibility of the remaining block by the pivot
        bool divides = true;
        Eigen::Index br = s, bc = s;
        for (Eigen::Index i = s + 1; i < m && divides; ++i)
          for (Eigen::Index j = s + 1; j < n; ++j)
            if (d(i, j) % d(s, s) != 0) {
              divides = false;
              br = i;
              bc = j;
              break;
            }
        if (!divides) {
          (void)bc;
          d.row(s) += d.row(br);
          out.l.row(s) += out.l.row(br);
        }
      }
    }
    if (d(s, s) < 0) {
      d.row(s) *= -1;
      out.l.row(s) *= -1;
    }
  }
  out.invariants.reserve(nmin);
  for (Eigen::Index s = 0; s < nmin; ++s) out.invariants.push_back(d(s, s));
  return out;
}

QVec solve_linear(QMat a, QVec b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.size() != n)
    throw std::invalid_argument("solve_linear: shape mismatch");
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = k; i < n; ++i)
      if (!a(i, k).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::domain_error("solve_linear: singular matrix");
    if (piv != k) {
      a.row(k).swap(a.row(piv));
      std::swap(b[k], b[piv]);
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Rat f = a(i, k) / a(k, k);
      for (Eigen::Index j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      b[i] -= f * b[k];
    }
  }
  QVec x(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    Rat s = b[i];
    for (Eigen::Index j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

}  // namespace bngraph
