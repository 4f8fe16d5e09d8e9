#pragma once
// Dense vector/matrix aliases and the small set of coordinate-level
// operations shared by every module.  Divisors are integer vectors indexed
// by vertices; points are exact-rational vectors of the same length.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "bngraph/rational.hpp"

namespace bngraph {

using IVec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using IMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

inline std::int64_t degree(const IVec& v) { return v.sum(); }
inline Rat degree(const QVec& v) {
  Rat s = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += v[i];
  return s;
}

// Sum of the positive coordinates; >= max(0, degree), 1-Lipschitz in l1.
inline std::int64_t deg_plus(const IVec& v) {
  std::int64_t s = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v[i] > 0) s += v[i];
  return s;
}
inline Rat deg_plus(const QVec& v) {
  Rat s = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (sign(v[i]) > 0) s += v[i];
  return s;
}

inline std::int64_t l1_norm(const IVec& v) { return v.cwiseAbs().sum(); }
inline Rat l1_norm(const QVec& v) {
  Rat s = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += abs(v[i]);
  return s;
}

inline QVec to_rational(const IVec& v) {
  QVec q(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
  return q;
}

// True iff every coordinate is an integer; fills out when non-null.
inline bool integral(const QVec& v, IVec* out = nullptr) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v[i].is_integer()) return false;
  if (out) {
    out->resize(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) (*out)[i] = v[i].num();
  }
  return true;
}

// Orthogonal projection onto the degree-k hyperplane:
// p + (k - deg p)/n * (1,...,1).  Idempotent for fixed k.
inline QVec project(const QVec& p, const Rat& k) {
  const Rat shift = (k - degree(p)) / Rat((long long)p.size());
  QVec out = p;
  for (Eigen::Index i = 0; i < out.size(); ++i) out[i] += shift;
  return out;
}

inline IVec unit_vec(int n, int i) {
  IVec e = IVec::Zero(n);
  e[i] = 1;
  return e;
}

struct IVecLess {
  bool operator()(const IVec& a, const IVec& b) const {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};
struct IVecHash {
  std::size_t operator()(const IVec& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      h ^= std::hash<std::int64_t>()(v[i]) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};
struct IVecEq {
  bool operator()(const IVec& a, const IVec& b) const { return a == b; }
};

inline std::string format_divisor(const IVec& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}
inline std::string format_divisor(const QVec& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s;
}

}  // namespace bngraph
