#pragma once
// Exact rational scalar on a 64-bit numerator/denominator pair.
// Every operation normalizes (gcd-reduced, positive denominator) through
// 128-bit intermediates and throws std::overflow_error if a result leaves
// the 64-bit range.  No floating point anywhere.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace bngraph {

class Rat {
 public:
  Rat() = default;
  Rat(long long n) : num_(n) {}  // NOLINT: integers convert implicitly
  Rat(long long n, long long d) { *this = make(n, d); }

  static Rat make(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rat r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
  }

  // Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
  static Rat parse(std::string_view s);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  std::int64_t floor() const {
    if (num_ >= 0) return num_ / den_;
    return -((-num_ + den_ - 1) / den_);
  }
  std::int64_t ceil() const { return -(-*this).floor(); }
  // Nearest integer, ties toward +infinity.
  std::int64_t round_half_up() const { return (*this + Rat(1, 2)).floor(); }

  std::string str() const {
    std::string out = std::to_string(num_);
    if (den_ != 1) out += "/" + std::to_string(den_);
    return out;
  }

  friend Rat operator-(const Rat& a) { return make(-(__int128)a.num_, a.den_); }
  friend Rat operator+(const Rat& a, const Rat& b) {
    return make((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                (__int128)a.den_ * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return make((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

 private:
  static std::int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw std::overflow_error("rational arithmetic overflow");
    return (std::int64_t)v;
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

inline Rat abs(const Rat& r) { return r.num() < 0 ? -r : r; }
inline int sign(const Rat& r) { return r.num() < 0 ? -1 : (r.num() > 0 ? 1 : 0); }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }
inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }

inline Rat Rat::parse(std::string_view s) {
  const auto bad = [&] {
    throw std::invalid_argument("not a rational literal: '" + std::string(s) + "'");
  };
  auto read_int = [&](std::string_view t) -> long long {
    if (t.empty()) bad();
    std::size_t i = 0;
    bool neg = false;
    if (t[0] == '-' || t[0] == '+') {
      neg = t[0] == '-';
      i = 1;
    }
    if (i == t.size()) bad();
    long long v = 0;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') bad();
      v = v * 10 + (t[i] - '0');
      if (v < 0) throw std::overflow_error("rational literal out of range");
    }
    return neg ? -v : v;
  };
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(read_int(s));
  return Rat(read_int(s.substr(0, slash)), read_int(s.substr(slash + 1)));
}

}  // namespace bngraph

namespace Eigen {
template <>
struct NumTraits<bngraph::Rat> : GenericNumTraits<bngraph::Rat> {
  typedef bngraph::Rat Real;
  typedef bngraph::Rat NonInteger;
  typedef bngraph::Rat Nested;
  typedef std::int64_t Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 12,
    MulCost = 12
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
