#pragma once
// Numbers of the form a + b*sqrt(c) with rational a, b and a square-free
// non-negative integer c.  Only what the bound checks need: construction
// from sqrt of a rational, ring operations against rationals, products that
// stay in one extension, and exact comparisons by squaring.

#include <cstdint>

#include "bngraph/rational.hpp"

namespace bngraph {

class QuadExt {
 public:
  QuadExt() : a_(0), b_(0), c_(1) {}
  QuadExt(Rat a) : a_(a), b_(0), c_(1) {}  // NOLINT
  QuadExt(Rat a, Rat b, std::int64_t c) : a_(a), b_(b), c_(c) { normalize(); }

  // sqrt(p/q) = sqrt(p*q)/q, radicand split into s^2 * c with c square-free.
  static QuadExt sqrt_of(const Rat& x) {
    if (sign(x) < 0) throw std::domain_error("sqrt of negative rational");
    if (x.is_zero()) return QuadExt();
    const __int128 radicand = (__int128)x.num() * x.den();
    std::int64_t square = 1, free = 1;
    __int128 rest = radicand;
    for (std::int64_t p = 2; (__int128)p * p <= rest; ++p) {
      while (rest % ((__int128)p * p) == 0) {
        rest /= (__int128)p * p;
        square *= p;
      }
      while (rest % p == 0) {
        rest /= p;
        free *= p;
      }
    }
    free *= (std::int64_t)rest;
    return QuadExt(Rat(0), Rat(square, x.den()), free);
  }

  const Rat& rational_part() const { return a_; }
  const Rat& coeff() const { return b_; }
  std::int64_t radicand() const { return c_; }
  bool is_rational() const { return b_.is_zero(); }
  Rat as_rational() const {
    if (!is_rational()) throw std::domain_error("irrational QuadExt");
    return a_;
  }

  friend QuadExt operator+(const QuadExt& x, const Rat& r) {
    return QuadExt(x.a_ + r, x.b_, x.c_);
  }
  friend QuadExt operator-(const QuadExt& x, const Rat& r) {
    return QuadExt(x.a_ - r, x.b_, x.c_);
  }
  friend QuadExt operator*(const QuadExt& x, const Rat& r) {
    return QuadExt(x.a_ * r, x.b_ * r, x.c_);
  }
  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    if (x.is_rational()) return y + x.a_;
    if (y.is_rational()) return x + y.a_;
    if (x.c_ != y.c_) throw std::domain_error("mixed radicands");
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, x.c_);
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    return x + (y * Rat(-1));
  }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    if (x.is_rational()) return y * x.a_;
    if (y.is_rational()) return x * y.a_;
    if (x.c_ != y.c_) throw std::domain_error("mixed radicands");
    // (a1 + b1 s)(a2 + b2 s) = a1 a2 + b1 b2 c + (a1 b2 + a2 b1) s
    return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * Rat(x.c_),
                   x.a_ * y.b_ + y.a_ * x.b_, x.c_);
  }

  // sign of a + b sqrt(c), decided exactly by squaring.
  int sign_of() const {
    if (b_.is_zero()) return sign(a_);
    if (a_.is_zero()) return sign(b_);
    const int sa = sign(a_), sb = sign(b_);
    if (sa == sb) return sa;
    // compare a^2 vs b^2 c; the larger magnitude wins
    const Rat a2 = a_ * a_;
    const Rat b2c = b_ * b_ * Rat(c_);
    if (a2 == b2c) return 0;
    return a2 > b2c ? sa : sb;
  }

  friend bool operator<(const QuadExt& x, const QuadExt& y) {
    return (x - y).sign_of() < 0;
  }
  friend bool operator>(const QuadExt& x, const QuadExt& y) { return y < x; }
  friend bool operator<=(const QuadExt& x, const QuadExt& y) { return !(y < x); }
  friend bool operator>=(const QuadExt& x, const QuadExt& y) { return !(x < y); }
  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return (x - y).sign_of() == 0;
  }

  std::int64_t floor_int() const {
    if (is_rational()) return a_.floor();
    // start from a crude bracket and walk; values in this library are tiny
    std::int64_t k = a_.floor() + b_.floor() * 16 - 16;
    while (QuadExt(Rat(k + 1)) <= *this) ++k;
    while (QuadExt(Rat(k)) > *this) --k;
    return k;
  }
  std::int64_t ceil_int() const {
    const std::int64_t f = floor_int();
    return *this == QuadExt(Rat(f)) ? f : f + 1;
  }

 private:
  void normalize() {
    if (c_ < 0) throw std::domain_error("negative radicand");
    if (c_ == 0) {
      b_ = Rat(0);
      c_ = 1;
    }
    if (c_ == 1) {
      a_ += b_;
      b_ = Rat(0);
    }
    if (b_.is_zero()) c_ = 1;
  }

  Rat a_, b_;
  std::int64_t c_;
};

}  // namespace bngraph
