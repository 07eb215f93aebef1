#pragma once

#include <map>

#include "scalar.hpp"

namespace qhs {

// Truncated Laurent polynomial in u with Scalar coefficients. Exponents are
// confined to a window; products drop terms that fall outside and remember
// that they did.
class LaurentU {
 public:
  LaurentU() : lo_(0), hi_(0) {}
  LaurentU(int lo, int hi) : lo_(lo), hi_(hi) {}

  static LaurentU constant(Scalar c, int lo, int hi) {
    LaurentU r(lo, hi);
    r.set(0, std::move(c));
    return r;
  }

  static LaurentU upow(int m, const Scalar& c, int lo, int hi) {
    LaurentU r(lo, hi);
    r.set(m, c);
    return r;
  }

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool clipped() const { return clipped_; }
  const std::map<int, Scalar>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }

  Scalar coeff(int m) const {
    auto it = c_.find(m);
    return it == c_.end() ? Scalar::zero() : it->second;
  }

  void set(int m, Scalar v) {
    if (m < lo_ || m > hi_) {
      if (!v.is_zero()) clipped_ = true;
      return;
    }
    if (v.is_zero())
      c_.erase(m);
    else
      c_[m] = std::move(v);
  }

  void add_to(int m, const Scalar& v) {
    if (v.is_zero()) return;
    if (m < lo_ || m > hi_) {
      clipped_ = true;
      return;
    }
    auto it = c_.find(m);
    if (it == c_.end()) {
      c_.emplace(m, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  friend LaurentU operator+(const LaurentU& a, const LaurentU& b) {
    LaurentU r(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
    r.clipped_ = a.clipped_ || b.clipped_;
    r.c_ = a.c_;
    for (const auto& [m, v] : b.c_) r.add_to(m, v);
    return r;
  }

  LaurentU operator-() const {
    LaurentU r(*this);
    for (auto& [m, v] : r.c_) v = -v;
    return r;
  }

  friend LaurentU operator-(const LaurentU& a, const LaurentU& b) { return a + (-b); }

  friend LaurentU operator*(const LaurentU& a, const LaurentU& b) {
    LaurentU r(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
    r.clipped_ = a.clipped_ || b.clipped_;
    for (const auto& [ma, va] : a.c_)
      for (const auto& [mb, vb] : b.c_) r.add_to(ma + mb, va * vb);
    return r;
  }

  LaurentU scaled(const Scalar& s) const {
    LaurentU r(lo_, hi_);
    r.clipped_ = clipped_;
    if (s.is_zero()) return r;
    for (const auto& [m, v] : c_) r.c_[m] = v * s;
    return r;
  }

  LaurentU shifted(int k) const {
    LaurentU r(lo_, hi_);
    r.clipped_ = clipped_;
    for (const auto& [m, v] : c_) r.add_to(m + k, v);
    return r;
  }

  friend bool operator==(const LaurentU& a, const LaurentU& b) { return a.c_ == b.c_; }

  // evaluate at a concrete u
  Scalar at(const Scalar& u) const {
    Scalar r = Scalar::zero();
    for (const auto& [m, v] : c_) r += v * u.pow(m);
    return r;
  }

  int min_exponent() const { return c_.empty() ? 0 : c_.begin()->first; }
  int max_exponent() const { return c_.empty() ? 0 : c_.rbegin()->first; }

 private:
  std::map<int, Scalar> c_;
  int lo_, hi_;
  bool clipped_ = false;
};

}  // namespace qhs
