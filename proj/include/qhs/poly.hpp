#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qhs {

// Sparse univariate polynomial over Q, exponents >= 0, terms sorted by
// ascending exponent, no zero coefficients stored.
class QPoly {
 public:
  using Term = std::pair<long, mpq_class>;

  QPoly() = default;

  static QPoly zero() { return QPoly(); }

  static QPoly one() { return monomial(0, 1); }

  static QPoly monomial(long e, mpq_class c) {
    QPoly p;
    if (c != 0) p.t_.emplace_back(e, std::move(c));
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  bool is_one() const { return t_.size() == 1 && t_[0].first == 0 && t_[0].second == 1; }
  bool is_monomial() const { return t_.size() == 1; }

  long degree() const { return t_.empty() ? -1 : t_.back().first; }
  long valuation() const { return t_.empty() ? 0 : t_.front().first; }
  const mpq_class& leading() const { return t_.back().second; }
  const std::vector<Term>& terms() const { return t_; }

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.t_ == b.t_; }

  QPoly operator-() const {
    QPoly r(*this);
    for (auto& [e, c] : r.t_) c = -c;
    return r;
  }

  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.t_.reserve(a.t_.size() + b.t_.size());
    size_t i = 0, j = 0;
    while (i < a.t_.size() && j < b.t_.size()) {
      if (a.t_[i].first < b.t_[j].first) {
        r.t_.push_back(a.t_[i++]);
      } else if (a.t_[i].first > b.t_[j].first) {
        r.t_.push_back(b.t_[j++]);
      } else {
        mpq_class c = a.t_[i].second + b.t_[j].second;
        if (c != 0) r.t_.emplace_back(a.t_[i].first, std::move(c));
        ++i, ++j;
      }
    }
    for (; i < a.t_.size(); ++i) r.t_.push_back(a.t_[i]);
    for (; j < b.t_.size(); ++j) r.t_.push_back(b.t_[j]);
    return r;
  }

  friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    if (a.is_monomial()) return b.scaled_shifted(a.t_[0].second, a.t_[0].first);
    if (b.is_monomial()) return a.scaled_shifted(b.t_[0].second, b.t_[0].first);
    QPoly r;
    for (const auto& [ea, ca] : a.t_) {
      QPoly part = b.scaled_shifted(ca, ea);
      r = r + part;
    }
    return r;
  }

  QPoly scaled_shifted(const mpq_class& c, long e) const {
    QPoly r;
    if (c == 0) return r;
    r.t_.reserve(t_.size());
    for (const auto& [ee, cc] : t_) r.t_.emplace_back(ee + e, cc * c);
    return r;
  }

  // Euclidean division by a nonzero divisor; returns {quotient, remainder}.
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const {
    assert(!d.is_zero());
    QPoly q, r(*this);
    while (!r.is_zero() && r.degree() >= d.degree()) {
      long e = r.degree() - d.degree();
      mpq_class c = r.leading() / d.leading();
      QPoly m = monomial(e, c);
      q = q + m;
      r = r - d.scaled_shifted(c, e);
    }
    return {q, r};
  }

  static QPoly gcd(QPoly a, QPoly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_monomial() || b.is_monomial())
      return monomial(std::min(a.valuation(), b.valuation()), 1);
    // pull out the common power of the variable first
    long v = std::min(a.valuation(), b.valuation());
    a = a.scaled_shifted(1, -a.valuation());
    b = b.scaled_shifted(1, -b.valuation());
    while (!b.is_zero()) {
      QPoly r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic().scaled_shifted(1, v);
  }

  QPoly monic() const {
    if (is_zero()) return *this;
    QPoly r(*this);
    mpq_class inv = 1 / leading();
    for (auto& [e, c] : r.t_) c *= inv;
    return r;
  }

  // rational content: c such that (*this)/c has coprime integer coefficients
  // with positive leading coefficient
  mpq_class content() const {
    if (is_zero()) return 1;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : t_) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    mpq_class ct(num_gcd, den_lcm);
    ct.canonicalize();
    if (leading() < 0) ct = -ct;
    return ct;
  }

  mpq_class eval(const mpq_class& x) const {
    mpq_class r = 0, p = 1;
    long last = 0;
    for (const auto& [e, c] : t_) {
      for (long k = last; k < e; ++k) p *= x;
      last = e;
      r += c * p;
    }
    return r;
  }

  long double eval(long double x) const {
    long double r = 0;
    for (const auto& [e, c] : t_) r += c.get_d() * powl(x, (long double)e);
    return r;
  }

  // exponents rescaled by an integer factor (change of root)
  QPoly stretched(long k) const {
    QPoly r(*this);
    for (auto& [e, c] : r.t_) e *= k;
    return r;
  }

  std::string str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = t_.size(); i-- > 0;) {
      const auto& [e, c] = t_[i];
      bool first = s.empty();
      mpq_class cc = c;
      if (!first) {
        s += (cc < 0) ? " - " : " + ";
        if (cc < 0) cc = -cc;
      } else if (cc < 0) {
        s += "-";
        cc = -cc;
      }
      if (e == 0 || cc != 1) s += cc.get_str();
      if (e != 0) {
        if (cc != 1) s += "*";
        s += var;
        if (e != 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

 private:
  std::vector<Term> t_;
};

}  // namespace qhs
