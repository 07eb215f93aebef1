#pragma once

#include <map>

#include "laurent.hpp"
#include "mon.hpp"
#include "scalar.hpp"

namespace qhs {

// Environment shared by coefficient rings: where q lives, whether the xi_1
// exponent is an offset against a formal power (whose shifts produce u
// factors), and the u-window for Laurent coefficients.
struct CoefEnv {
  QCtx q;
  bool xi1_marker = false;
  int ulo = 0, uhi = 0;
};

template <class R>
struct CoefOps;

template <>
struct CoefOps<Scalar> {
  static Scalar from_scalar(const Scalar& s, const CoefEnv&) { return s; }
  static bool is_zero(const Scalar& s) { return s.is_zero(); }
  static void add_into(Scalar& a, const Scalar& b) { a += b; }
  static Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
  static void mul_scalar(Scalar& a, const Scalar& s) { a *= s; }
  static void mul_upow(Scalar&, int, const CoefEnv&) {
    throw std::logic_error("u power on a plain scalar coefficient");
  }
  // [lambda + e]_{q^2} when the slot carries the formal power marker
  static Scalar marker_bracket(const CoefEnv&, int) {
    throw std::logic_error("marker bracket on a plain scalar coefficient");
  }
  static bool equal(const Scalar& a, const Scalar& b) { return a == b; }
};

template <>
struct CoefOps<LaurentU> {
  static LaurentU from_scalar(const Scalar& s, const CoefEnv& env) {
    return LaurentU::constant(s, env.ulo, env.uhi);
  }
  static bool is_zero(const LaurentU& s) { return s.is_zero(); }
  static void add_into(LaurentU& a, const LaurentU& b) { a = a + b; }
  static LaurentU mul(const LaurentU& a, const LaurentU& b) { return a * b; }
  static void mul_scalar(LaurentU& a, const Scalar& s) { a = a.scaled(s); }
  static void mul_upow(LaurentU& a, int k, const CoefEnv&) { a = a.shifted(k); }
  static LaurentU marker_bracket(const CoefEnv& env, int e) {
    // (u q^{2e} - 1) / (q^2 - 1)
    Scalar q2 = Scalar::q_pow(env.q, 2);
    Scalar d = (q2 - Scalar::one()).inverse();
    LaurentU r(env.ulo, env.uhi);
    r.add_to(1, Scalar::q_pow(env.q, 2 * e) * d);
    r.add_to(0, -d);
    return r;
  }
  static bool equal(const LaurentU& a, const LaurentU& b) { return a == b; }
};

// Polynomial in the commuting variables x_0..x_n, xi_0..xi_n with
// coefficients in R.
template <class R>
class XPolyT {
 public:
  using Ops = CoefOps<R>;

  XPolyT() = default;

  static XPolyT zero() { return XPolyT(); }

  static XPolyT constant(R c) {
    XPolyT p;
    if (!Ops::is_zero(c)) p.t_.emplace(kXOne, std::move(c));
    return p;
  }

  static XPolyT from_scalar(const Scalar& s, const CoefEnv& env) {
    return constant(Ops::from_scalar(s, env));
  }

  static XPolyT variable(int slot, const CoefEnv& env, int power = 1) {
    XPolyT p;
    p.t_.emplace(xmon_unit(slot, power), Ops::from_scalar(Scalar::one(), env));
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  const std::map<XMon, R>& terms() const { return t_; }

  void add_term(XMon m, R c) {
    if (Ops::is_zero(c)) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
      t_.emplace(m, std::move(c));
    } else {
      Ops::add_into(it->second, c);
      if (Ops::is_zero(it->second)) t_.erase(it);
    }
  }

  friend XPolyT operator+(const XPolyT& a, const XPolyT& b) {
    XPolyT r = a;
    for (const auto& [m, c] : b.t_) r.add_term(m, c);
    return r;
  }

  XPolyT operator-() const {
    XPolyT r;
    for (const auto& [m, c] : t_) {
      R v = c;
      Ops::mul_scalar(v, Scalar::integer(-1));
      r.t_.emplace(m, std::move(v));
    }
    return r;
  }

  friend XPolyT operator-(const XPolyT& a, const XPolyT& b) { return a + (-b); }

  friend XPolyT operator*(const XPolyT& a, const XPolyT& b) {
    XPolyT r;
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) r.add_term(xmon_mul(ma, mb), Ops::mul(ca, cb));
    return r;
  }

  XPolyT scaled(const Scalar& s) const {
    XPolyT r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : t_) {
      R v = c;
      Ops::mul_scalar(v, s);
      if (!Ops::is_zero(v)) r.t_.emplace(m, std::move(v));
    }
    return r;
  }

  friend bool operator==(const XPolyT& a, const XPolyT& b) {
    if (a.t_.size() != b.t_.size()) return false;
    auto ia = a.t_.begin();
    for (auto ib = b.t_.begin(); ib != b.t_.end(); ++ia, ++ib)
      if (ia->first != ib->first || !Ops::equal(ia->second, ib->second)) return false;
    return true;
  }

  // letter with the given index crossing this polynomial: every variable of
  // the leg with slot index > a picks up q^{2 dir}; the xi_1 marker slot also
  // contributes u^{dir}.
  XPolyT shifted_past(int leg, int a, int dir, const CoefEnv& env) const {
    XPolyT r;
    for (const auto& [m, c] : t_) {
      long steps = 0;
      bool marker = false;
      for (int j = a + 1; j <= 3; ++j) {
        int slot = leg == 0 ? x_slot(j) : xi_slot(j);
        int e = xmon_get(m, slot);
        if (env.xi1_marker && leg == 1 && j == 1) {
          marker = true;
          steps += 2L * dir * e;
        } else {
          steps += 2L * dir * e;
        }
      }
      R v = c;
      if (steps != 0) Ops::mul_scalar(v, Scalar::q_pow(env.q, steps));
      if (marker) Ops::mul_upow(v, dir, env);
      r.add_term(m, std::move(v));
    }
    return r;
  }

  // q-difference in variable j of the leg: t^e -> [e]_{q^2} t^{e-1}
  XPolyT qdiff(int leg, int j, const CoefEnv& env) const {
    XPolyT r;
    int slot = leg == 0 ? x_slot(j) : xi_slot(j);
    bool marker = env.xi1_marker && leg == 1 && j == 1;
    for (const auto& [m, c] : t_) {
      int e = xmon_get(m, slot);
      R v = c;
      if (marker) {
        R br = Ops::marker_bracket(env, e);
        v = Ops::mul(v, br);
      } else {
        if (e == 0) continue;
        Ops::mul_scalar(v, qint2(env.q, e));
      }
      if (!Ops::is_zero(v)) r.add_term(xmon_set(m, slot, e - 1), std::move(v));
    }
    return r;
  }

  // substitute variable slot := value (0 or any scalar)
  XPolyT subst_const(int slot, const Scalar& value, const CoefEnv& env) const {
    XPolyT r;
    for (const auto& [m, c] : t_) {
      int e = xmon_get(m, slot);
      R v = c;
      if (e != 0) {
        if (value.is_zero()) {
          if (e > 0) continue;
          throw std::domain_error("negative power at zero substitution");
        }
        Ops::mul_scalar(v, value.pow(e));
      }
      r.add_term(xmon_set(m, slot, 0), std::move(v));
    }
    return r;
  }

  int max_degree() const {
    int d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, xmon_degree(m));
    return d;
  }

 private:
  std::map<XMon, R> t_;
};

using XPolyS = XPolyT<Scalar>;
using XPolyU = XPolyT<LaurentU>;

}  // namespace qhs
