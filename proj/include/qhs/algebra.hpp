#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coeff.hpp"

namespace qhs {

enum class Quot { free_alg, cone, hyperboloid };

// Ambient algebra data: rank, quotients per tensor leg, coefficient
// environment. Plain algebra elements live on the z leg only.
struct Ambient {
  int n = 1;
  bool kernel = false;
  Quot quot_z = Quot::free_alg;
  Quot quot_w = Quot::free_alg;
  CoefEnv env;

  friend bool operator==(const Ambient& a, const Ambient& b) {
    return a.n == b.n && a.kernel == b.kernel && a.quot_z == b.quot_z &&
           a.quot_w == b.quot_w;
  }

  static Ambient algebra(int n, Quot q = Quot::free_alg, QCtx ctx = QCtx()) {
    Ambient a;
    a.n = n;
    a.quot_z = q;
    a.env.q = ctx;
    return a;
  }

  // kernel algebra: z leg (target space) tensor opposite of the w leg
  static Ambient kernel_free(int n, QCtx ctx = QCtx()) {
    Ambient a;
    a.n = n;
    a.kernel = true;
    a.env.q = ctx;
    return a;
  }

  static Ambient kernel_quotient(int n, QCtx ctx = QCtx()) {
    Ambient a = kernel_free(n, ctx);
    a.quot_z = Quot::hyperboloid;
    a.quot_w = Quot::cone;
    return a;
  }
};

struct TermKey {
  MIdx zI = 0, zJ = 0;  // starred / unstarred letters, z leg
  MIdx wI = 0, wJ = 0;  // starred / unstarred letters, second leg (stored plainly)

  friend bool operator==(const TermKey&, const TermKey&) = default;
  friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

namespace detail {

inline Scalar qh(const QCtx& ctx, long half_steps) { return Scalar::q_half(ctx, half_steps); }

// same-index pair values in the free algebra (leg-0 slots)
inline XPolyS elim_unstarred_starred(int n, int a) {
  // z_a z_a^*
  CoefEnv env;
  XPolyS p;
  if (a == 0) {
    p = XPolyS::variable(x_slot(0), env) + XPolyS::variable(x_slot(1), env);
  } else {
    p = XPolyS::variable(x_slot(a), env);
    if (a + 1 <= n) p = p - XPolyS::variable(x_slot(a + 1), env);
  }
  return p;
}

inline XPolyS elim_starred_unstarred(int n, int a) {
  // z_a^* z_a
  CoefEnv env;
  Scalar qm2 = Scalar::q_pow(env.q, -2);
  XPolyS p;
  if (a == 0) {
    p = XPolyS::variable(x_slot(0), env) +
        XPolyS::variable(x_slot(1), env).scaled(qm2);
  } else {
    p = XPolyS::variable(x_slot(a), env);
    if (a + 1 <= n) p = p - XPolyS::variable(x_slot(a + 1), env).scaled(qm2);
  }
  return p;
}

struct StrTerm {
  MIdx A = 0, B = 0;
  long half = 0;  // scalar factor q^{half/2}
  XPolyS E;       // leg-0 slots, free ambient
};

// z^J (z^*)^I  ->  sum_t  q^{half/2} (z^*)^{A} E(x) z^{B}
inline const std::vector<StrTerm>& straighten(int n, MIdx J, MIdx I) {
  static std::unordered_map<uint64_t, std::vector<StrTerm>> memo[4];
  uint64_t key = (uint64_t(J) << 32) | I;
  auto& m = memo[n];
  auto it = m.find(key);
  if (it != m.end()) return it->second;

  CoefEnv sym;
  std::vector<StrTerm> out;
  if (J == 0 || I == 0) {
    out.push_back({I, J, 0, XPolyS::from_scalar(Scalar::one(), sym)});
    return m.emplace(key, std::move(out)).first->second;
  }
  int j = 3;
  while (midx_get(J, j) == 0) --j;
  MIdx J2 = midx_set(J, j, midx_get(J, j) - 1);

  if (midx_get(I, j) == 0) {
    // z_j hops across the whole starred block
    long half = 2L * midx_total(I);
    for (const auto& t : straighten(n, J2, I)) {
      StrTerm r = t;
      r.half += half;
      r.B = midx_add(r.B, midx_unit(j));
      out.push_back(std::move(r));
    }
  } else {
    // z_j meets z_j^*: eliminate into the x value
    long half = 0;
    for (int b = 0; b < j; ++b) half += 2L * midx_get(I, b);
    XPolyS E0 = elim_unstarred_starred(n, j);
    int cj = midx_get(I, j) - 1;
    if (cj > 0) E0 = E0.shifted_past(0, j, cj, CoefEnv());
    for (int b = j + 1; b <= 3; ++b) {
      int cb = midx_get(I, b);
      if (cb > 0) E0 = E0.shifted_past(0, b, cb, CoefEnv());
    }
    MIdx I2 = midx_set(I, j, midx_get(I, j) - 1);
    for (const auto& t : straighten(n, J2, I2)) {
      StrTerm r = t;
      r.half += half;
      XPolyS E0s = E0;
      for (int b = 0; b <= 3; ++b) {
        int cb = midx_get(t.B, b);
        if (cb > 0) E0s = E0s.shifted_past(0, b, cb, CoefEnv());
      }
      r.E = r.E * E0s;
      out.push_back(std::move(r));
    }
  }
  return m.emplace(key, std::move(out)).first->second;
}

template <class R>
XPolyT<R> convert_poly(const XPolyS& p, int leg, Quot quot, const CoefEnv& env) {
  XPolyT<R> r;
  int slot0 = leg == 0 ? x_slot(0) : xi_slot(0);
  for (const auto& [m, c] : p.terms()) {
    Scalar cc = c;
    if (env.q.numeric && !cc.numeric()) cc = Scalar::number(cc.eval(env.q.qval));
    XMon mm = m;
    if (leg == 1) {
      // remap x slots onto xi slots
      mm = kXOne;
      for (int s = 0; s < 4; ++s) mm = xmon_set(mm, xi_slot(s), xmon_get(m, x_slot(s)));
    }
    int e0 = xmon_get(mm, slot0);
    if (e0 != 0) {
      if (quot == Quot::cone) continue;  // x0 := 0 kills the monomial
      if (quot == Quot::hyperboloid) mm = xmon_set(mm, slot0, 0);
    }
    XPolyT<R> term;
    term.add_term(mm, CoefOps<R>::from_scalar(cc, env));
    r = r + term;
  }
  return r;
}

template <class R>
void shift_block(XPolyT<R>& c, int leg, MIdx block, int dir, const CoefEnv& env) {
  for (int a = 0; a <= 3; ++a) {
    int cnt = midx_get(block, a);
    if (cnt > 0) c = c.shifted_past(leg, a, dir * cnt, env);
  }
}

// eliminate same-index starred/unstarred pairs split across the coefficient
template <class R>
void contract_leg(const Ambient& amb, int leg, MIdx& I, MIdx& J, XPolyT<R>& c,
                  long& half) {
  Quot quot = leg == 0 ? amb.quot_z : amb.quot_w;
  for (int a = 0; a <= amb.n; ++a) {
    while (midx_get(I, a) > 0 && midx_get(J, a) > 0) {
      for (int b = a + 1; b <= 3; ++b) half -= 2L * midx_get(I, b);
      c = c.shifted_past(leg, a, -1, amb.env);
      for (int b = 0; b < a; ++b) half += 2L * midx_get(J, b);
      XPolyT<R> E = convert_poly<R>(elim_starred_unstarred(amb.n, a), leg, quot, amb.env);
      c = c * E;
      I = midx_set(I, a, midx_get(I, a) - 1);
      J = midx_set(J, a, midx_get(J, a) - 1);
    }
  }
}

}  // namespace detail

// Element of the algebra (z leg) or of the kernel algebra (z leg tensor the
// opposite of the second leg), kept in normal form: all starred letters to
// the left of the coefficient, unstarred to the right, ascending indices,
// no same-index starred/unstarred pairs.
template <class R>
class Elt {
 public:
  using Poly = XPolyT<R>;

  Elt() = default;
  explicit Elt(Ambient amb) : amb_(std::move(amb)) {}

  static Elt zero(const Ambient& amb) { return Elt(amb); }

  static Elt from_scalar(const Ambient& amb, const Scalar& s) {
    Elt e(amb);
    e.add_term(TermKey{}, Poly::from_scalar(s, amb.env));
    return e;
  }

  static Elt one(const Ambient& amb) { return from_scalar(amb, Scalar::one()); }

  // leg 0 = z letters, leg 1 = zeta letters
  static Elt letter(const Ambient& amb, int leg, int idx, bool star) {
    if (idx < 0 || idx > amb.n) throw std::domain_error("letter index out of range");
    if (leg == 1 && !amb.kernel) throw std::domain_error("zeta letter outside a kernel algebra");
    TermKey k;
    if (leg == 0) {
      (star ? k.zI : k.zJ) = midx_unit(idx);
    } else {
      (star ? k.wI : k.wJ) = midx_unit(idx);
    }
    Elt e(amb);
    e.add_term(k, Poly::from_scalar(Scalar::one(), amb.env));
    return e;
  }

  // commuting coordinate x_j (leg 0) or xi_j (leg 1)
  static Elt coordinate(const Ambient& amb, int leg, int j, int power = 1) {
    if (j < 0 || j > amb.n) throw std::domain_error("coordinate index out of range");
    if (leg == 1 && !amb.kernel) throw std::domain_error("xi outside a kernel algebra");
    Quot quot = leg == 0 ? amb.quot_z : amb.quot_w;
    Elt e(amb);
    if (j == 0 && quot != Quot::free_alg) {
      if (quot == Quot::cone) return zero(amb);  // x0 = 0
      return from_scalar(amb, Scalar::one());    // x0 = 1
    }
    int slot = leg == 0 ? x_slot(j) : xi_slot(j);
    e.add_term(TermKey{}, Poly::variable(slot, amb.env, power));
    return e;
  }

  const Ambient& ambient() const { return amb_; }
  const std::map<TermKey, Poly>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add_term(const TermKey& k, Poly p) {
    if (p.is_zero()) return;
    auto it = t_.find(k);
    if (it == t_.end()) {
      t_.emplace(k, std::move(p));
    } else {
      it->second = it->second + p;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  friend Elt operator+(const Elt& a, const Elt& b) {
    Elt r = a;
    for (const auto& [k, p] : b.t_) r.add_term(k, p);
    return r;
  }

  friend Elt operator-(const Elt& a, const Elt& b) { return a + b.scaled(Scalar::integer(-1)); }

  Elt scaled(const Scalar& s) const {
    Elt r(amb_);
    if (s.is_zero()) return r;
    for (const auto& [k, p] : t_) r.t_.emplace(k, p.scaled(s));
    return r;
  }

  Elt scaled_coef(const R& s) const {
    Elt r(amb_);
    for (const auto& [k, p] : t_) {
      Poly q;
      for (const auto& [m, c] : p.terms()) q.add_term(m, CoefOps<R>::mul(c, s));
      if (!q.is_zero()) r.t_.emplace(k, std::move(q));
    }
    return r;
  }

  friend Elt operator*(const Elt& a, const Elt& b) {
    if (!(a.amb_ == b.amb_)) throw std::domain_error("ambient algebras differ");
    Elt r(a.amb_);
    for (const auto& [k1, c1] : a.t_)
      for (const auto& [k2, c2] : b.t_) mul_term_into(r, a.amb_, k1, c1, k2, c2);
    return r;
  }

  friend bool operator==(const Elt& a, const Elt& b) {
    if (!(a.amb_ == b.amb_)) return false;
    if (a.t_.size() != b.t_.size()) return false;
    auto ia = a.t_.begin();
    for (auto ib = b.t_.begin(); ib != b.t_.end(); ++ia, ++ib)
      if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
    return true;
  }

  // antilinear antihomomorphism of the z leg, z_j -> z_j^*
  Elt star() const {
    Elt r(amb_);
    for (const auto& [k, p] : t_) {
      if (k.wI || k.wJ) throw std::domain_error("star: use kernel_star on kernel elements");
      long half = 2 * (midx_self_inversions(k.zJ) - midx_self_inversions(k.zI));
      TermKey nk;
      nk.zI = k.zJ;
      nk.zJ = k.zI;
      r.add_term(nk, p.scaled(detail::qh(amb_.env.q, half)));
    }
    return r;
  }

  // antilinear antiinvolution of the kernel algebra:
  // z_j -> z_j^*, zeta_j -> q^{2(j-n)} zeta_j^*
  Elt kernel_star() const {
    Elt r(amb_);
    for (const auto& [k, p] : t_) {
      long half = 2 * (midx_self_inversions(k.zJ) - midx_self_inversions(k.zI));
      half += 2 * (midx_self_inversions(k.wJ) - midx_self_inversions(k.wI));
      long w = 0;
      for (int j = 0; j <= amb_.n; ++j) {
        w += 2L * (j - amb_.n) * midx_get(k.wJ, j);
        w += 2L * (amb_.n - j) * midx_get(k.wI, j);
      }
      half += 2 * w;
      TermKey nk;
      nk.zI = k.zJ;
      nk.zJ = k.zI;
      nk.wI = k.wJ;
      nk.wJ = k.wI;
      r.add_term(nk, p.scaled(detail::qh(amb_.env.q, half)));
    }
    return r;
  }

  // substitute the quotient values of x0 (and xi0 on kernels)
  Elt project(Quot qz, std::optional<Quot> qw = std::nullopt) const {
    Ambient amb = amb_;
    amb.quot_z = qz;
    if (amb.kernel) amb.quot_w = qw.value_or(Quot::cone);
    Elt r(amb);
    auto subst = [&](const Poly& p, int leg, Quot quot) {
      if (quot == Quot::free_alg) return p;
      int slot = leg == 0 ? x_slot(0) : xi_slot(0);
      Scalar v = quot == Quot::cone ? Scalar::zero() : Scalar::one();
      return p.subst_const(slot, v, amb.env);
    };
    for (const auto& [k, p] : t_) {
      Poly q = subst(p, 0, qz);
      if (amb.kernel) q = subst(q, 1, amb.quot_w);
      r.add_term(k, std::move(q));
    }
    return r;
  }

  int letter_degree() const {
    int d = 0;
    for (const auto& [k, p] : t_)
      d = std::max(d, midx_total(k.zI) + midx_total(k.zJ) + midx_total(k.wI) +
                          midx_total(k.wJ));
    return d;
  }

 private:
  static void mul_term_into(Elt& out, const Ambient& amb, const TermKey& k1,
                            const Poly& c1, const TermKey& k2, const Poly& c2) {
    const auto& tz = detail::straighten(amb.n, k1.zJ, k2.zI);
    const auto& tw = detail::straighten(amb.n, k2.wJ, k1.wI);  // opposite order
    for (const auto& sz : tz) {
      MIdx I = midx_add(k1.zI, sz.A);
      MIdx J = midx_add(sz.B, k2.zJ);
      long half = sz.half + 2 * midx_inversions(k1.zI, sz.A) -
                  2 * midx_inversions(sz.B, k2.zJ);
      Poly Ez = detail::convert_poly<R>(sz.E, 0, amb.quot_z, amb.env);
      for (const auto& sw : tw) {
        MIdx Iw = midx_add(k2.wI, sw.A);
        MIdx Jw = midx_add(sw.B, k1.wJ);
        long h = half + sw.half + 2 * midx_inversions(k2.wI, sw.A) -
                 2 * midx_inversions(sw.B, k1.wJ);
        Poly c1s = c1;
        detail::shift_block(c1s, 0, sz.A, +1, amb.env);
        detail::shift_block(c1s, 1, sw.B, +1, amb.env);
        Poly c2s = c2;
        detail::shift_block(c2s, 0, sz.B, +1, amb.env);
        detail::shift_block(c2s, 1, sw.A, +1, amb.env);
        Poly coef = c1s * Ez;
        coef = coef * detail::convert_poly<R>(sw.E, 1, amb.quot_w, amb.env);
        coef = coef * c2s;
        detail::contract_leg(amb, 0, I, J, coef, h);
        detail::contract_leg(amb, 1, Iw, Jw, coef, h);
        coef = coef.scaled(detail::qh(amb.env.q, h));
        TermKey nk{I, J, Iw, Jw};
        out.add_term(nk, std::move(coef));
      }
    }
  }

  Ambient amb_;
  std::map<TermKey, Poly> t_;
};

using AlgebraElt = Elt<Scalar>;
using KernelElt = Elt<Scalar>;

// generators of the ambient algebra, for centrality checks and witnesses
template <class R>
inline std::vector<std::pair<std::string, Elt<R>>> algebra_generators(const Ambient& amb) {
  std::vector<std::pair<std::string, Elt<R>>> g;
  for (int j = 0; j <= amb.n; ++j) {
    g.emplace_back("z" + std::to_string(j), Elt<R>::letter(amb, 0, j, false));
    g.emplace_back("z" + std::to_string(j) + "*", Elt<R>::letter(amb, 0, j, true));
  }
  if (amb.kernel) {
    for (int j = 0; j <= amb.n; ++j) {
      g.emplace_back("zeta" + std::to_string(j), Elt<R>::letter(amb, 1, j, false));
      g.emplace_back("zeta" + std::to_string(j) + "*", Elt<R>::letter(amb, 1, j, true));
    }
  }
  return g;
}

struct CentralityReport {
  bool central = true;
  std::string witness;
};

template <class R>
inline CentralityReport check_centrality(const Elt<R>& c) {
  for (const auto& [name, g] : algebra_generators<R>(c.ambient())) {
    if (!((c * g - g * c).is_zero())) return {false, name};
  }
  return {true, ""};
}

}  // namespace qhs
