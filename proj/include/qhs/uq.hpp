#pragma once

#include <map>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace qhs {

enum class GenKind : uint8_t { Xp = 0, Xm = 1, Kp = 2, Km = 3 };

struct UqGen {
  GenKind kind;
  int i;  // 1..n

  uint8_t code() const { return uint8_t((int(kind) << 4) | i); }
  static UqGen from_code(uint8_t c) { return {GenKind(c >> 4), c & 0xf}; }

  std::string name() const {
    switch (kind) {
      case GenKind::Xp: return "X" + std::to_string(i) + "+";
      case GenKind::Xm: return "X" + std::to_string(i) + "-";
      case GenKind::Kp: return "K" + std::to_string(i) + "+";
      default: return "K" + std::to_string(i) + "-";
    }
  }
};

// Formal sums of generator words with scalar coefficients. No relations are
// imposed at this level; they are checked through the action.
class HopfWord {
 public:
  using Mono = std::vector<uint8_t>;

  HopfWord() = default;

  static HopfWord zero() { return HopfWord(); }

  static HopfWord unit(Scalar c = Scalar::one()) {
    HopfWord w;
    w.add(Mono{}, std::move(c));
    return w;
  }

  static HopfWord gen(GenKind k, int i) {
    HopfWord w;
    w.add(Mono{UqGen{k, i}.code()}, Scalar::one());
    return w;
  }

  const std::map<Mono, Scalar>& terms() const { return t_; }

  void add(const Mono& m, Scalar c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
      t_.emplace(m, std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  friend HopfWord operator+(const HopfWord& a, const HopfWord& b) {
    HopfWord r = a;
    for (const auto& [m, c] : b.t_) r.add(m, c);
    return r;
  }

  friend HopfWord operator-(const HopfWord& a, const HopfWord& b) {
    return a + b.scaled(Scalar::integer(-1));
  }

  friend HopfWord operator*(const HopfWord& a, const HopfWord& b) {
    HopfWord r;
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) {
        Mono m = ma;
        m.insert(m.end(), mb.begin(), mb.end());
        r.add(m, ca * cb);
      }
    return r;
  }

  HopfWord scaled(const Scalar& s) const {
    HopfWord r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, c * s);
    return r;
  }

  HopfWord pow(int k) const {
    HopfWord r = unit();
    for (int j = 0; j < k; ++j) r = r * (*this);
    return r;
  }

  // antipode (or its inverse): anti-multiplicative, generator-wise
  //   S(K±) = K∓,  S(X±) = -q^{∓1} X±,  S^{-1}(X±) = -q^{±1} X±
  HopfWord antipode(const QCtx& ctx, bool inverse = false) const {
    HopfWord r;
    for (const auto& [m, c] : t_) {
      Mono rm;
      Scalar f = c;
      for (auto it = m.rbegin(); it != m.rend(); ++it) {
        UqGen g = UqGen::from_code(*it);
        switch (g.kind) {
          case GenKind::Kp: rm.push_back(UqGen{GenKind::Km, g.i}.code()); break;
          case GenKind::Km: rm.push_back(UqGen{GenKind::Kp, g.i}.code()); break;
          case GenKind::Xp:
            rm.push_back(*it);
            f *= -Scalar::q_pow(ctx, inverse ? 1 : -1);
            break;
          case GenKind::Xm:
            rm.push_back(*it);
            f *= -Scalar::q_pow(ctx, inverse ? -1 : 1);
            break;
        }
      }
      r.add(rm, f);
    }
    return r;
  }

  // antilinear antiautomorphism: (K±)* = K±, (X±_i)* = (-1)^{[i=1]} X∓_i
  HopfWord star() const {
    HopfWord r;
    for (const auto& [m, c] : t_) {
      Mono rm;
      Scalar f = c;  // coefficients are real here; conjugation is identity
      for (auto it = m.rbegin(); it != m.rend(); ++it) {
        UqGen g = UqGen::from_code(*it);
        switch (g.kind) {
          case GenKind::Kp:
          case GenKind::Km: rm.push_back(*it); break;
          case GenKind::Xp:
            rm.push_back(UqGen{GenKind::Xm, g.i}.code());
            if (g.i == 1) f = -f;
            break;
          case GenKind::Xm:
            rm.push_back(UqGen{GenKind::Xp, g.i}.code());
            if (g.i == 1) f = -f;
            break;
        }
      }
      r.add(rm, f);
    }
    return r;
  }

 private:
  std::map<Mono, Scalar> t_;
};

namespace detail {

// K_i^+ weight of a letter, in half powers of q
inline int kweight(int i, int idx, bool star) {
  int w = (i == idx + 1 ? 1 : 0) - (i == idx ? 1 : 0);
  return star ? -w : w;
}

struct Atom {
  bool is_coef;
  int idx;
  bool star;
};

template <class R>
Elt<R> term_element(const Ambient& amb, const TermKey& k, const XPolyT<R>& c) {
  Elt<R> e(amb);
  e.add_term(k, c);
  return e;
}

}  // namespace detail

// Action of one generator on one tensor leg of an element. Letters of the
// other leg are transparent; coordinate factors respond through the
// q-difference operator.
template <class R>
Elt<R> act_gen(const UqGen& g, const Elt<R>& e, int leg = 0) {
  const Ambient& amb = e.ambient();
  const CoefEnv& env = amb.env;
  const int i = g.i;
  if (i < 1 || i > amb.n) throw std::domain_error("generator index out of range");
  Elt<R> out(amb);

  for (const auto& [key, coef] : e.terms()) {
    MIdx I = leg == 0 ? key.zI : key.wI;
    MIdx J = leg == 0 ? key.zJ : key.wJ;
    // K generators act diagonally on letters and fix the coordinates
    if (g.kind == GenKind::Kp || g.kind == GenKind::Km) {
      long half = 0;
      for (int j = 0; j <= amb.n; ++j) {
        half += (long)midx_get(I, j) * detail::kweight(i, j, true);
        half += (long)midx_get(J, j) * detail::kweight(i, j, false);
      }
      if (g.kind == GenKind::Km) half = -half;
      Elt<R> t = detail::term_element(amb, key, coef);
      out = out + t.scaled(Scalar::q_half(env.q, half));
      continue;
    }

    const bool plus = g.kind == GenKind::Xp;
    const Scalar sign1 = Scalar::integer(i == 1 ? 1 : -1);  // -(-1)^{[i=1]}

    // atoms of this leg in normal order: starred block, coordinates, unstarred
    std::vector<detail::Atom> atoms;
    for (int j = 0; j <= amb.n; ++j)
      for (int c = 0; c < midx_get(I, j); ++c) atoms.push_back({false, j, true});
    atoms.push_back({true, 0, false});
    for (int j = 0; j <= amb.n; ++j)
      for (int c = 0; c < midx_get(J, j); ++c) atoms.push_back({false, j, false});

    for (size_t t = 0; t < atoms.size(); ++t) {
      // K+ on the prefix, K- on the suffix
      long half = 0;
      for (size_t s = 0; s < atoms.size(); ++s) {
        if (s == t || atoms[s].is_coef) continue;
        int w = detail::kweight(i, atoms[s].idx, atoms[s].star);
        half += (s < t) ? w : -w;
      }

      // element holding the atoms of [from, to), this leg only
      auto partial = [&](size_t from, size_t to) {
        TermKey pk;
        MIdx* pI = leg == 0 ? &pk.zI : &pk.wI;
        MIdx* pJ = leg == 0 ? &pk.zJ : &pk.wJ;
        bool has_coef = false;
        for (size_t s = from; s < to; ++s) {
          if (atoms[s].is_coef) {
            has_coef = true;
            continue;
          }
          MIdx& m = atoms[s].star ? *pI : *pJ;
          m = midx_set(m, atoms[s].idx, midx_get(m, atoms[s].idx) + 1);
        }
        XPolyT<R> c =
            has_coef ? coef : XPolyT<R>::from_scalar(Scalar::one(), env);
        return detail::term_element(amb, pk, c);
      };

      Elt<R> replaced(amb);
      if (!atoms[t].is_coef) {
        int j = atoms[t].idx;
        Scalar f;
        int nj = -1;
        if (!atoms[t].star) {
          if (plus && i == j && j >= 1) { f = Scalar::one(); nj = j - 1; }
          if (!plus && i == j + 1 && j + 1 <= amb.n) { f = Scalar::one(); nj = j + 1; }
        } else {
          if (plus && i == j + 1 && j + 1 <= amb.n) {
            f = sign1 * Scalar::q_pow(env.q, -1);
            nj = j + 1;
          }
          if (!plus && i == j && j >= 1) {
            f = sign1 * Scalar::q_pow(env.q, 1);
            nj = j - 1;
          }
        }
        if (nj < 0) continue;
        replaced = Elt<R>::letter(amb, leg, nj, atoms[t].star).scaled(f);
      } else {
        // X_i^± on a coordinate polynomial
        XPolyT<R> b = coef.qdiff(leg, i, env).shifted_past(leg, i, +1, env);
        if (b.is_zero()) continue;
        Elt<R> mid(amb);
        mid.add_term(TermKey{}, std::move(b));
        Elt<R> left = Elt<R>::letter(amb, leg, plus ? i : i - 1, true);
        Elt<R> right = Elt<R>::letter(amb, leg, plus ? i - 1 : i, false);
        Scalar f = plus ? Scalar::q_half(env.q, 1) : sign1 * Scalar::q_half(env.q, 3);
        replaced = left * mid * right;
        replaced = replaced.scaled(f);
      }

      Elt<R> piece = partial(0, t) * replaced * partial(t + 1, atoms.size());
      // the other tensor leg never crosses anything here; graft it back on
      if (amb.kernel) {
        Elt<R> grafted(amb);
        for (const auto& [pk, pc] : piece.terms()) {
          TermKey nk = pk;
          if (leg == 0) {
            nk.wI = key.wI;
            nk.wJ = key.wJ;
          } else {
            nk.zI = key.zI;
            nk.zJ = key.zJ;
          }
          grafted.add_term(nk, pc);
        }
        piece = std::move(grafted);
      }
      out = out + piece.scaled(Scalar::q_half(env.q, half));
    }
  }
  return out;
}

template <class R>
Elt<R> act(const HopfWord& a, const Elt<R>& e, int leg = 0) {
  Elt<R> out(e.ambient());
  for (const auto& [m, c] : a.terms()) {
    Elt<R> v = e;
    for (auto it = m.rbegin(); it != m.rend(); ++it)
      v = act_gen<R>(UqGen::from_code(*it), v, leg);
    out = out + v.scaled(c);
  }
  return out;
}

inline std::vector<UqGen> all_generators(int n) {
  std::vector<UqGen> g;
  for (int i = 1; i <= n; ++i) {
    g.push_back({GenKind::Xp, i});
    g.push_back({GenKind::Xm, i});
    g.push_back({GenKind::Kp, i});
    g.push_back({GenKind::Km, i});
  }
  return g;
}

struct RelationReport {
  std::string relation;
  bool pass = true;
  long checked = 0;
};

// Cartan matrix of type A_n
inline int cartan(int i, int j) { return i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0); }

// Checks the defining relations as operator identities on all normal-form
// monomials of letter-plus-coordinate degree <= cap (coordinates count 2).
inline std::vector<RelationReport> verify_module_relations(int n, int cap,
                                                           Quot quot = Quot::free_alg) {
  Ambient amb = Ambient::algebra(n, quot);
  // enumerate the basis
  std::vector<std::pair<TermKey, XMon>> basis;
  std::vector<MIdx> letter_idx;
  std::function<void(int, int, MIdx)> gen_midx = [&](int slot, int left, MIdx m) {
    if (slot > n) {
      letter_idx.push_back(m);
      return;
    }
    for (int v = 0; v <= left; ++v) gen_midx(slot + 1, left - v, midx_set(m, slot, v));
  };
  gen_midx(0, cap, 0);
  std::vector<XMon> xmons;
  std::function<void(int, int, XMon)> gen_xmon = [&](int slot, int left, XMon m) {
    if (slot > n) {
      xmons.push_back(m);
      return;
    }
    int lo = (slot == 0 && quot != Quot::free_alg) ? 0 : left;
    for (int v = 0; v <= lo; ++v) gen_xmon(slot + 1, left - v, xmon_set(m, x_slot(slot), v));
  };
  for (MIdx I : letter_idx) {
    for (MIdx J : letter_idx) {
      bool disjoint = true;
      int d = midx_total(I) + midx_total(J);
      if (d > cap) continue;
      for (int s = 0; s <= n; ++s)
        if (midx_get(I, s) && midx_get(J, s)) disjoint = false;
      if (!disjoint) continue;
      xmons.clear();
      gen_xmon(0, (cap - d) / 2, kXOne);
      for (XMon m : xmons) basis.emplace_back(TermKey{I, J, 0, 0}, m);
    }
  }

  auto monomial = [&](size_t b) {
    AlgebraElt e(amb);
    XPolyS p;
    p.add_term(basis[b].second, Scalar::one());
    e.add_term(basis[b].first, p);
    return e;
  };

  QCtx ctx = amb.env.q;
  auto X = [&](int sgn, int i) { return HopfWord::gen(sgn > 0 ? GenKind::Xp : GenKind::Xm, i); };
  auto K = [&](int sgn, int i) { return HopfWord::gen(sgn > 0 ? GenKind::Kp : GenKind::Km, i); };

  std::vector<std::pair<std::string, std::pair<HopfWord, HopfWord>>> rels;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      rels.push_back({"K commute (" + std::to_string(i) + "," + std::to_string(j) + ")",
                      {K(1, i) * K(1, j), K(1, j) * K(1, i)}});
      if (i == j)
        rels.push_back({"K" + std::to_string(i) + " inverse",
                        {K(1, i) * K(-1, i), HopfWord::unit()}});
      for (int sx : {1, -1}) {
        // K_i^+ X_j^± = q^{± a_ij / 2} X_j^± K_i^+
        Scalar f = Scalar::q_half(ctx, sx * cartan(i, j));
        rels.push_back({"KX exchange (" + std::to_string(i) + "," + std::to_string(j) +
                            (sx > 0 ? ",+" : ",-") + ")",
                        {K(1, i) * X(sx, j), (X(sx, j) * K(1, i)).scaled(f)}});
      }
      // [X_i^+, X_j^-] = delta_ij (K+^2 - K-^2)/(q - q^{-1})
      HopfWord lhs = X(1, i) * X(-1, j) - X(-1, j) * X(1, i);
      HopfWord rhs;
      if (i == j) {
        Scalar d = (Scalar::q_pow(ctx, 1) - Scalar::q_pow(ctx, -1)).inverse();
        rhs = (K(1, i) * K(1, i) - K(-1, i) * K(-1, i)).scaled(d);
      } else {
        rhs = HopfWord::zero();
      }
      rels.push_back({"XX commutator (" + std::to_string(i) + "," + std::to_string(j) + ")",
                      {lhs, rhs}});
      if (i != j) {
        // Serre relations
        int a = cartan(i, j);
        int m = 1 - a;
        for (int sx : {1, -1}) {
          HopfWord sum;
          for (int k = 0; k <= m; ++k) {
            // symmetric Gauss binomial: q^{-k(m-k)} [m k]_{q^2}
            Scalar c = qbinom(m, k, Scalar::q_pow(ctx, 2)) * Scalar::q_pow(ctx, -k * (m - k));
            if (k % 2) c = -c;
            sum = sum + (X(sx, i).pow(m - k) * X(sx, j) * X(sx, i).pow(k)).scaled(c);
          }
          rels.push_back({"Serre (" + std::to_string(i) + "," + std::to_string(j) +
                              (sx > 0 ? ",+" : ",-") + ")",
                          {sum, HopfWord::zero()}});
        }
      }
    }

  std::vector<RelationReport> out;
  for (auto& [name, pair] : rels) {
    RelationReport rep;
    rep.relation = name;
    for (size_t b = 0; b < basis.size(); ++b) {
      AlgebraElt e = monomial(b);
      if (!(act(pair.first, e) == act(pair.second, e))) {
        rep.pass = false;
        break;
      }
      ++rep.checked;
    }
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace qhs
