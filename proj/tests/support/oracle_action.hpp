#pragma once

// Test-only action of the Hopf generators on letter words: plain Leibniz over
// the letters with the generator tables, no normal-form shortcuts. Used to
// cross-check the engine's q-difference route on coordinate polynomials.

#include "letter_oracle.hpp"
#include "qhs/uq.hpp"

namespace letter_oracle {

inline int kw(int i, uint8_t l) {
  int idx = idx_of(l);
  int w = (i == idx + 1 ? 1 : 0) - (i == idx ? 1 : 0);
  return star_of(l) ? -w : w;
}

inline Expr act_gen(int n, const qhs::UqGen& g, const Expr& e) {
  using qhs::GenKind;
  using qhs::Scalar;
  qhs::QCtx ctx;
  Expr out;
  for (const auto& [w, c] : e.t) {
    if (g.kind == GenKind::Kp || g.kind == GenKind::Km) {
      long half = 0;
      for (uint8_t l : w) half += kw(g.i, l);
      if (g.kind == GenKind::Km) half = -half;
      out.add(w, c * Scalar::q_half(ctx, half));
      continue;
    }
    bool plus = g.kind == GenKind::Xp;
    Scalar sign1 = Scalar::integer(g.i == 1 ? 1 : -1);
    for (size_t t = 0; t < w.size(); ++t) {
      long half = 0;
      for (size_t s = 0; s < w.size(); ++s) {
        if (s == t) continue;
        half += (s < t) ? kw(g.i, w[s]) : -kw(g.i, w[s]);
      }
      int j = idx_of(w[t]);
      bool star = star_of(w[t]);
      Scalar f;
      int nj = -1;
      if (!star) {
        if (plus && g.i == j && j >= 1) { f = Scalar::one(); nj = j - 1; }
        if (!plus && g.i == j + 1 && j + 1 <= n) { f = Scalar::one(); nj = j + 1; }
      } else {
        if (plus && g.i == j + 1 && j + 1 <= n) {
          f = sign1 * Scalar::q_pow(ctx, -1);
          nj = j + 1;
        }
        if (!plus && g.i == j && j >= 1) {
          f = sign1 * Scalar::q_pow(ctx, 1);
          nj = j - 1;
        }
      }
      if (nj < 0) continue;
      Word v = w;
      v[t] = L(nj, star);
      out.add(v, c * f * Scalar::q_half(ctx, half));
    }
  }
  return normalize(n, out);
}

}  // namespace letter_oracle
