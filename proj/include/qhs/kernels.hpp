#pragma once

#include "uq.hpp"

namespace qhs {

// Named elements of the kernel algebra. The second-leg letters are written
// zeta(); products with z-leg letters commute.
namespace kernels {

template <class R = Scalar>
Elt<R> z(const Ambient& amb, int j, bool star = false) {
  return Elt<R>::letter(amb, 0, j, star);
}

template <class R = Scalar>
Elt<R> zeta(const Ambient& amb, int j, bool star = false) {
  return Elt<R>::letter(amb, 1, j, star);
}

// z0 z0* - sum_j zj zj* on the z leg; equals the x0 coordinate
template <class R = Scalar>
Elt<R> t_kernel(const Ambient& amb) {
  return Elt<R>::coordinate(amb, 0, 0);
}

// the same invariant element carried on the second leg
template <class R = Scalar>
Elt<R> tau_kernel(const Ambient& amb) {
  return Elt<R>::coordinate(amb, 1, 0);
}

template <class R = Scalar>
Elt<R> K1(const Ambient& amb) {
  Elt<R> k = z<R>(amb, 0) * zeta<R>(amb, 0, true);
  for (int j = 1; j <= amb.n; ++j) k = k - z<R>(amb, j) * zeta<R>(amb, j, true);
  return k;
}

// weights q^{-2j} on the starred side; the involution sends K1 to q^{2n} K2
template <class R = Scalar>
Elt<R> K2(const Ambient& amb) {
  Elt<R> k = z<R>(amb, 0, true) * zeta<R>(amb, 0);
  for (int j = 1; j <= amb.n; ++j)
    k = k - (z<R>(amb, j, true) * zeta<R>(amb, j)).scaled(Scalar::q_pow(amb.env.q, -2 * j));
  return k;
}

template <class R = Scalar>
Elt<R> K_prime(const Ambient& amb) {
  Elt<R> k = Elt<R>::zero(amb);
  for (int j = 1; j <= amb.n - 1; ++j) k = k + z<R>(amb, j) * zeta<R>(amb, j, true);
  return k;
}

template <class R = Scalar>
Elt<R> K_double_prime(const Ambient& amb) {
  Elt<R> k = Elt<R>::zero(amb);
  for (int j = 1; j <= amb.n - 1; ++j)
    k = k + (z<R>(amb, j, true) * zeta<R>(amb, j)).scaled(Scalar::q_pow(amb.env.q, -2 * j));
  return k;
}

template <class R = Scalar>
Elt<R> poisson(const Ambient& amb) {
  return K1<R>(amb) * K2<R>(amb);
}

}  // namespace kernels

struct IntertwineReport {
  bool ok = true;
  std::vector<std::string> failures;  // generator names with nonzero residual
};

// Solves the invariance system generator by generator: the z-leg action of a
// must agree with the second-leg action of S^{-1}(a).
template <class R>
IntertwineReport is_intertwining(const Elt<R>& k) {
  const Ambient& amb = k.ambient();
  if (!amb.kernel) throw std::domain_error("is_intertwining needs a kernel element");
  IntertwineReport rep;
  QCtx ctx = amb.env.q;
  for (const UqGen& g : all_generators(amb.n)) {
    HopfWord a = HopfWord::gen(g.kind, g.i);
    Elt<R> lhs = act(a, k, 0);
    Elt<R> rhs = act(a.antipode(ctx, true), k, 1);
    if (!((lhs - rhs).is_zero())) {
      rep.ok = false;
      rep.failures.push_back(g.name());
    }
  }
  return rep;
}

// K1 K2 - q^2 K2 K1 - (1 - q^2) t tau, which must vanish identically
inline KernelElt identity_1_18_residual(int n, QCtx ctx = QCtx()) {
  Ambient amb = Ambient::kernel_free(n, ctx);
  using namespace kernels;
  Scalar q2 = Scalar::q_pow(ctx, 2);
  KernelElt k1 = K1(amb), k2 = K2(amb);
  return k1 * k2 - (k2 * k1).scaled(q2) -
         (t_kernel(amb) * tau_kernel(amb)).scaled(Scalar::one() - q2);
}

inline bool verify_identity_1_18(int n, QCtx ctx = QCtx()) {
  return identity_1_18_residual(n, ctx).is_zero();
}

}  // namespace qhs
