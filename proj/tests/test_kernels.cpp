#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qhs/kernels.hpp"

using namespace qhs;
using namespace qhs::kernels;

namespace {
Scalar qp(long k) { return Scalar::q_pow(QCtx(), k); }
}

TEST_CASE("kernel constructors") {
  Ambient k = Ambient::kernel_free(1);
  REQUIRE(K1(k) == z(k, 0) * zeta(k, 0, true) - z(k, 1) * zeta(k, 1, true));
  REQUIRE(poisson(k) == K1(k) * K2(k));
  REQUIRE(K_prime(k).is_zero());  // empty middle block at rank 1
  Ambient k3 = Ambient::kernel_free(3);
  REQUIRE(K_prime(k3) ==
          z(k3, 1) * zeta(k3, 1, true) + z(k3, 2) * zeta(k3, 2, true));
}

TEST_CASE("named kernels are intertwining") {
  for (int n = 1; n <= 2; ++n) {
    for (bool quotient : {false, true}) {
      Ambient k = quotient ? Ambient::kernel_quotient(n) : Ambient::kernel_free(n);
      REQUIRE(is_intertwining(K1(k)).ok);
      REQUIRE(is_intertwining(K2(k)).ok);
      REQUIRE(is_intertwining(t_kernel(k)).ok);
      REQUIRE(is_intertwining(tau_kernel(k)).ok);
      REQUIRE(is_intertwining(KernelElt::one(k)).ok);
    }
  }
}

TEST_CASE("non-invariant elements are flagged with a witness") {
  Ambient k = Ambient::kernel_free(1);
  auto rep = is_intertwining(z(k, 0));
  REQUIRE(!rep.ok);
  REQUIRE(!rep.failures.empty());
}

TEST_CASE("the quadratic exchange identity holds") {
  REQUIRE(verify_identity_1_18(1));
  REQUIRE(verify_identity_1_18(2));
}

TEST_CASE("perturbing the exchange coefficient breaks the identity") {
  QCtx ctx;
  Ambient amb = Ambient::kernel_free(1);
  Scalar q3 = Scalar::q_pow(ctx, 3);
  KernelElt k1 = K1(amb), k2 = K2(amb);
  KernelElt res = k1 * k2 - (k2 * k1).scaled(q3) -
                  (t_kernel(amb) * tau_kernel(amb)).scaled(Scalar::one() - q3);
  REQUIRE(!res.is_zero());
}

TEST_CASE("t and tau are central") {
  for (int n = 1; n <= 2; ++n) {
    Ambient k = Ambient::kernel_free(n);
    REQUIRE(check_centrality(t_kernel(k)).central);
    REQUIRE(check_centrality(tau_kernel(k)).central);
    auto r = check_centrality(z(k, 0));
    REQUIRE(!r.central);
  }
}

TEST_CASE("kernel involution basics") {
  for (int n = 2; n <= 3; ++n) {
    Ambient k = Ambient::kernel_free(n);
    REQUIRE(K_double_prime(k).kernel_star() ==
            K_prime(k).scaled(qp(-2 * n)));
    REQUIRE(KernelElt::one(k).kernel_star() == KernelElt::one(k));
    REQUIRE(K1(k).kernel_star() == K2(k).scaled(qp(2 * n)));
  }
}

TEST_CASE("kernel involution is an antiinvolution") {
  std::mt19937 rng(21);
  Ambient k = Ambient::kernel_free(2);
  std::vector<KernelElt> ls;
  for (int leg = 0; leg <= 1; ++leg)
    for (int j = 0; j <= 2; ++j)
      for (int s = 0; s <= 1; ++s) ls.push_back(KernelElt::letter(k, leg, j, s));
  std::uniform_int_distribution<size_t> pick(0, ls.size() - 1);
  for (int it = 0; it < 10; ++it) {
    KernelElt f = KernelElt::one(k), g = KernelElt::one(k);
    for (int s = 0; s < 3; ++s) f = f * ls[pick(rng)];
    for (int s = 0; s < 2; ++s) g = g * ls[pick(rng)];
    REQUIRE(f.kernel_star().kernel_star() == f);
    REQUIRE((f * g).kernel_star() == g.kernel_star() * f.kernel_star());
  }
}

TEST_CASE("poisson kernel is involution-fixed") {
  for (int n = 1; n <= 2; ++n) {
    Ambient k = Ambient::kernel_free(n);
    REQUIRE(poisson(k).kernel_star() == poisson(k));
  }
}

TEST_CASE("intertwining kernels form a subalgebra") {
  Ambient k = Ambient::kernel_free(1);
  std::vector<KernelElt> basics = {K1(k), K2(k), t_kernel(k), tau_kernel(k)};
  for (const auto& a : basics)
    for (const auto& b : basics) REQUIRE(is_intertwining(a * b).ok);
  KernelElt p = poisson(k);
  KernelElt pm = KernelElt::one(k);
  for (int m = 1; m <= 3; ++m) {
    pm = pm * p;
    REQUIRE(is_intertwining(pm).ok);
  }
}

TEST_CASE("the involution preserves intertwining kernels") {
  Ambient k = Ambient::kernel_free(2);
  REQUIRE(is_intertwining(K1(k).kernel_star()).ok);
  REQUIRE(is_intertwining(K2(k).kernel_star()).ok);
}
