#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qhs/laurent.hpp"
#include "qhs/scalar.hpp"

using namespace qhs;

namespace {

Scalar random_scalar(std::mt19937& rng) {
  // rational function with numerator/denominator of degree <= 6 in q
  std::uniform_int_distribution<int> deg(0, 6), coef(-4, 4);
  QCtx ctx;
  auto poly = [&](bool nonzero) {
    Scalar p = Scalar::zero();
    for (int e = 0; e <= deg(rng); ++e)
      p += Scalar::integer(coef(rng)) * Scalar::q_pow(ctx, e);
    if (nonzero && p.is_zero()) p = Scalar::one() + Scalar::q_pow(ctx, 1);
    return p;
  };
  return poly(false) / poly(true);
}

}  // namespace

TEST_CASE("field axioms hold exactly on random rational functions") {
  std::mt19937 rng(12345);
  QCtx ctx;
  for (int it = 0; it < 60; ++it) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    if (!a.is_zero()) REQUIRE(a * a.inverse() == Scalar::one());
    REQUIRE(a - a == Scalar::zero());
  }
}

TEST_CASE("specialization commutes with arithmetic") {
  std::mt19937 rng(777);
  long double q = 0.37L;
  for (int it = 0; it < 40; ++it) {
    Scalar a = random_scalar(rng), b = random_scalar(rng);
    long double lhs = (a * b + a - b).eval(q);
    long double rhs = a.eval(q) * b.eval(q) + a.eval(q) - b.eval(q);
    REQUIRE(std::abs((double)(lhs - rhs)) < 1e-13);
  }
}

TEST_CASE("exact rational evaluation at rational q") {
  QCtx ctx;
  Scalar s = (Scalar::one() - Scalar::q_pow(ctx, 2)) / (Scalar::one() - Scalar::q_pow(ctx, 1));
  // (1-q^2)/(1-q) = 1+q
  REQUIRE(s == Scalar::one() + Scalar::q_pow(ctx, 1));
  REQUIRE(s.eval_exact(mpq_class(1, 2)) == mpq_class(3, 2));
}

TEST_CASE("qpoch finite products") {
  QCtx ctx;
  Scalar q2 = Scalar::q_pow(ctx, 2);
  SECTION("empty product") {
    Scalar a = Scalar::q_pow(ctx, 5);
    REQUIRE(qpoch(a, q2, 0).value == Scalar::one());
  }
  SECTION("(q^2; q^2)_2") {
    Scalar expect = (Scalar::one() - q2) * (Scalar::one() - q2.pow(2));
    REQUIRE(qpoch(q2, q2, 2).value == expect);
  }
}

TEST_CASE("qpoch infinite product matches long direct product") {
  QCtx ctx = QCtx::at(0.5L);
  Scalar q2 = Scalar::q_pow(ctx, 2);
  auto r = qpoch(q2, q2, -1, 1e-18);
  // oracle: direct product with 60 factors
  long double prod = 1.0L, f = 0.25L;
  for (int j = 0; j < 60; ++j) {
    prod *= (1.0L - f);
    f *= 0.25L;
  }
  REQUIRE(std::abs((double)(r.value.value() - prod)) < 1e-17);
  REQUIRE(r.order >= 28);
  REQUIRE(r.order <= 60);
}

TEST_CASE("qpoch errors") {
  QCtx ctx;
  Scalar q2 = Scalar::q_pow(ctx, 2);
  REQUIRE_THROWS_AS(qpoch(q2, q2, -1), std::domain_error);  // symbolic infinite
  QCtx nctx = QCtx::at(0.5L);
  Scalar big = Scalar::number(1.5L);
  REQUIRE_THROWS_AS(qpoch(Scalar::number(0.5L), big, -1), std::domain_error);
}

TEST_CASE("qbinom basics") {
  QCtx ctx;
  Scalar q2 = Scalar::q_pow(ctx, 2);
  SECTION("n = 0") {
    for (long m = 0; m <= 6; ++m) REQUIRE(qbinom(m, 0, q2) == Scalar::one());
  }
  SECTION("hand-expanded [2 choose 1]") {
    // (q^2;q^2)_2 / ((q^2;q^2)_1)^2 = 1 + q^2
    REQUIRE(qbinom(2, 1, q2) == Scalar::one() + q2);
  }
  SECTION("symmetry") {
    for (long m = 0; m <= 8; ++m)
      for (long n = 0; n <= m; ++n) REQUIRE(qbinom(m, n, q2) == qbinom(m, m - n, q2));
  }
  SECTION("errors") { REQUIRE_THROWS_AS(qbinom(2, 3, q2), std::domain_error); }
}

TEST_CASE("qbinom is a polynomial in t with nonnegative integer coefficients") {
  QCtx ctx;
  Scalar t = Scalar::q_pow(ctx, 1);
  for (long m = 0; m <= 8; ++m) {
    for (long n = 0; n <= m; ++n) {
      Scalar b = qbinom(m, n, t);
      REQUIRE(b.den().is_one());
      for (const auto& [e, c] : b.num().terms()) {
        REQUIRE(c.get_den() == 1);
        REQUIRE(c >= 0);
      }
    }
  }
}

TEST_CASE("laurent window arithmetic") {
  QCtx ctx = QCtx::at(0.5L);
  LaurentU a(-2, 2), b(-2, 2);
  a.set(1, Scalar::one());
  a.set(-1, Scalar::q_pow(ctx, 2));
  b.set(2, Scalar::integer(3));
  LaurentU s = a + b;
  REQUIRE(s.coeff(1) == Scalar::one());
  REQUIRE(s.coeff(2) == Scalar::integer(3));
  REQUIRE(!s.clipped());

  LaurentU p = a * b;  // exponents 3 and 1 -> 3 clips
  REQUIRE(p.clipped());
  REQUIRE(p.coeff(1) == Scalar::q_pow(ctx, 2) * Scalar::integer(3));

  Scalar u = Scalar::number(0.3L);
  long double resum = a.at(u).value();
  REQUIRE(std::abs((double)(resum - (0.3L + 0.25L / 0.3L))) < 1e-15);
}
