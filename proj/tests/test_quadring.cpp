#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "congsweep/engine.hpp"
#include "congsweep/quadring.hpp"

using namespace congsweep;

TEST_CASE("quad_mul") {
  const Mod m(1000003);
  QuadElem a = QuadElem::make(1, 1, 2, m);
  CHECK(quad_mul(a, a) == QuadElem::make(3, 2, 2, m));  // (1+sqrt2)^2

  QuadElem b = QuadElem::make(2, 1, 3, m);
  CHECK(quad_mul(b, quad_conj(b)) == QuadElem::one(3, m));  // norm(2+sqrt3) = 1

  QuadElem c = QuadElem::make(1, -1, 2, m);
  CHECK(quad_mul(a, c) == QuadElem::make(-1, 0, 2, m));  // (1+sqrt2)(1-sqrt2)

  QuadElem wrong_d = QuadElem::make(1, 1, 3, m);
  CHECK_THROWS_AS(quad_mul(a, wrong_d), ModulusMismatch);
  QuadElem wrong_m = QuadElem::make(1, 1, 2, Mod(11));
  CHECK_THROWS_AS(quad_mul(a, wrong_m), ModulusMismatch);
}

TEST_CASE("quad_pow") {
  const Mod m(1000003);
  QuadElem a = QuadElem::make(1, 1, 2, m);
  CHECK(quad_pow(a, 0) == QuadElem::one(2, m));
  CHECK(quad_pow(a, 2) == QuadElem::make(3, 2, 2, m));
  CHECK(quad_pow(QuadElem::make(3, 2, 2, m), 2) == QuadElem::make(17, 12, 2, m));
}

TEST_CASE("conjugation is a ring homomorphism") {
  std::mt19937 rng(12345);
  for (uint64_t m_val : {uint64_t(13), uint64_t(169), uint64_t(29), uint64_t(841)}) {
    const Mod m(m_val);
    std::uniform_int_distribution<long long> coeff(0, m_val - 1);
    for (long long d : {2LL, 3LL}) {
      for (int it = 0; it < 50; ++it) {
        QuadElem u = QuadElem::make(coeff(rng), coeff(rng), d, m);
        QuadElem v = QuadElem::make(coeff(rng), coeff(rng), d, m);
        CHECK(quad_conj(quad_mul(u, v)) == quad_mul(quad_conj(u), quad_conj(v)));
        CHECK(quad_conj(quad_add(u, v)) == quad_add(quad_conj(u), quad_conj(v)));
        CHECK(quad_conj(quad_sub(u, v)) == quad_sub(quad_conj(u), quad_conj(v)));
        CHECK(quad_sub(u, u).is_zero());
      }
    }
  }
}

TEST_CASE("norm is multiplicative along powers") {
  std::mt19937 rng(99);
  const Mod m(49);
  std::uniform_int_distribution<long long> coeff(0, 48);
  for (int it = 0; it < 30; ++it) {
    QuadElem u = QuadElem::make(coeff(rng), coeff(rng), 2, m);
    for (uint64_t e : {uint64_t(0), uint64_t(1), uint64_t(5), uint64_t(12)})
      CHECK(quad_norm(quad_pow(u, e)) == m.pow(quad_norm(u), e));
  }
}

TEST_CASE("split case stays a well-defined ring") {
  // legendre(2,7) = +1, so mod 7 the ring splits; no operation assumes a field
  const PrimeModulus pm = PrimeModulus::make(7);
  const Mod m = pm.mod_p();
  CHECK(legendre(2, pm) == 1);
  QuadElem u = QuadElem::make(3, 2, 2, m);   // nonzero, possibly a zero divisor
  QuadElem v = QuadElem::make(4, 5, 2, m);
  CHECK(quad_mul(u, v) == quad_mul(v, u));
  CHECK(quad_mul(u, quad_add(v, v)) == quad_add(quad_mul(u, v), quad_mul(u, v)));
}

TEST_CASE("alpha^{p-1} = 1 in the residue classes the proofs use") {
  for (uint64_t p : odd_primes_in(3, 400)) {
    const Mod m = PrimeModulus::make(p).mod_p();
    if (p % 8 == 7)
      CHECK(quad_pow(QuadElem::make(1, 1, 2, m), p - 1) == QuadElem::one(2, m));
    if (p % 12 == 11)
      CHECK(quad_pow(QuadElem::make(2, 1, 3, m), p - 1) == QuadElem::one(3, m));
  }
}

TEST_CASE("lemma31_sum vanishes") {
  CHECK(lemma31_sum(Lemma31Variant::i, PrimeModulus::make(7)).is_zero());
  CHECK(lemma31_sum(Lemma31Variant::ii, PrimeModulus::make(5)).is_zero());
  CHECK(lemma31_sum(Lemma31Variant::iii, PrimeModulus::make(7)).is_zero());
  for (uint64_t p : odd_primes_in(3, 300)) {
    const PrimeModulus pm = PrimeModulus::make(p);
    if (p % 8 == 5 || p % 8 == 7) CHECK(lemma31_sum(Lemma31Variant::i, pm).is_zero());
    if (p % 3 == 2) CHECK(lemma31_sum(Lemma31Variant::ii, pm).is_zero());
    if (p % 4 == 3) CHECK(lemma31_sum(Lemma31Variant::iii, pm).is_zero());
  }
}

TEST_CASE("lemma31_sum rejects out-of-class primes") {
  CHECK_THROWS_AS(lemma31_sum(Lemma31Variant::i, PrimeModulus::make(17)), NotApplicable);
  CHECK_THROWS_AS(lemma31_sum(Lemma31Variant::ii, PrimeModulus::make(7)), NotApplicable);
  CHECK_THROWS_AS(lemma31_sum(Lemma31Variant::iii, PrimeModulus::make(5)), NotApplicable);
}

TEST_CASE("frobenius_check") {
  const PrimeModulus p7 = PrimeModulus::make(7);
  CHECK(frobenius_check(QuadElem::make(1, 1, 2, p7.mod_p()), p7));
  const PrimeModulus p11 = PrimeModulus::make(11);
  CHECK(frobenius_check(QuadElem::make(2, 1, 3, p11.mod_p()), p11));
  CHECK(frobenius_check(QuadElem::one(2, p7.mod_p()), p7));
  // norm(1+sqrt2) = -1, norm 0 elements are rejected
  const PrimeModulus p5 = PrimeModulus::make(5);
  QuadElem zero_norm = QuadElem::make(0, 0, 2, p5.mod_p());
  CHECK_THROWS_AS(frobenius_check(zero_norm, p5), NotInvertible);
  CHECK_THROWS_AS(frobenius_check(QuadElem::make(1, 1, 2, Mod(49)), p7), ModulusMismatch);
}
