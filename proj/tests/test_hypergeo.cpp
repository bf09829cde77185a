#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "congsweep/engine.hpp"
#include "congsweep/hypergeo.hpp"
#include "congsweep/series.hpp"

using namespace congsweep;

namespace {
BigRational q(long num, long den = 1) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}
}  // namespace

TEST_CASE("pochhammer") {
  CHECK(pochhammer(q(1), 3) == q(6));
  CHECK(pochhammer(q(1, 2), 2) == q(3, 4));
  CHECK(pochhammer(q(-2), 3) == 0);
  CHECK(pochhammer(q(7, 3), 0) == 1);
}

TEST_CASE("truncated_2f1 rational points") {
  // 2F1(-1,-1;1|z) = 1 + z
  CHECK(truncated_2f1(q(-1), q(-1), q(1), q(2, 3), 2) == q(5, 3));
  // sum binom(2,k)^2 z^k at z = 1 is 6
  CHECK(truncated_2f1(q(-2), q(-2), q(1), q(1), 3) == q(6));
  // three exact terms
  CHECK(truncated_2f1(q(-2), q(3, 2), q(1), q(-1), 3) == q(47, 8));
}

TEST_CASE("truncated_2f1 quadratic points") {
  const QuadRational z(3, 2, 2);
  QuadRational got = truncated_2f1(q(-1), q(-1), q(1), z, 2);
  CHECK(got == QuadRational(4, 2, 2));  // 1 + z
}

TEST_CASE("lower parameter poles are rejected") {
  CHECK_THROWS_AS(truncated_2f1(q(1), q(1), q(0), q(1, 2), 2), LowerParameterPole);
  CHECK_THROWS_AS(truncated_2f1(q(1), q(1), q(-2), q(1, 2), 4), LowerParameterPole);
  // a pole beyond the window is fine
  CHECK(truncated_2f1(q(-1), q(1), q(-5, 2), q(1), 2) == q(1) + q(-1) * q(1) / q(-5, 2));
  CHECK_THROWS_AS(transform_check(TransformId::T314, q(-3), q(-1), 10),
                  LowerParameterPole);  // c = -1
}

TEST_CASE("transform_check spec cases") {
  CHECK(transform_check(TransformId::T314, q(-2), q(-2), 3));  // both 1+4z+z^2
  CHECK(transform_check(TransformId::T314, q(-1), q(-1), 2));  // both 1+z
  CHECK(transform_check(TransformId::T314, q(1, 2), q(1, 3), 1));
  CHECK(transform_check(TransformId::T319, q(1, 2), q(1, 3), 1));
  CHECK(transform_check(TransformId::T3111, q(1, 2), q(1, 3), 1));
}

TEST_CASE("transform_check fixed rational pairs, order 12") {
  const BigRational as[] = {q(1, 2), q(-3, 2), q(2), q(5, 3)};
  const BigRational bs[] = {q(1, 3), q(-1, 4), q(1, 5), q(-2, 3)};
  for (const auto& a : as)
    for (const auto& b : bs)
      for (TransformId id :
           {TransformId::T314, TransformId::T319, TransformId::T3111}) {
        INFO(a << " " << b);
        CHECK(transform_check(id, a, b, 12));
      }
}

TEST_CASE("terminating transformations are polynomial identities") {
  for (uint64_t n = 0; n <= 12; ++n) {
    const BigRational a = q(-static_cast<long>(n));
    const size_t order = 2 * n + 4;
    CHECK(transform_check(TransformId::T314, a, a, order));
    CHECK(transform_check(TransformId::T319, a, a, order));
    CHECK(transform_check(TransformId::T3111, a, a, order));
  }
}

TEST_CASE("series expansion is self-consistent at rational points") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  for (int it = 0; it < 10; ++it) {
    const BigRational a = q(num(rng), den(rng));
    const size_t order = 12;
    RationalSeries s = binomial_series(-1, -a, order);  // (1-z)^{-a}
    const BigRational z0 = q(num(rng), 23);
    BigRational direct(0), zp(1);
    for (size_t k = 0; k < order; ++k) {
      direct += binom_rational(-a, k) * zp * ((k % 2) ? -1 : 1);
      zp *= z0;
    }
    CHECK(s.eval(z0) == direct);
  }
}

TEST_CASE("alternating_square_sum") {
  CHECK(alternating_square_sum(1) == 0);
  CHECK(alternating_square_sum(2) == -2);
  CHECK(alternating_square_sum(7) == 0);
  for (uint64_t n = 0; n <= 60; ++n) {
    mpz_class want = 0;
    if (n % 2 == 0) {
      want = binom_exact(n, n / 2);
      if ((n / 2) % 2) want = -want;
    }
    CHECK(alternating_square_sum(n) == want);
  }
}

TEST_CASE("chu_vandermonde_check") {
  CHECK(chu_vandermonde_check(2, 0, q(3)));    // binom(5,2) = 10
  CHECK(chu_vandermonde_check(3, 1, q(-5, 2)));
  CHECK(chu_vandermonde_check(0, 0, q(4)));
  for (uint64_t n = 0; n <= 12; ++n)
    for (uint64_t j = 0; j <= n; ++j) {
      CHECK(chu_vandermonde_check(n, j, q(7, 2)));
      CHECK(chu_vandermonde_check(n, j, q(-31, 2)));
    }
  CHECK_THROWS_AS(chu_vandermonde_check(2, 3, q(1)), IndexOutOfRange);
}

TEST_CASE("gamma_ratio_product") {
  const BigRational got = gamma_ratio_product(PrimeModulus::make(5));
  CHECK(got == q(135, 112));
  CHECK(vp(got, 5) == 1);
  CHECK(vp(gamma_ratio_product(PrimeModulus::make(11)), 11) >= 1);
  CHECK(vp(gamma_ratio_product(PrimeModulus::make(7)), 7) == 0);
}

TEST_CASE("gamma ratio valuation splits on p mod 3 up to 1000") {
  for (uint64_t p : odd_primes_in(5, 1000)) {
    const long v = vp(gamma_ratio_product(PrimeModulus::make(p)), p);
    if (p % 3 == 2)
      CHECK(v >= 1);
    else
      CHECK(v == 0);
  }
}

TEST_CASE("pochhammer shift is invisible mod p") {
  for (uint64_t p : {uint64_t(5), uint64_t(11), uint64_t(17), uint64_t(23)})
    CHECK(pochhammer_shift_valuation(PrimeModulus::make(p), (p - 3) / 4));
}

TEST_CASE("lemma31_finite_sum_identity") {
  // direct route, p = 5 (mod 8)
  CHECK(lemma31_finite_sum_identity(PrimeModulus::make(5), Lemma31Variant::i).pass());
  CHECK(lemma31_finite_sum_identity(PrimeModulus::make(13), Lemma31Variant::i).pass());
  // long-row route, p = 7 (mod 8), includes the mod-p collapse step
  Lemma31Report rep7 = lemma31_finite_sum_identity(PrimeModulus::make(7), Lemma31Variant::i);
  CHECK(rep7.exact_identity);
  CHECK(rep7.inner_vanishes);
  CHECK(rep7.closed_form_vanishes);
  CHECK(rep7.lucas_step);
  CHECK(lemma31_finite_sum_identity(PrimeModulus::make(23), Lemma31Variant::i).pass());

  CHECK(lemma31_finite_sum_identity(PrimeModulus::make(5), Lemma31Variant::ii).pass());
  CHECK(lemma31_finite_sum_identity(PrimeModulus::make(11), Lemma31Variant::ii).pass());

  Lemma31Report rep3 = lemma31_finite_sum_identity(PrimeModulus::make(7), Lemma31Variant::iii);
  CHECK(rep3.pass());
  // the inner value 2F1(-3,1/2;1|-1) = 63/16 has v_7 = 1, driven by
  // sum (-1)^k binom(3,k)^2 = 0
  CHECK(vp(truncated_2f1(q(-3), q(1, 2), q(1), q(-1), 4), 7) == 1);
  CHECK(alternating_square_sum(3) == 0);

  CHECK_THROWS_AS(lemma31_finite_sum_identity(PrimeModulus::make(17), Lemma31Variant::i),
                  NotApplicable);
  CHECK_THROWS_AS(lemma31_finite_sum_identity(PrimeModulus::make(7), Lemma31Variant::ii),
                  NotApplicable);
  CHECK_THROWS_AS(lemma31_finite_sum_identity(PrimeModulus::make(5), Lemma31Variant::iii),
                  NotApplicable);
}

TEST_CASE("binom_rational") {
  CHECK(binom_rational(q(-1, 2), 2) == q(3, 8));
  CHECK(binom_rational(q(5), 2) == q(10));
  CHECK(binom_rational(q(5), 7) == 0);
  CHECK(binom_rational(q(7, 2), 0) == 1);
}

TEST_CASE("vp and reduce_mod") {
  CHECK(vp(q(135, 112), 5) == 1);
  CHECK(vp(q(1, 25), 5) == -2);
  CHECK(vp(BigRational(0), 5) == kValuationInfinity);
  const PrimeModulus p5 = PrimeModulus::make(5);
  CHECK(reduce_mod(q(9, 16), PrimeModulus::make(3), 2) == 0);  // 9/16 = 0 mod 9
  CHECK(reduce_mod(q(1, 2), p5, 1) == 3);
  CHECK_THROWS_AS(reduce_mod(q(1, 5), p5, 2), NotInvertible);
}
