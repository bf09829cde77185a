#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "congsweep/exact.hpp"
#include "congsweep/sequences.hpp"

using namespace congsweep;

namespace {
const Mod kBig(1000000);
}

TEST_CASE("lucas_u") {
  CHECK(lucas_u(0, {3, 7}, kBig) == 0);
  CHECK(lucas_u(1, {3, 7}, kBig) == 1);
  CHECK(lucas_u(2, {5, 2}, kBig) == 5);  // U_2 = a
  CHECK(lucas_u(3, {2, -1}, kBig) == 5);  // Pell P_3
}

TEST_CASE("lucas_v") {
  CHECK(lucas_v(0, {9, 4}, kBig) == 2);
  CHECK(lucas_v(2, {4, 1}, kBig) == 14);  // R_2
  CHECK(lucas_v(1, {-1, 1}, kBig) == kBig.from_int(-1));
}

TEST_CASE("named sequences") {
  CHECK(named(SeqTag::P, 4, kBig) == 12);   // 0,1,2,5,12
  CHECK(named(SeqTag::W, 3, kBig) == 66);   // 8*8 + 2*1
  CHECK(named(SeqTag::M, 3, kBig) == 6);    // 3*3 - 3*1
  CHECK(named_exact(SeqTag::P, 4) == 12);
  CHECK(named_exact(SeqTag::R, 3) == mpz_class(4 * 14 - 4));
  std::vector<uint64_t> pref = named_prefix(SeqTag::P, 6, kBig);
  CHECK(pref[5] == 29);
  CHECK(pref[6] == 70);
}

TEST_CASE("chi3 and delta3 are 3-periodic with the right values") {
  CHECK(chi3(0) == 0);
  CHECK(chi3(1) == 1);
  CHECK(chi3(2) == -1);
  CHECK(delta3(0) == 2);
  CHECK(delta3(1) == -1);
  for (uint64_t k = 0; k <= 60; ++k) {
    CHECK(chi3(k) == chi3(k + 3));
    CHECK(delta3(k) == delta3(k + 3));
    CHECK(lucas_v_exact(k, {-1, 1}) == delta3(k));
  }
}

TEST_CASE("bridge identity suite holds to n = 60") {
  std::vector<IdentityResult> suite = bridge_identity_suite(60);
  CHECK(suite.size() == 14);
  for (const auto& r : suite) {
    INFO(r.id);
    CHECK(r.verified);
  }
}

TEST_CASE("bridge suite spot values") {
  // P_4 = 12 = 2 U_2(6,1)
  CHECK(named_exact(SeqTag::P, 4) == 2 * lucas_u_exact(2, {6, 1}));
  // 4^1 W_2 = 32 = U_2(32,-32)
  CHECK(4 * named_exact(SeqTag::W, 2) == lucas_u_exact(2, {32, -32}));
  // V_1(1,1) = 1 = -V_2(1,1)
  CHECK(lucas_v_exact(1, {1, 1}) == -lucas_v_exact(2, {1, 1}));
}

TEST_CASE("Binet forms over exact quadratic rationals, n <= 40") {
  for (long long a = -3; a <= 3; ++a) {
    for (long long b = -3; b <= 3; ++b) {
      const LucasParams ab{a, b};
      const long long disc = ab.discriminant();
      if (disc == 0) continue;
      const BigRational half(1, 2);
      const QuadRational alpha(BigRational(static_cast<long>(a)) * half, half, disc);
      const QuadRational beta(BigRational(static_cast<long>(a)) * half, -half, disc);
      const QuadRational omega(0, 1, disc);  // alpha - beta
      for (uint64_t n = 0; n <= 40; ++n) {
        const mpz_class u = lucas_u_exact(n, ab), v = lucas_v_exact(n, ab);
        QuadRational an = quad_pow_exact(alpha, n), bn = quad_pow_exact(beta, n);
        CHECK(an - bn == scale(omega, BigRational(u)));
        CHECK(an + bn == QuadRational::from_rational(BigRational(v), disc));
      }
    }
  }
}

TEST_CASE("root shift law: alpha+1, beta+1 solve x^2-(a+2)x+(a+b+1)") {
  for (long long a = -3; a <= 3; ++a) {
    for (long long b = -3; b <= 3; ++b) {
      const long long disc = a * a - 4 * b;
      if (disc == 0) continue;
      const BigRational half(1, 2);
      const QuadRational alpha(BigRational(static_cast<long>(a)) * half, half, disc);
      const QuadRational beta(BigRational(static_cast<long>(a)) * half, -half, disc);
      const QuadRational one = QuadRational::from_rational(1, disc);
      QuadRational s = (alpha + one) + (beta + one);
      QuadRational pr = (alpha + one) * (beta + one);
      CHECK(s == QuadRational::from_rational(BigRational(static_cast<long>(a + 2)), disc));
      CHECK(pr ==
            QuadRational::from_rational(BigRational(static_cast<long>(a + b + 1)), disc));
    }
  }
}

TEST_CASE("modular prefixes agree with exact values") {
  const Mod m2 = PrimeModulus::make(97).mod_p2();
  for (long long a : {-4LL, 2LL, 6LL}) {
    for (long long b : {-1LL, 1LL, 4LL}) {
      std::vector<uint64_t> um = lucas_u_prefix(50, {a, b}, m2);
      std::vector<mpz_class> ux = lucas_u_prefix_exact(50, {a, b});
      std::vector<uint64_t> vm = lucas_v_prefix(50, {a, b}, m2);
      std::vector<mpz_class> vx = lucas_v_prefix_exact(50, {a, b});
      for (uint64_t n = 0; n <= 50; ++n) {
        mpz_class mu = ux[n] % static_cast<long>(m2.m());
        if (mu < 0) mu += static_cast<long>(m2.m());
        CHECK(um[n] == mu.get_ui());
        mpz_class mv = vx[n] % static_cast<long>(m2.m());
        if (mv < 0) mv += static_cast<long>(m2.m());
        CHECK(vm[n] == mv.get_ui());
      }
    }
  }
}
