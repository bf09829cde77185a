#include "congsweep/catalog.hpp"
#include "congsweep/exact.hpp"
#include "congsweep/hypergeo.hpp"

#include <functional>

// The oracle side of every catalog check: the same sums formed over exact
// rationals (or exact Q(sqrt d) pairs) with textbook binomials, reduced mod
// p^e only at the very end.  Shares no kernel with the sweep path.

namespace congsweep {

namespace {

mpz_class central_sq_exact(uint64_t k) {
  mpz_class b = binom_exact(2 * k, k);
  return b * b;
}

// sum_{k=0}^{p-1} binom(p-1,k) binom(2k,k)^2 w(k) / den^k
BigRational theorem1_sum_exact(const PrimeModulus& pm,
                               const std::function<mpz_class(uint64_t)>& w,
                               long long den) {
  BigRational acc(0);
  BigRational q(1);
  const BigRational step = BigRational(1) / static_cast<long>(den);
  for (uint64_t k = 0; k < pm.p; ++k) {
    mpz_class num = binom_exact(pm.p - 1, k) * central_sq_exact(k) * w(k);
    acc += BigRational(num) * q;
    q *= step;
  }
  return acc;
}

struct Outcome {
  uint64_t lhs = 0;
  bool pass = false;
};

Outcome from_rational(const BigRational& diff, const PrimeModulus& pm, int power) {
  uint64_t r = reduce_mod(diff, pm, power);
  return {r, r == 0};
}

Outcome thm2_exact(const PrimeModulus& pm, LucasParams ab, bool u_family) {
  const uint64_t n = pm.half();
  const LucasParams shifted{ab.a + 2, ab.a + ab.b + 1};
  std::vector<mpz_class> s =
      u_family ? lucas_u_prefix_exact(n, ab) : lucas_v_prefix_exact(n, ab);
  std::vector<mpz_class> t =
      u_family ? lucas_u_prefix_exact(n, shifted) : lucas_v_prefix_exact(n, shifted);
  BigRational lhs(0), q(1);
  const BigRational inv16(1, 16);
  for (uint64_t k = 0; k <= n; ++k) {
    lhs += BigRational(binom_exact(pm.p - 1, k) * central_sq_exact(k) * s[k]) * q;
    q *= inv16;
  }
  BigRational rhs(0);
  for (uint64_t j = 0; j <= n; ++j) {
    mpz_class b = binom_exact(n, j);
    BigRational hfac = BigRational(2 * static_cast<long>(pm.p)) * harmonic_exact(2 * j) + 1;
    rhs += BigRational(b * b * t[j]) * hfac;
  }
  rhs *= BigRational(pow_int(16, pm.p - 1));
  if (n % 2) rhs = -rhs;
  return from_rational(lhs - rhs, pm, 2);
}

Outcome lem31_exact(const PrimeModulus& pm, Lemma31Variant v) {
  long long sx = 0, sy = 0, d = 0;
  switch (v) {
    case Lemma31Variant::i:   sx = 3;  sy = 2;  d = 2; break;
    case Lemma31Variant::ii:  sx = -7; sy = -4; d = 3; break;
    case Lemma31Variant::iii: sx = 17; sy = 12; d = 2; break;
  }
  const QuadRational sigma(BigRational(static_cast<long>(sx)),
                           BigRational(static_cast<long>(sy)), d);
  const uint64_t n = pm.half();
  QuadRational acc = QuadRational::from_rational(0, d);
  QuadRational pw = QuadRational::from_rational(1, d);
  for (uint64_t k = 0; k <= n; ++k) {
    mpz_class b = binom_exact(n, k);
    acc = acc + scale(pw, BigRational(b * b));
    if (k < n) pw = pw * sigma;
  }
  QuadResidue red = reduce_mod(acc, pm, 1);
  const Mod mp = pm.mod_p();
  uint64_t lhs = mp.add(red.x, red.y);
  return {lhs, red.x == 0 && red.y == 0};
}

Outcome lem32_exact(const PrimeModulus& pm, SeqTag tag, bool alternating, bool halve) {
  const uint64_t n = pm.half();
  BigRational acc(0), q(1);
  const BigRational inv2(1, 2);
  for (uint64_t k = 0; k <= n; ++k) {
    mpz_class b = binom_exact(n, k);
    BigRational t = BigRational(b * b * named_exact(tag, 2 * k));
    if (halve) t *= q;
    if (alternating && k % 2)
      acc -= t;
    else
      acc += t;
    q *= inv2;
  }
  return from_rational(acc, pm, 2);
}

Outcome lem41_exact(const PrimeModulus& pm, SeqTag tag, bool alternating, bool halve) {
  const uint64_t n = pm.half();
  BigRational acc(0), q(1);
  const BigRational inv2(1, 2);
  for (uint64_t k = 0; k <= n; ++k) {
    mpz_class b = binom_exact(n, k);
    BigRational t = BigRational(b * b * named_exact(tag, 2 * k)) * harmonic_exact(2 * k);
    if (halve) t *= q;
    if (alternating && k % 2)
      acc -= t;
    else
      acc += t;
    q *= inv2;
  }
  return from_rational(acc, pm, 1);
}

Outcome thm3_poly_exact(const PrimeModulus& pm) {
  const uint64_t n = pm.half();
  const Mod m2 = pm.mod_p2();
  std::vector<BigRational> w(n + 1);
  BigRational q(1);
  const BigRational inv16(1, 16);
  for (uint64_t k = 0; k <= n; ++k) {
    w[k] = BigRational(binom_exact(pm.p - 1, k) * central_sq_exact(k)) * q;
    q *= inv16;
  }
  const BigRational pow16(pow_int(16, pm.p - 1));
  uint64_t lhs = 0;
  bool pass = true;
  for (uint64_t j = 0; j <= n; ++j) {
    BigRational cj(0);
    for (uint64_t k = j; k <= n; ++k) {
      BigRational t = w[k] * BigRational(binom_exact(k, j));
      if ((k - j) % 2)
        cj -= t;
      else
        cj += t;
    }
    mpz_class b = binom_exact(n, j);
    BigRational r = BigRational(b * b) *
                    (BigRational(2 * static_cast<long>(pm.p)) * harmonic_exact(2 * j) + 1) *
                    pow16;
    if (n % 2) r = -r;
    uint64_t d = reduce_mod(cj - r, pm, 2);
    pass = pass && d == 0;
    lhs = m2.add(lhs, d);
  }
  return {lhs, pass};
}

Outcome lem21_poly_exact(const PrimeModulus& pm) {
  const uint64_t n = pm.half();
  const Mod m2 = pm.mod_p2();
  std::vector<BigRational> w(n + 1);
  BigRational q(1);
  const BigRational inv16(1, 16);
  for (uint64_t k = 0; k <= n; ++k) {
    w[k] = BigRational(central_sq_exact(k)) * q;
    q *= inv16;
  }
  const BigRational pow4(pow_int(4, pm.p - 1));
  uint64_t lhs = 0;
  bool pass = true;
  for (uint64_t j = 0; j <= n; ++j) {
    BigRational cj(0);
    for (uint64_t k = j; k <= n; ++k) {
      // (1-z)^k coefficient of z^j is binom(k,j)(-1)^j
      BigRational t = w[k] * BigRational(binom_exact(k, j));
      if (j % 2)
        cj -= t;
      else
        cj += t;
    }
    mpz_class b = binom_exact(n, j);
    BigRational r = BigRational(b * b) *
                    (BigRational(static_cast<long>(pm.p)) * harmonic_exact(n - j) + 1) * pow4;
    if (n % 2) r = -r;
    uint64_t d = reduce_mod(cj - r, pm, 2);
    pass = pass && d == 0;
    lhs = m2.add(lhs, d);
  }
  return {lhs, pass};
}

Outcome lem22_poly_exact(const PrimeModulus& pm) {
  const uint64_t n = pm.half();
  const Mod mp = pm.mod_p();
  std::vector<BigRational> w(n + 1);
  BigRational q(1);
  const BigRational inv16(1, 16);
  for (uint64_t k = 0; k <= n; ++k) {
    w[k] = BigRational(central_sq_exact(k)) * harmonic_exact(k) * q;
    q *= inv16;
  }
  mpz_class fermat = pow_int(2, pm.p + 1) - 4;  // divisible by p
  BigRational shift =
      BigRational(fermat) / BigRational(static_cast<long>(pm.p));
  shift.canonicalize();
  const bool negate = ((pm.p + 1) / 2) % 2 == 1;
  uint64_t lhs = 0;
  bool pass = true;
  for (uint64_t j = 0; j <= n; ++j) {
    BigRational cj(0);
    for (uint64_t k = j; k <= n; ++k) {
      BigRational t = w[k] * BigRational(binom_exact(k, j));
      if (j % 2)
        cj -= t;
      else
        cj += t;
    }
    if (negate) cj = -cj;
    mpz_class b = binom_exact(n, j);
    BigRational r = BigRational(b * b) * (shift + harmonic_exact(j));
    uint64_t d = reduce_mod(cj - r, pm, 1);
    pass = pass && d == 0;
    lhs = mp.add(lhs, d);
  }
  return {lhs, pass};
}

Outcome sym_zero_exact(const PrimeModulus& pm, int which) {
  const uint64_t n = pm.half();
  std::vector<mpz_class> v;
  if (which == 3) v = lucas_v_prefix_exact(n, {1, 1});
  mpz_class a(0);
  BigRational bsum(0);
  for (uint64_t j = 0; j <= n; ++j) {
    long long sign = 1;
    if (which == 1) sign = (j % 2) ? -1 : 1;
    if (which == 2) sign = (j % 2 ? -1 : 1) * chi3(j);
    mpz_class b = binom_exact(n, j);
    mpz_class t = b * b;
    if (which == 3) t *= v[j];
    if (sign == 1) a += t;
    else if (sign == -1) a -= t;
    BigRational th = BigRational(t) * harmonic_exact(2 * j);
    if (sign == 1) bsum += th;
    else if (sign == -1) bsum -= th;
  }
  uint64_t lhs = reduce_mod(BigRational(a), pm, 2);
  bool pass = a == 0 && reduce_mod(bsum, pm, 1) == 0;
  return {lhs, pass};
}

}  // namespace

uint64_t oracle_weighted_sum(char family, LucasParams ab, long long denom,
                             const PrimeModulus& pm) {
  std::vector<mpz_class> s = family == 'U' ? lucas_u_prefix_exact(pm.p - 1, ab)
                                           : lucas_v_prefix_exact(pm.p - 1, ab);
  BigRational sum =
      theorem1_sum_exact(pm, [&s](uint64_t k) { return s[k]; }, denom);
  return reduce_mod(sum, pm, 2);
}

CheckResult oracle_check(const std::string& id, const PrimeModulus& pm,
                         std::optional<LucasParams> params, uint64_t bound) {
  if (pm.p > bound)
    throw OracleBoundExceeded("oracle_check: p = " + std::to_string(pm.p) +
                              " beyond oracle bound " + std::to_string(bound));
  const CheckDescriptor& d = find_check(id);
  if (d.parametric && !params)
    throw InvalidConfig("oracle_check " + id + " requires Lucas parameters");

  CheckResult res;
  res.prime = pm.p;
  res.id = id;
  res.params = d.parametric ? params : std::nullopt;
  res.modulus_power = d.modulus_power;
  res.applicable = d.applicability.contains(pm.p);
  if (id == "thm2_u" && res.applicable) {
    __int128 disc = static_cast<__int128>(params->a) * params->a -
                    static_cast<__int128>(4) * params->b;
    if (disc % static_cast<__int128>(pm.p_squared) == 0) res.applicable = false;
  }
  if (!res.applicable) return res;

  const uint64_t n = pm.half();
  Outcome o;
  if (id == "rv_mortenson") {
    BigRational acc(0), q(1);
    const BigRational inv16(1, 16);
    for (uint64_t k = 0; k < pm.p; ++k) {
      acc += BigRational(central_sq_exact(k)) * q;
      q *= inv16;
    }
    o = from_rational(acc - legendre(-1, pm), pm, 2);
  } else if (id == "thm1_i") {
    o = from_rational(
        theorem1_sum_exact(pm, [](uint64_t) { return mpz_class(1); }, -8), pm, 2);
  } else if (id == "thm1_ii") {
    o = from_rational(
        theorem1_sum_exact(pm, [](uint64_t k) { return mpz_class(chi3(k)); }, 16), pm, 2);
  } else if (id == "thm1_iii") {
    std::vector<mpz_class> s = lucas_u_prefix_exact(pm.p - 1, {2, -1});
    o = from_rational(theorem1_sum_exact(pm, [&s](uint64_t k) { return s[k]; }, 8), pm, 2);
  } else if (id == "thm1_iv") {
    std::vector<mpz_class> s = lucas_v_prefix_exact(pm.p - 1, {4, 1});
    o = from_rational(theorem1_sum_exact(pm, [&s](uint64_t k) { return s[k]; }, -4), pm, 2);
  } else if (id == "thm2_v") {
    o = thm2_exact(pm, *params, false);
  } else if (id == "thm2_u") {
    o = thm2_exact(pm, *params, true);
  } else if (id == "thm1n_i") {
    o = from_rational(
        theorem1_sum_exact(pm, [](uint64_t k) { return named_exact(SeqTag::W, k); }, 4),
        pm, 2);
  } else if (id == "thm1n_ii") {
    o = from_rational(theorem1_sum_exact(
                          pm,
                          [](uint64_t k) {
                            mpz_class m = named_exact(SeqTag::M, k);
                            return k % 2 ? mpz_class(-m) : m;
                          },
                          16),
                      pm, 2);
  } else if (id == "thm1n_iii") {
    BigRational s3 = theorem1_sum_exact(
        pm, [](uint64_t k) { return mpz_class(k % 3 == 0 ? 1 : 0); }, 16);
    BigRational sall =
        theorem1_sum_exact(pm, [](uint64_t) { return mpz_class(1); }, 16);
    o = from_rational(s3 - sall / 3, pm, 2);
  } else if (id == "thm3_poly") {
    o = thm3_poly_exact(pm);
  } else if (id == "lem21_poly") {
    o = lem21_poly_exact(pm);
  } else if (id == "lem22_poly") {
    o = lem22_poly_exact(pm);
  } else if (id == "lem31_i") {
    o = lem31_exact(pm, Lemma31Variant::i);
  } else if (id == "lem31_ii") {
    o = lem31_exact(pm, Lemma31Variant::ii);
  } else if (id == "lem31_iii") {
    o = lem31_exact(pm, Lemma31Variant::iii);
  } else if (id == "lem32_i") {
    o = lem32_exact(pm, SeqTag::P, false, false);
  } else if (id == "lem32_ii") {
    o = lem32_exact(pm, SeqTag::R, true, false);
  } else if (id == "lem32_iii") {
    o = lem32_exact(pm, SeqTag::W, false, true);
  } else if (id == "lem41_i") {
    o = lem41_exact(pm, SeqTag::P, false, false);
  } else if (id == "lem41_ii") {
    o = lem41_exact(pm, SeqTag::R, true, false);
  } else if (id == "lem41_iii") {
    o = lem41_exact(pm, SeqTag::W, false, true);
  } else if (id == "morley") {
    mpz_class diff = binom_exact(pm.p - 1, n) - pow_int(-1, n) * pow_int(4, pm.p - 1);
    o = from_rational(BigRational(diff), pm, 2);
  } else if (id == "lehmer") {
    mpz_class fermat = pow_int(2, pm.p) - 2;  // divisible by p
    BigRational q = BigRational(fermat) / BigRational(static_cast<long>(pm.p));
    q.canonicalize();
    o = from_rational(harmonic_exact(n) + q, pm, 1);
  } else if (id == "wolstenholme_h") {
    o = from_rational(harmonic_exact(pm.p - 1), pm, 1);
  } else if (id == "tail_div") {
    const Mod m2 = pm.mod_p2();
    uint64_t lhs = 0;
    bool pass = true;
    for (uint64_t k = (pm.p + 1) / 2; k < pm.p; ++k) {
      uint64_t r = reduce_mod(BigRational(central_sq_exact(k)), pm, 2);
      pass = pass && r == 0;
      lhs = m2.add(lhs, r);
    }
    o = {lhs, pass};
  } else if (id == "hp1j") {
    const Mod mp = pm.mod_p();
    uint64_t lhs = 0;
    bool pass = true;
    for (uint64_t j = 1; j + 1 < pm.p; ++j) {
      uint64_t r = reduce_mod(harmonic_exact(pm.p - 1 - j) - harmonic_exact(j), pm, 1);
      pass = pass && r == 0;
      lhs = mp.add(lhs, r);
    }
    o = {lhs, pass};
  } else if (id == "sym_zero_i") {
    o = sym_zero_exact(pm, 1);
  } else if (id == "sym_zero_ii") {
    o = sym_zero_exact(pm, 2);
  } else if (id == "sym_zero_iii") {
    o = sym_zero_exact(pm, 3);
  } else {
    throw InvalidConfig("oracle_check: unhandled id " + id);
  }
  res.lhs = o.lhs;
  res.pass = o.pass;
  return res;
}

}  // namespace congsweep
