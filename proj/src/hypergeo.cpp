#include "congsweep/hypergeo.hpp"

#include <string>

namespace congsweep {

namespace {

BigRational frac(long long num, long long den) {
  BigRational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

bool is_nonpositive_integer_in(const BigRational& c, uint64_t depth) {
  if (c.get_den() != 1) return false;
  mpz_class n = c.get_num();
  return n <= 0 && n >= -static_cast<long>(depth);
}

void require_no_pole(const BigRational& c, uint64_t terms) {
  if (terms > 0 && is_nonpositive_integer_in(c, terms - 1))
    throw LowerParameterPole("2F1: lower parameter " + std::to_string(c.get_num().get_si()) +
                             " pole within " + std::to_string(terms) + " terms");
}

// t_k = (a)_k (b)_k / ((c)_k k!) for k = 0..count-1
std::vector<BigRational> term_coefficients(const BigRational& a, const BigRational& b,
                                           const BigRational& c, uint64_t count) {
  require_no_pole(c, count);
  std::vector<BigRational> t(count);
  if (count == 0) return t;
  t[0] = 1;
  BigRational an = a, bn = b, cn = c;
  for (uint64_t k = 0; k + 1 < count; ++k) {
    t[k + 1] = t[k] * an * bn / (cn * frac(k + 1, 1));
    an += 1;
    bn += 1;
    cn += 1;
  }
  return t;
}

// series with s'[i+1] = c * s[i], s'[0] = 0
RationalSeries shift_scale(const RationalSeries& s, const BigRational& c) {
  RationalSeries r(s.length());
  for (size_t i = 0; i + 1 < s.length(); ++i) r[i + 1] = c * s[i];
  return r;
}

QuadRational quad_sum_binom_sq(uint64_t n, const QuadRational& z) {
  QuadRational acc = QuadRational::from_rational(0, z.d);
  QuadRational zpow = QuadRational::from_rational(1, z.d);
  for (uint64_t k = 0; k <= n; ++k) {
    mpz_class b = binom_exact(n, k);
    acc = acc + scale(zpow, BigRational(b * b));
    if (k < n) zpow = zpow * z;
  }
  return acc;
}

}  // namespace

BigRational pochhammer(const BigRational& a, uint64_t k) {
  BigRational acc(1);
  BigRational t = a;
  for (uint64_t i = 0; i < k; ++i) {
    acc *= t;
    t += 1;
  }
  return acc;
}

BigRational truncated_2f1(const BigRational& a, const BigRational& b,
                          const BigRational& c, const BigRational& z, uint64_t terms) {
  std::vector<BigRational> t = term_coefficients(a, b, c, terms);
  BigRational acc(0), zpow(1);
  for (uint64_t k = 0; k < terms; ++k) {
    acc += t[k] * zpow;
    zpow *= z;
  }
  return acc;
}

QuadRational truncated_2f1(const BigRational& a, const BigRational& b,
                           const BigRational& c, const QuadRational& z, uint64_t terms) {
  std::vector<BigRational> t = term_coefficients(a, b, c, terms);
  QuadRational acc = QuadRational::from_rational(0, z.d);
  QuadRational zpow = QuadRational::from_rational(1, z.d);
  for (uint64_t k = 0; k < terms; ++k) {
    acc = acc + scale(zpow, t[k]);
    if (k + 1 < terms) zpow = zpow * z;
  }
  return acc;
}

bool transform_check(TransformId id, const BigRational& a, const BigRational& b,
                     size_t order) {
  const BigRational c = a - b + 1;
  const BigRational half = frac(1, 2);

  RationalSeries lhs(order);
  if (id == TransformId::T3111) {
    std::vector<BigRational> t =
        term_coefficients(a, b, c, order == 0 ? 0 : (order - 1) / 2 + 1);
    for (size_t k = 0; 2 * k < order; ++k) lhs[2 * k] = t[k];
  } else {
    std::vector<BigRational> t = term_coefficients(a, b, c, order);
    for (size_t k = 0; k < order; ++k) lhs[k] = t[k];
  }

  RationalSeries pre(order), w(order);
  std::vector<BigRational> inner;
  switch (id) {
    case TransformId::T314:
      pre = binomial_series(-1, -a, order);  // (1-z)^{-a}
      w = shift_scale(binomial_series(-1, -2, order), -4);  // -4z/(1-z)^2
      inner = term_coefficients(a / 2, a / 2 - b + half, c, order);
      break;
    case TransformId::T319:
      pre = binomial_series(1, -a, order);  // (1+z)^{-a}
      w = shift_scale(binomial_series(1, -2, order), 4);  // 4z/(1+z)^2
      inner = term_coefficients(a / 2, a / 2 + half, c, order);
      break;
    case TransformId::T3111:
      pre = binomial_series(1, -2 * a, order);  // (1+z)^{-2a}
      w = shift_scale(binomial_series(1, -2, order), 4);
      inner = term_coefficients(a, a - b + half, 2 * a - 2 * b + 1, order);
      break;
  }
  RationalSeries rhs = mul(pre, compose_terms(inner, w));
  return lhs == rhs;
}

mpz_class alternating_square_sum(uint64_t n) {
  mpz_class acc(0);
  for (uint64_t k = 0; k <= n; ++k) {
    mpz_class b = binom_exact(n, k);
    if (k % 2 == 0)
      acc += b * b;
    else
      acc -= b * b;
  }
  return acc;
}

bool chu_vandermonde_check(uint64_t n, uint64_t j, const BigRational& r) {
  if (j > n) throw IndexOutOfRange("chu_vandermonde_check: j > n");
  BigRational lhs(0);
  for (uint64_t k = 0; k <= n; ++k)
    lhs += BigRational(binom_exact(n - j, n - k)) * binom_rational(r, k);
  BigRational rhs = binom_rational(r + frac(static_cast<long long>(n - j), 1), n);
  return lhs == rhs;
}

BigRational gamma_ratio_product(const PrimeModulus& pm) {
  BigRational acc(1);
  BigRational num = frac(3, 2), den = frac(4, 3);
  for (uint64_t j = 0; j + 1 <= pm.half(); ++j) {
    acc *= num / den;
    num += 1;
    den += 1;
  }
  return acc;
}

bool pochhammer_shift_valuation(const PrimeModulus& pm, uint64_t k_max) {
  const BigRational shifted_base = frac(static_cast<long long>(pm.p), 2) + 1;
  for (uint64_t k = 0; k <= k_max; ++k) {
    BigRational diff = pochhammer(shifted_base, k) - pochhammer(1, k);
    if (vp(diff, pm.p) < 1) return false;
  }
  return true;
}

Lemma31Report lemma31_finite_sum_identity(const PrimeModulus& pm, Lemma31Variant v) {
  Lemma31Report rep;
  const uint64_t n = pm.half();

  switch (v) {
    case Lemma31Variant::i: {
      if (pm.p % 8 != 5 && pm.p % 8 != 7)
        throw NotApplicable("lemma31_finite_sum_identity(i): need p = 5,7 (mod 8)");
      // row length (p-1)/2 when the quarter-index is an integer, else (3p-1)/2
      const uint64_t rows = pm.p % 8 == 5 ? n : (3 * pm.p - 1) / 2;
      const QuadRational z(3, 2, 2);  // (1+sqrt2)^2
      QuadRational lhs = quad_sum_binom_sq(rows, z);
      BigRational f = truncated_2f1(frac(-static_cast<long long>(rows), 2),
                                    frac(static_cast<long long>(rows) + 1, 2), 1,
                                    BigRational(-1), rows / 2 + 1);
      QuadRational one_minus_z = QuadRational::from_rational(1, 2) - z;
      QuadRational rhs = scale(quad_pow_exact(one_minus_z, rows), f);
      rep.exact_identity = lhs == rhs;
      rep.inner_vanishes = vp(f, pm.p) >= 1;
      rep.closed_form_vanishes = alternating_square_sum(rows / 2) == 0;
      if (pm.p % 8 == 7) {
        // the long row collapses onto the short one mod p: S_{(3p-1)/2} = (1 + sigma^p) S_{(p-1)/2}
        const Mod mp = pm.mod_p();
        const QuadElem sigma = QuadElem::make(3, 2, 2, mp);
        auto sum_row = [&](uint64_t rowlen) {
          QuadElem acc = QuadElem::zero(2, mp);
          QuadElem pw = QuadElem::one(2, mp);
          for (uint64_t k = 0; k <= rowlen; ++k) {
            uint64_t bk = mpz_fdiv_ui(binom_exact(rowlen, k).get_mpz_t(), pm.p);
            uint64_t b2 = mp.mul(bk, bk);
            acc = quad_add(acc, QuadElem{mp.mul(b2, pw.x), mp.mul(b2, pw.y), 2, pm.p});
            if (k < rowlen) pw = quad_mul(pw, sigma);
          }
          return acc;
        };
        QuadElem long_sum = sum_row(rows);
        QuadElem short_sum = sum_row(n);
        QuadElem factor = quad_add(QuadElem::one(2, mp), quad_pow(sigma, pm.p));
        rep.lucas_step = long_sum == quad_mul(factor, short_sum);
      }
      break;
    }
    case Lemma31Variant::ii: {
      if (pm.p % 3 != 2)
        throw NotApplicable("lemma31_finite_sum_identity(ii): need p = 2 (mod 3)");
      const QuadRational z(-7, -4, 3);  // -(2+sqrt3)^2
      QuadRational lhs = quad_sum_binom_sq(n, z);
      BigRational f = truncated_2f1(frac(-static_cast<long long>(n), 2),
                                    frac(1 - static_cast<long long>(n), 2), 1,
                                    frac(-1, 3), n / 2 + 1);
      QuadRational one_plus_z = QuadRational::from_rational(1, 3) + z;
      QuadRational rhs = scale(quad_pow_exact(one_plus_z, n), f);
      rep.exact_identity = lhs == rhs;
      rep.inner_vanishes = vp(f, pm.p) >= 1;
      rep.closed_form_vanishes = pm.p >= 5 && vp(gamma_ratio_product(pm), pm.p) >= 1;
      break;
    }
    case Lemma31Variant::iii: {
      if (pm.p % 4 != 3)
        throw NotApplicable("lemma31_finite_sum_identity(iii): need p = 3 (mod 4)");
      const QuadRational z(-3, -2, 2);  // -(3+2 sqrt2)
      QuadRational lhs = quad_sum_binom_sq(n, z * z);
      BigRational f = truncated_2f1(frac(-static_cast<long long>(n), 1), frac(1, 2), 1,
                                    BigRational(-1), n + 1);
      QuadRational one_plus_z = QuadRational::from_rational(1, 2) + z;
      QuadRational rhs = scale(quad_pow_exact(one_plus_z, 2 * n), f);
      rep.exact_identity = lhs == rhs;
      rep.inner_vanishes = vp(f, pm.p) >= 1;
      rep.closed_form_vanishes = alternating_square_sum(n) == 0;
      break;
    }
  }
  return rep;
}

}  // namespace congsweep
