#include "congsweep/exact.hpp"

#include <string>

namespace congsweep {

long vp(const mpz_class& x, uint64_t p) {
  if (x == 0) return kValuationInfinity;
  mpz_class rem, pz(static_cast<unsigned long>(p));
  return static_cast<long>(mpz_remove(rem.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t()));
}

long vp(const BigRational& r, uint64_t p) {
  if (r == 0) return kValuationInfinity;
  return vp(mpz_class(r.get_num()), p) - vp(mpz_class(r.get_den()), p);
}

uint64_t reduce_mod(const BigRational& r, const PrimeModulus& pm, int power) {
  const uint64_t m = power == 1 ? pm.p : pm.p_squared;
  mpz_class mz(static_cast<unsigned long>(m));
  mpz_class num = r.get_num() % mz;
  if (num < 0) num += mz;
  mpz_class den = r.get_den() % mz;
  mpz_class deninv;
  if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), mz.get_mpz_t()) == 0)
    throw NotInvertible("reduce_mod: denominator not a unit mod " + std::to_string(m));
  mpz_class res = (num * deninv) % mz;
  return res.get_ui();
}

mpz_class binom_exact(uint64_t n, uint64_t k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

BigRational binom_rational(const BigRational& r, uint64_t k) {
  BigRational acc(1);
  BigRational t = r;
  for (uint64_t i = 0; i < k; ++i) {
    acc *= t;
    acc /= static_cast<unsigned long>(i + 1);
    t -= 1;
  }
  acc.canonicalize();
  return acc;
}

BigRational harmonic_exact(uint64_t n) {
  BigRational h(0);
  for (uint64_t k = 1; k <= n; ++k) h += BigRational(1, static_cast<unsigned long>(k));
  return h;
}

mpz_class pow_int(long long base, uint64_t e) {
  mpz_class b(static_cast<long>(base)), r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

namespace {
void require_same_d(const QuadRational& u, const QuadRational& v) {
  if (u.d != v.d)
    throw ModulusMismatch("QuadRational: mixed discriminants " + std::to_string(u.d) +
                          " and " + std::to_string(v.d));
}
}  // namespace

QuadRational operator+(const QuadRational& u, const QuadRational& v) {
  require_same_d(u, v);
  return QuadRational(u.x + v.x, u.y + v.y, u.d);
}

QuadRational operator-(const QuadRational& u, const QuadRational& v) {
  require_same_d(u, v);
  return QuadRational(u.x - v.x, u.y - v.y, u.d);
}

QuadRational operator*(const QuadRational& u, const QuadRational& v) {
  require_same_d(u, v);
  BigRational dq(static_cast<long>(u.d));
  return QuadRational(u.x * v.x + dq * u.y * v.y, u.x * v.y + u.y * v.x, u.d);
}

QuadRational scale(const QuadRational& u, const BigRational& c) {
  return QuadRational(u.x * c, u.y * c, u.d);
}

QuadRational conj(const QuadRational& u) { return QuadRational(u.x, -u.y, u.d); }

BigRational norm(const QuadRational& u) {
  return u.x * u.x - BigRational(static_cast<long>(u.d)) * u.y * u.y;
}

QuadRational quad_div(const QuadRational& u, const QuadRational& v) {
  require_same_d(u, v);
  BigRational n = norm(v);
  if (n == 0) throw NotInvertible("QuadRational: division by element of norm 0");
  QuadRational w = u * conj(v);
  return QuadRational(w.x / n, w.y / n, u.d);
}

QuadRational quad_pow_exact(const QuadRational& u, uint64_t e) {
  QuadRational acc = QuadRational::from_rational(1, u.d);
  QuadRational b = u;
  while (e) {
    if (e & 1) acc = acc * b;
    b = b * b;
    e >>= 1;
  }
  return acc;
}

QuadResidue reduce_mod(const QuadRational& u, const PrimeModulus& pm, int power) {
  return QuadResidue{reduce_mod(u.x, pm, power), reduce_mod(u.y, pm, power)};
}

}  // namespace congsweep
