#include "congsweep/modarith.hpp"

#include <numeric>
#include <string>

namespace congsweep {

uint64_t Mod::pow(uint64_t base, uint64_t e) const {
  uint64_t acc = 1 % m_;
  uint64_t b = base % m_;
  while (e) {
    if (e & 1) acc = mul(acc, b);
    b = mul(b, b);
    e >>= 1;
  }
  return acc;
}

uint64_t Mod::inv(uint64_t a) const { return inv_mod(a % m_, m_); }

uint64_t inv_mod(uint64_t x, uint64_t m) {
  // extended Euclid on signed 64-bit; fine for m < 2^63
  long long r0 = static_cast<long long>(m), r1 = static_cast<long long>(x % m);
  long long t0 = 0, t1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long r2 = r0 - q * r1;
    long long t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1)
    throw NotInvertible("inv_mod: " + std::to_string(x) + " has no inverse mod " +
                        std::to_string(m));
  if (t0 < 0) t0 += static_cast<long long>(m);
  return static_cast<uint64_t>(t0);
}

bool is_odd_prime(uint64_t n) {
  if (n < 3 || n % 2 == 0) return false;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeModulus PrimeModulus::make(uint64_t p) {
  if (!is_odd_prime(p))
    throw InvalidConfig("PrimeModulus: " + std::to_string(p) + " is not an odd prime");
  return PrimeModulus{p, p * p};
}

int legendre(long long d, const PrimeModulus& pm) {
  const Mod mp = pm.mod_p();
  uint64_t r = mp.pow(mp.from_int(d), (pm.p - 1) / 2);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

std::vector<uint64_t> central_binom_table(const PrimeModulus& pm) {
  const Mod m2 = pm.mod_p2();
  std::vector<uint64_t> c(pm.p);
  c[0] = 1;
  for (uint64_t k = 1; k < pm.p; ++k) {
    uint64_t t = m2.mul(c[k - 1], 2 * (2 * k - 1) % m2.m());
    c[k] = m2.mul(t, inv_mod(k, m2.m()));
  }
  return c;
}

uint64_t central_binom_p2(uint64_t k, const PrimeModulus& pm) {
  if (k >= pm.p)
    throw IndexOutOfRange("central_binom_p2: k = " + std::to_string(k) + " >= p");
  const Mod m2 = pm.mod_p2();
  uint64_t c = 1;
  for (uint64_t i = 1; i <= k; ++i)
    c = m2.mul(m2.mul(c, 2 * (2 * i - 1) % m2.m()), inv_mod(i, m2.m()));
  return c;
}

std::vector<uint64_t> row_binom_table(const PrimeModulus& pm) {
  const Mod m2 = pm.mod_p2();
  std::vector<uint64_t> c(pm.p);
  c[0] = 1;
  for (uint64_t k = 1; k < pm.p; ++k)
    c[k] = m2.mul(m2.mul(c[k - 1], pm.p - k), inv_mod(k, m2.m()));
  return c;
}

uint64_t row_binom_p2(uint64_t k, const PrimeModulus& pm) {
  if (k > pm.p - 1)
    throw IndexOutOfRange("row_binom_p2: k = " + std::to_string(k) + " > p-1");
  const Mod m2 = pm.mod_p2();
  uint64_t c = 1;
  for (uint64_t i = 1; i <= k; ++i)
    c = m2.mul(m2.mul(c, pm.p - i), inv_mod(i, m2.m()));
  return c;
}

std::vector<uint64_t> half_binom_table(const PrimeModulus& pm, const Mod& mod) {
  const uint64_t n = pm.half();
  std::vector<uint64_t> c(n + 1);
  c[0] = 1;
  for (uint64_t j = 1; j <= n; ++j)
    c[j] = mod.mul(mod.mul(c[j - 1], (n - j + 1) % mod.m()), inv_mod(j, mod.m()));
  return c;
}

std::vector<uint64_t> inverse_table(uint64_t n, const PrimeModulus& pm) {
  // inv[i] = -(p/i)*inv[p mod i], the standard linear-time recurrence
  std::vector<uint64_t> inv(n + 1, 0);
  const Mod mp = pm.mod_p();
  if (n >= 1) inv[1] = 1;
  for (uint64_t i = 2; i <= n && i < pm.p; ++i)
    inv[i] = mp.mul(pm.p - pm.p / i, inv[pm.p % i]);
  return inv;
}

HarmonicTable harmonic_table(const PrimeModulus& pm) {
  const Mod mp = pm.mod_p();
  std::vector<uint64_t> inv = inverse_table(pm.p - 1, pm);
  HarmonicTable h(pm.p);
  h[0] = 0;
  for (uint64_t k = 1; k < pm.p; ++k) h[k] = mp.add(h[k - 1], inv[k]);
  return h;
}

uint64_t fermat_quotient(long long a, const PrimeModulus& pm) {
  const Mod m2 = pm.mod_p2();
  uint64_t ar = m2.from_int(a);
  if (ar % pm.p == 0)
    throw NotCoprime("fermat_quotient: base divisible by p = " + std::to_string(pm.p));
  uint64_t r = m2.pow(ar, pm.p - 1);  // = 1 + q*p (mod p^2) by Fermat
  return ((r - 1) / pm.p) % pm.p;
}

}  // namespace congsweep
