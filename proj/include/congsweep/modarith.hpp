#pragma once

#include <cstdint>
#include <vector>

#include "congsweep/errors.hpp"

namespace congsweep {

// Residues are plain uint64_t values kept canonically in [0, m).  The
// modulus (p or p^2) travels in a Mod context instead of per element, so
// mixed-modulus arithmetic cannot happen silently.
class Mod {
 public:
  explicit Mod(uint64_t m) : m_(m) {}

  uint64_t m() const { return m_; }

  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= m_ ? s - m_ : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + m_ - b; }
  uint64_t neg(uint64_t a) const { return a == 0 ? 0 : m_ - a; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m_);
  }
  uint64_t pow(uint64_t base, uint64_t e) const;
  // throws NotInvertible when gcd(a, m) != 1
  uint64_t inv(uint64_t a) const;
  // canonical residue of a signed integer
  uint64_t from_int(long long v) const {
    long long r = v % static_cast<long long>(m_);
    if (r < 0) r += static_cast<long long>(m_);
    return static_cast<uint64_t>(r);
  }

 private:
  uint64_t m_;
};

struct PrimeModulus {
  uint64_t p = 0;
  uint64_t p_squared = 0;

  // validates p odd prime >= 3 (throws InvalidConfig)
  static PrimeModulus make(uint64_t p);

  Mod mod_p() const { return Mod(p); }
  Mod mod_p2() const { return Mod(p_squared); }
  uint64_t half() const { return (p - 1) / 2; }
};

bool is_odd_prime(uint64_t n);

// y with x*y = 1 (mod m); throws NotInvertible
uint64_t inv_mod(uint64_t x, uint64_t m);

// Legendre symbol (d|p) by Euler's criterion, in {-1, 0, +1}
int legendre(long long d, const PrimeModulus& pm);

// binom(2k,k) mod p^2 via binom(2k,k) = binom(2k-2,k-1)*2*(2k-1)/k.
// Valid for 0 <= k <= p-1 (every divisor index is a unit mod p^2);
// throws IndexOutOfRange for k >= p.
uint64_t central_binom_p2(uint64_t k, const PrimeModulus& pm);
std::vector<uint64_t> central_binom_table(const PrimeModulus& pm);  // k = 0..p-1

// binom(p-1,k) mod p^2 via binom(p-1,k) = binom(p-1,k-1)*(p-k)/k,
// 0 <= k <= p-1; throws IndexOutOfRange beyond.
uint64_t row_binom_p2(uint64_t k, const PrimeModulus& pm);
std::vector<uint64_t> row_binom_table(const PrimeModulus& pm);  // k = 0..p-1

// binom((p-1)/2, j) mod m for j = 0..(p-1)/2; m is p or p^2
std::vector<uint64_t> half_binom_table(const PrimeModulus& pm, const Mod& mod);

// inverses of 1..n mod p (index 0 unused)
std::vector<uint64_t> inverse_table(uint64_t n, const PrimeModulus& pm);

// H_0..H_{p-1} mod p, H_0 = 0
using HarmonicTable = std::vector<uint64_t>;
HarmonicTable harmonic_table(const PrimeModulus& pm);

// (a^{p-1} - 1)/p mod p, computed from a^{p-1} mod p^2; throws NotCoprime
uint64_t fermat_quotient(long long a, const PrimeModulus& pm);

}  // namespace congsweep
