#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "congsweep/errors.hpp"
#include "congsweep/modarith.hpp"

namespace congsweep {

// Exact arbitrary-precision scalars for the oracle side.  BigRational is
// GMP's canonical rational (always reduced, positive denominator).
using BigRational = mpq_class;

constexpr long kValuationInfinity = 1L << 30;  // v_p(0)

long vp(const mpz_class& x, uint64_t p);
long vp(const BigRational& r, uint64_t p);

// residue of a p-integral rational mod p^power (power 1 or 2);
// throws NotInvertible when v_p(denominator) > 0
uint64_t reduce_mod(const BigRational& r, const PrimeModulus& pm, int power);

mpz_class binom_exact(uint64_t n, uint64_t k);
// generalized binomial r(r-1)...(r-k+1)/k! for rational r
BigRational binom_rational(const BigRational& r, uint64_t k);
BigRational harmonic_exact(uint64_t n);  // H_n = 1 + 1/2 + ... + 1/n
mpz_class pow_int(long long base, uint64_t e);

// a + b*sqrt(d) with exact rational coordinates; a commutative ring for any
// d, a field when d is not a square.  Equality is component-wise.
struct QuadRational {
  BigRational x;
  BigRational y;
  long long d = 0;

  QuadRational() = default;
  QuadRational(BigRational x_, BigRational y_, long long d_)
      : x(std::move(x_)), y(std::move(y_)), d(d_) {}

  static QuadRational from_rational(const BigRational& r, long long d) {
    return QuadRational(r, 0, d);
  }

  bool is_rational() const { return y == 0; }
  bool operator==(const QuadRational& o) const { return d == o.d && x == o.x && y == o.y; }
};

QuadRational operator+(const QuadRational& u, const QuadRational& v);
QuadRational operator-(const QuadRational& u, const QuadRational& v);
QuadRational operator*(const QuadRational& u, const QuadRational& v);
QuadRational scale(const QuadRational& u, const BigRational& c);
QuadRational conj(const QuadRational& u);
BigRational norm(const QuadRational& u);  // x^2 - d y^2
// division by conjugate/norm; throws NotInvertible when norm is 0
QuadRational quad_div(const QuadRational& u, const QuadRational& v);
QuadRational quad_pow_exact(const QuadRational& u, uint64_t e);

// coordinate-wise reduction mod p^power
struct QuadResidue {
  uint64_t x = 0;
  uint64_t y = 0;
};
QuadResidue reduce_mod(const QuadRational& u, const PrimeModulus& pm, int power);

}  // namespace congsweep
