#pragma once

#include <cstdint>

#include "congsweep/modarith.hpp"

namespace congsweep {

// x + y*w in R[w]/(w^2 - d) with R = Z/mZ.  No invertibility of w or y is
// ever assumed: when d is a quadratic residue this is a product of two
// prime fields and not a field, but all ring operations stay well-defined.
struct QuadElem {
  uint64_t x = 0;
  uint64_t y = 0;
  long long d = 0;
  uint64_t m = 0;

  static QuadElem make(long long x, long long y, long long d, const Mod& mod) {
    return QuadElem{mod.from_int(x), mod.from_int(y), d, mod.m()};
  }
  static QuadElem one(long long d, const Mod& mod) { return make(1, 0, d, mod); }
  static QuadElem zero(long long d, const Mod& mod) { return make(0, 0, d, mod); }

  bool is_zero() const { return x == 0 && y == 0; }
  bool operator==(const QuadElem&) const = default;
};

QuadElem quad_add(const QuadElem& u, const QuadElem& v);
QuadElem quad_sub(const QuadElem& u, const QuadElem& v);
// (x1 + y1 w)(x2 + y2 w) = (x1 x2 + d y1 y2) + (x1 y2 + x2 y1) w;
// throws ModulusMismatch when d or m differ
QuadElem quad_mul(const QuadElem& u, const QuadElem& v);
QuadElem quad_pow(QuadElem u, uint64_t e);
QuadElem quad_conj(const QuadElem& u);   // (x, -y)
uint64_t quad_norm(const QuadElem& u);   // x^2 - d y^2 mod m

enum class Lemma31Variant { i, ii, iii };

// sum_{k=0}^{(p-1)/2} binom((p-1)/2, k)^2 sigma^k mod p with
//   i   (p = 5,7 mod 8):  sigma = (1+sqrt2)^2
//   ii  (p = 2 mod 3):    sigma = -(2+sqrt3)^2
//   iii (p = 3 mod 4):    sigma = (3+2 sqrt2)^2
// The sum vanishes; callers treat a nonzero return as a failed check.
// Throws NotApplicable when p misses the residue condition.
QuadElem lemma31_sum(Lemma31Variant v, const PrimeModulus& pm);

// true iff u^{p-1} = 1 in the ring mod p; requires norm(u) to be a unit
bool frobenius_check(const QuadElem& u, const PrimeModulus& pm);

}  // namespace congsweep
