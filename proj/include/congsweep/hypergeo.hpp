#pragma once

#include <cstdint>
#include <vector>

#include "congsweep/exact.hpp"
#include "congsweep/quadring.hpp"
#include "congsweep/series.hpp"

namespace congsweep {

// rising factorial a(a+1)...(a+k-1), (a)_0 = 1
BigRational pochhammer(const BigRational& a, uint64_t k);

// sum_{k < terms} (a)_k (b)_k / ((c)_k k!) z^k, exactly.  When a or b is a
// negative integer -n and terms > n this is the exact terminating sum.
// Throws LowerParameterPole when c is an integer in (-(terms-1) .. 0].
BigRational truncated_2f1(const BigRational& a, const BigRational& b,
                          const BigRational& c, const BigRational& z, uint64_t terms);
QuadRational truncated_2f1(const BigRational& a, const BigRational& b,
                           const BigRational& c, const QuadRational& z, uint64_t terms);

// The three quadratic-argument transformations, checked coefficient-wise as
// formal power series in z up to `order` coefficients:
//   T314:  2F1(a,b; a-b+1 | z)   = (1-z)^{-a}  2F1(a/2, a/2-b+1/2; a-b+1  | -4z/(1-z)^2)
//   T319:  2F1(a,b; a-b+1 | z)   = (1+z)^{-a}  2F1(a/2, a/2+1/2;   a-b+1  |  4z/(1+z)^2)
//   T3111: 2F1(a,b; a-b+1 | z^2) = (1+z)^{-2a} 2F1(a,   a-b+1/2; 2a-2b+1  |  4z/(1+z)^2)
// Working with formal series sidesteps |z| < 1 and branch questions: every
// binomial factor has constant term 1 and every substituted argument has
// constant term 0.
enum class TransformId { T314, T319, T3111 };
bool transform_check(TransformId id, const BigRational& a, const BigRational& b,
                     size_t order);

// Exact verification of the terminating transformation instances behind the
// quadratic-ring sums, per variant of lemma31_sum:
//   i   at z = (1+sqrt2)^2   (argument -4z/(1-z)^2 = -1),
//       directly for p = 5 (mod 8), via the (3p-1)/2 row for p = 7 (mod 8);
//   ii  at z = -(2+sqrt3)^2  (argument 4z/(1+z)^2 = -1/3);
//   iii at z = -(3+2 sqrt2)  (argument 4z/(1+z)^2 = -1), series in z^2.
// exact_identity: both sides agree in Q(sqrt d).
// inner_vanishes: the terminating inner 2F1 value has v_p >= 1.
// closed_form_vanishes: the driver that forces it — the alternating square
//   sum is exactly 0 (i, iii), or v_p(gamma_ratio_product) >= 1 (ii).
// lucas_step: for p = 7 (mod 8) under variant i, the mod-p reduction tying
//   the (3p-1)/2 row back to the (p-1)/2 row; true elsewhere.
struct Lemma31Report {
  bool exact_identity = false;
  bool inner_vanishes = false;
  bool closed_form_vanishes = false;
  bool lucas_step = true;
  bool pass() const {
    return exact_identity && inner_vanishes && closed_form_vanishes && lucas_step;
  }
};
Lemma31Report lemma31_finite_sum_identity(const PrimeModulus& pm, Lemma31Variant v);

// sum_k (-1)^k binom(n,k)^2 = 0 for odd n, (-1)^{n/2} binom(n, n/2) for even
mpz_class alternating_square_sum(uint64_t n);

// sum_k binom(n-j, n-k) binom(r, k) = binom(r+n-j, n) with generalized
// binomials, exact for rational r
bool chu_vandermonde_check(uint64_t n, uint64_t j, const BigRational& r);

// prod_{j=0}^{(p-1)/2-1} (3/2+j)/(4/3+j); for p = 2 (mod 3) the numerator
// picks up the factor p/2 and nothing cancels it, so v_p >= 1
BigRational gamma_ratio_product(const PrimeModulus& pm);

// v_p((p/2+1)_k - (1)_k) >= 1 for all k <= k_max — the replacement of the
// lower parameter 1 by p/2+1 is invisible mod p
bool pochhammer_shift_valuation(const PrimeModulus& pm, uint64_t k_max);

}  // namespace congsweep
