#include "congsweep/quadring.hpp"

#include <string>

namespace congsweep {

namespace {

void require_same_ring(const QuadElem& u, const QuadElem& v) {
  if (u.d != v.d || u.m != v.m)
    throw ModulusMismatch("quad ring mismatch: (d=" + std::to_string(u.d) + ",m=" +
                          std::to_string(u.m) + ") vs (d=" + std::to_string(v.d) +
                          ",m=" + std::to_string(v.m) + ")");
}

}  // namespace

QuadElem quad_add(const QuadElem& u, const QuadElem& v) {
  require_same_ring(u, v);
  const Mod mod(u.m);
  return QuadElem{mod.add(u.x, v.x), mod.add(u.y, v.y), u.d, u.m};
}

QuadElem quad_sub(const QuadElem& u, const QuadElem& v) {
  require_same_ring(u, v);
  const Mod mod(u.m);
  return QuadElem{mod.sub(u.x, v.x), mod.sub(u.y, v.y), u.d, u.m};
}

QuadElem quad_mul(const QuadElem& u, const QuadElem& v) {
  require_same_ring(u, v);
  const Mod mod(u.m);
  const uint64_t dm = mod.from_int(u.d);
  uint64_t x = mod.add(mod.mul(u.x, v.x), mod.mul(dm, mod.mul(u.y, v.y)));
  uint64_t y = mod.add(mod.mul(u.x, v.y), mod.mul(u.y, v.x));
  return QuadElem{x, y, u.d, u.m};
}

QuadElem quad_pow(QuadElem u, uint64_t e) {
  QuadElem acc = QuadElem::one(u.d, Mod(u.m));
  while (e) {
    if (e & 1) acc = quad_mul(acc, u);
    u = quad_mul(u, u);
    e >>= 1;
  }
  return acc;
}

QuadElem quad_conj(const QuadElem& u) {
  const Mod mod(u.m);
  return QuadElem{u.x, mod.neg(u.y), u.d, u.m};
}

uint64_t quad_norm(const QuadElem& u) {
  const Mod mod(u.m);
  const uint64_t dm = mod.from_int(u.d);
  return mod.sub(mod.mul(u.x, u.x), mod.mul(dm, mod.mul(u.y, u.y)));
}

QuadElem lemma31_sum(Lemma31Variant v, const PrimeModulus& pm) {
  const Mod mp = pm.mod_p();
  QuadElem sigma;
  switch (v) {
    case Lemma31Variant::i:
      if (pm.p % 8 != 5 && pm.p % 8 != 7)
        throw NotApplicable("lemma31_sum(i): need p = 5,7 (mod 8)");
      sigma = QuadElem::make(3, 2, 2, mp);  // (1+sqrt2)^2
      break;
    case Lemma31Variant::ii:
      if (pm.p % 3 != 2) throw NotApplicable("lemma31_sum(ii): need p = 2 (mod 3)");
      sigma = QuadElem::make(-7, -4, 3, mp);  // -(2+sqrt3)^2
      break;
    case Lemma31Variant::iii:
      if (pm.p % 4 != 3) throw NotApplicable("lemma31_sum(iii): need p = 3 (mod 4)");
      sigma = QuadElem::make(17, 12, 2, mp);  // (3+2 sqrt2)^2
      break;
  }
  const uint64_t n = pm.half();
  const std::vector<uint64_t> inv = inverse_table(n, pm);
  QuadElem acc = QuadElem::zero(sigma.d, mp);
  QuadElem pow = QuadElem::one(sigma.d, mp);
  uint64_t b = 1;  // binom(n, k) mod p
  for (uint64_t k = 0; k <= n; ++k) {
    uint64_t b2 = mp.mul(b, b);
    acc = quad_add(acc, QuadElem{mp.mul(b2, pow.x), mp.mul(b2, pow.y), sigma.d, sigma.m});
    if (k < n) {
      b = mp.mul(b, mp.mul((n - k) % pm.p, inv[k + 1]));
      pow = quad_mul(pow, sigma);
    }
  }
  return acc;
}

bool frobenius_check(const QuadElem& u, const PrimeModulus& pm) {
  if (u.m != pm.p)
    throw ModulusMismatch("frobenius_check: element not reduced mod p");
  uint64_t nrm = quad_norm(u);
  if (nrm % pm.p == 0)
    throw NotInvertible("frobenius_check: norm divisible by p");
  return quad_pow(u, pm.p - 1) == QuadElem::one(u.d, pm.mod_p());
}

}  // namespace congsweep
