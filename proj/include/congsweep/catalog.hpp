#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "congsweep/modarith.hpp"
#include "congsweep/sequences.hpp"

namespace congsweep {

// residue-class applicability predicate: p mod `modulus` is one of `residues`
// (modulus 2 / residue 1 means every odd prime)
struct ResidueClass {
  uint64_t modulus = 2;
  std::vector<uint32_t> residues{1};

  bool contains(uint64_t p) const {
    uint64_t r = p % modulus;
    for (uint32_t x : residues)
      if (r == x) return true;
    return false;
  }
  std::string to_string() const;
};

// deliberate registry corruptions for negative-control runs
enum class Perturbation { None, Thm1iiiDenom7, MorleyPowM1 };

struct CheckDescriptor {
  std::string id;
  ResidueClass applicability;
  int modulus_power = 2;   // congruence holds mod p^modulus_power
  bool parametric = false; // needs LucasParams (thm2_v / thm2_u)
  std::string statement;   // what the check asserts, human-readable
};

struct CheckResult {
  uint64_t prime = 0;
  std::string id;
  std::optional<LucasParams> params;
  bool applicable = false;
  std::optional<bool> pass;  // set only when applicable
  uint64_t lhs = 0;          // left side minus right side mod p^modulus_power
  int modulus_power = 2;
  std::chrono::microseconds elapsed{0};
};

// full registry, stable order; ids are unique
const std::vector<CheckDescriptor>& list_checks();
const CheckDescriptor& find_check(const std::string& id);  // throws InvalidConfig

// Per-prime tables shared by every check on that prime.  Building them once
// dominates the cost of a prime; the checks themselves are linear scans.
struct PrimeContext {
  PrimeModulus pm;
  std::vector<uint64_t> central2;  // binom(2k,k)    mod p^2, k = 0..p-1
  std::vector<uint64_t> row2;      // binom(p-1,k)   mod p^2, k = 0..p-1
  std::vector<uint64_t> half2;     // binom((p-1)/2,j) mod p^2, j = 0..(p-1)/2
  std::vector<uint64_t> harm;      // H_n mod p, n = 0..p-1

  explicit PrimeContext(const PrimeModulus& pm);
};

// Evaluates one congruence at one prime.  `params` is required for the
// parametric checks and ignored otherwise.  Never throws on inapplicable
// primes: those come back with applicable = false.
CheckResult check(const std::string& id, const PrimeContext& ctx,
                  std::optional<LucasParams> params = std::nullopt,
                  Perturbation pert = Perturbation::None);
CheckResult check(const std::string& id, const PrimeModulus& pm,
                  std::optional<LucasParams> params = std::nullopt,
                  Perturbation pert = Perturbation::None);

// delta3-weighted reformulation of thm1n_iii (sum over j <= (p-1)/2 of
// binom(p-1,j) binom(2j,j)^2 delta3(j)/16^j = 0); pass/fail must agree with
// the k = 0 (mod 3) vs one-third-of-total form
CheckResult check_thm1n_iii_delta(const PrimeContext& ctx);

// Same claims evaluated over exact rationals / Q(sqrt d), reduced mod
// p^modulus_power at the very end.  Independent of the modular kernels.
// Throws OracleBoundExceeded for p > bound.
CheckResult oracle_check(const std::string& id, const PrimeModulus& pm,
                         std::optional<LucasParams> params = std::nullopt,
                         uint64_t bound = 97);

// Exact-rational evaluation of
//   sum_{k=0}^{p-1} binom(p-1,k) binom(2k,k)^2 S_k(a,b) / m^k   (mod p^2)
// for S = U or V; shared by the scanner's soundness confirmation.
uint64_t oracle_weighted_sum(char family, LucasParams ab, long long denom,
                             const PrimeModulus& pm);

}  // namespace congsweep
