#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "congsweep/modarith.hpp"

namespace congsweep {

// Parameters of the Lucas recurrence x_n = a x_{n-1} - b x_{n-2}.
struct LucasParams {
  long long a = 0;
  long long b = 0;
  long long discriminant() const { return a * a - 4 * b; }
  bool operator==(const LucasParams&) const = default;
  auto operator<=>(const LucasParams&) const = default;
};

// U_0 = 0, U_1 = 1;  V_0 = 2, V_1 = a.
uint64_t lucas_u(uint64_t n, LucasParams ab, const Mod& mod);
uint64_t lucas_v(uint64_t n, LucasParams ab, const Mod& mod);
std::vector<uint64_t> lucas_u_prefix(uint64_t n_max, LucasParams ab, const Mod& mod);
std::vector<uint64_t> lucas_v_prefix(uint64_t n_max, LucasParams ab, const Mod& mod);

mpz_class lucas_u_exact(uint64_t n, LucasParams ab);
mpz_class lucas_v_exact(uint64_t n, LucasParams ab);
std::vector<mpz_class> lucas_u_prefix_exact(uint64_t n_max, LucasParams ab);
std::vector<mpz_class> lucas_v_prefix_exact(uint64_t n_max, LucasParams ab);

// P: Pell            0,1, P_n = 2P_{n-1} +  P_{n-2}
// R:                 2,4, R_n = 4R_{n-1} -  R_{n-2}
// W:                 0,1, W_n = 8W_{n-1} + 2W_{n-2}
// M:                 0,1, M_n = 3M_{n-1} - 3M_{n-2}
// chi3(k)   = Legendre(k, 3), period 3
// delta3(k) = 2 if 3 | k, else -1, period 3
enum class SeqTag { P, R, W, M, chi3, delta3 };

uint64_t named(SeqTag tag, uint64_t n, const Mod& mod);
std::vector<uint64_t> named_prefix(SeqTag tag, uint64_t n_max, const Mod& mod);
mpz_class named_exact(SeqTag tag, uint64_t n);

int chi3(uint64_t k);
int delta3(uint64_t k);

struct IdentityResult {
  std::string id;
  bool verified = false;
};

// Exact-arithmetic verification, for all 0 <= n <= n_max, of the scaling
// and bridging identities tying P, R, W, M, chi3, delta3 to Lucas pairs:
//   2^n P_n = 2 U_n(4,-4)          P_{2n} = 2 U_n(6,1)
//   (-4)^n R_n = V_n(-16,16)       (-1)^n R_{2n} = V_n(-14,1)
//   4^{n-1} W_n = U_n(32,-32)      W_{2n} = 2^{n+2} U_n(34,1)
//   V_n(-4,4) = -(-2)^{n+1}        V_n(-2,1) = 2(-1)^n
//   U_n(-1,1) = chi3(n)            U_n(1,1) = (-1)^{n-1} chi3(n)
//   (-1)^{k-1} M_k = U_k(-3,3)     delta3(k) = V_k(-1,1)
//   W_{2k} = 2^{k+2} (alpha^{2k}-beta^{2k})/(alpha^2-beta^2), alpha,beta = 3±2*sqrt2
//   V_k(1,1) = -V_{6h+3-k}(1,1)
// The W scaling runs from n = 1 (its 4^{n-1} factor is fractional at n = 0).
std::vector<IdentityResult> bridge_identity_suite(uint64_t n_max);

}  // namespace congsweep
