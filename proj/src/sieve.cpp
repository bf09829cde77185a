#include "congsweep/engine.hpp"

#include <algorithm>
#include <vector>

namespace congsweep {

std::vector<uint64_t> odd_primes_in(uint64_t lo, uint64_t hi) {
  std::vector<uint64_t> out;
  if (hi < 3 || hi < lo) return out;
  std::vector<bool> composite(hi + 1, false);
  for (uint64_t i = 2; i * i <= hi; ++i) {
    if (composite[i]) continue;
    for (uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  for (uint64_t n = std::max<uint64_t>(lo, 3) | 1; n <= hi; n += 2)
    if (!composite[n]) out.push_back(n);
  return out;
}

}  // namespace congsweep
