#pragma once

#include <cstdint>
#include <vector>

#include "congsweep/sequences.hpp"

namespace congsweep {

// The full exact-arithmetic identity surface, independent of any prime sweep:
// sequence bridges up to n_max, the three quadratic transformations (random
// parameter pairs at the given series order plus all terminating cases),
// Chu-Vandermonde with rational and half-integer upper index, the alternating
// square-sum closed form up to n_max, the gamma-ratio product valuations for
// 5 <= p <= 1000, and the terminating transformation instances at the
// quadratic points.  One result per suite, all expected verified.
std::vector<IdentityResult> identity_suite(uint64_t n_max, size_t series_order);

}  // namespace congsweep
