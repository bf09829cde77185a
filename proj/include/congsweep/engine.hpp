#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "congsweep/catalog.hpp"

namespace congsweep {

// odd primes in [lo, hi] by sieve of Eratosthenes (2 is never included)
std::vector<uint64_t> odd_primes_in(uint64_t lo, uint64_t hi);

enum class ReportFormat { Jsonl, Csv };

struct SweepConfig {
  uint64_t prime_lo = 3;
  uint64_t prime_hi = 1000;
  std::vector<std::string> check_ids;  // empty means the whole registry
  unsigned jobs = 1;
  long long a_lo = -5, a_hi = 5;  // Lucas parameter grid for thm2_v/thm2_u
  long long b_lo = -5, b_hi = 5;
  bool timing = false;  // fill the micros field with wall-clock timings
  Perturbation perturb = Perturbation::None;
};

// One CheckResult per (prime, check, params), sorted by that key regardless
// of worker count.  Throws InvalidConfig on a bad config.
std::vector<CheckResult> sweep(const SweepConfig& config);

bool all_applicable_passed(const std::vector<CheckResult>& results);

struct ScanConfig {
  std::string families = "UV";  // any subset of {U, V}
  long long a_lo = -5, a_hi = 5;
  long long b_lo = -5, b_hi = 5;
  std::vector<long long> denoms{4, -4, 8, -8, 16, -16};
  uint64_t prime_hi = 1000;
  unsigned min_primes = 8;
  unsigned jobs = 1;
  uint64_t class_modulus = 24;  // refines every residue condition in the registry
};

struct ScanFinding {
  char family = 'U';
  long long a = 0, b = 0, m = 1;
  uint64_t residue = 0;       // the class r (mod class_modulus) that held
  uint64_t modulus = 24;
  uint64_t primes_tested = 0;
  bool all_passed = true;
  std::string known_match;    // registry id when this point is a known theorem
  std::vector<uint64_t> disc_divisor_primes;  // tested primes dividing a^2-4b
};

// Hunts for parameter points (family, a, b, m) whose weighted sum vanishes
// mod p^2 across every tested prime of a residue class.  Findings are
// re-verified with the exact-rational oracle on their three smallest primes
// before being reported.  Throws InvalidGrid on bad grids.
std::vector<ScanFinding> scan(const ScanConfig& config);

void emit_report(const std::vector<CheckResult>& results, ReportFormat format,
                 std::ostream& out);
void emit_report(const std::vector<CheckResult>& results, ReportFormat format,
                 const std::string& path);  // throws IoError
std::string render_report(const std::vector<CheckResult>& results, ReportFormat format);

void emit_findings(const std::vector<ScanFinding>& findings, std::ostream& out);
void emit_findings(const std::vector<ScanFinding>& findings, const std::string& path);
std::string render_findings(const std::vector<ScanFinding>& findings);

}  // namespace congsweep
