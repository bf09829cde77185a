#include "congsweep/engine.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

namespace congsweep {

namespace {

std::vector<std::string> resolve_check_ids(const std::vector<std::string>& ids) {
  if (ids.empty()) {
    std::vector<std::string> all;
    for (const auto& d : list_checks()) all.push_back(d.id);
    return all;
  }
  for (const auto& id : ids) find_check(id);  // throws on unknown ids
  return ids;
}

bool params_less(const std::optional<LucasParams>& x, const std::optional<LucasParams>& y) {
  if (!x || !y) return y.has_value();
  return *x < *y;
}

void sort_results(std::vector<CheckResult>& rs) {
  std::sort(rs.begin(), rs.end(), [](const CheckResult& l, const CheckResult& r) {
    if (l.prime != r.prime) return l.prime < r.prime;
    if (l.id != r.id) return l.id < r.id;
    return params_less(l.params, r.params);
  });
}

// run fn(i) for i = 0..count-1 on `jobs` workers; rethrows the first failure
void parallel_for(size_t count, unsigned jobs, const std::function<void(size_t)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<CheckResult> sweep(const SweepConfig& config) {
  if (config.prime_lo < 3 || config.prime_lo > config.prime_hi)
    throw InvalidConfig("sweep: need 3 <= from <= to");
  if (config.jobs < 1) throw InvalidConfig("sweep: jobs must be >= 1");
  if (config.a_lo > config.a_hi || config.b_lo > config.b_hi)
    throw InvalidConfig("sweep: empty Lucas parameter grid");
  const std::vector<std::string> ids = resolve_check_ids(config.check_ids);
  const std::vector<uint64_t> primes = odd_primes_in(config.prime_lo, config.prime_hi);

  std::vector<std::vector<CheckResult>> slots(primes.size());
  parallel_for(primes.size(), config.jobs, [&](size_t i) {
    const PrimeModulus pm = PrimeModulus::make(primes[i]);
    const PrimeContext ctx(pm);
    std::vector<CheckResult>& out = slots[i];
    for (const std::string& id : ids) {
      const CheckDescriptor& d = find_check(id);
      auto run = [&](std::optional<LucasParams> params) {
        auto t0 = std::chrono::steady_clock::now();
        CheckResult r = check(id, ctx, params, config.perturb);
        if (config.timing)
          r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
              std::chrono::steady_clock::now() - t0);
        out.push_back(std::move(r));
      };
      if (d.parametric) {
        for (long long a = config.a_lo; a <= config.a_hi; ++a)
          for (long long b = config.b_lo; b <= config.b_hi; ++b)
            run(LucasParams{a, b});
      } else {
        run(std::nullopt);
      }
    }
  });

  std::vector<CheckResult> results;
  for (auto& s : slots)
    for (auto& r : s) results.push_back(std::move(r));
  sort_results(results);
  return results;
}

bool all_applicable_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (r.applicable && !(r.pass && *r.pass)) return false;
  return true;
}

namespace {

struct KnownPoint {
  char family;
  long long a, b, m;
  const char* id;
};

// parameter points whose vanishing is one of the registry theorems
constexpr KnownPoint kKnownPoints[] = {
    {'U', -1, 1, 16, "thm1_ii"},   // chi3(k)/16^k
    {'U', -3, 3, 16, "thm1n_ii"},  // (-1)^{k-1} M_k, up to overall sign
    {'U', 2, -1, 8, "thm1_iii"},   // Pell P_k/8^k
    {'V', 4, 1, -4, "thm1_iv"},    // R_k/(-4)^k
    {'V', -4, 4, 16, "thm1_i"},    // 2/(-8)^k
    {'V', -1, 1, 16, "thm1n_iii"}, // delta3(k)/16^k
};

std::string known_match_for(char family, long long a, long long b, long long m,
                            uint64_t residue, uint64_t modulus) {
  for (const KnownPoint& k : kKnownPoints) {
    if (k.family != family || k.a != a || k.b != b || k.m != m) continue;
    const CheckDescriptor& d = find_check(k.id);
    // the finding's class must sit inside the theorem's class
    if (modulus % d.applicability.modulus == 0 && d.applicability.contains(residue))
      return k.id;
  }
  return {};
}

}  // namespace

std::vector<ScanFinding> scan(const ScanConfig& config) {
  if (config.families.empty() ||
      config.families.find_first_not_of("UV") != std::string::npos)
    throw InvalidGrid("scan: families must be a subset of {U, V}");
  if (config.a_lo > config.a_hi || config.b_lo > config.b_hi)
    throw InvalidGrid("scan: empty (a,b) grid");
  if (config.denoms.empty()) throw InvalidGrid("scan: no denominators");
  if (config.min_primes < 5) throw InvalidGrid("scan: min_primes must be >= 5");
  if (config.class_modulus < 2) throw InvalidGrid("scan: class modulus must be >= 2");

  const std::vector<uint64_t> primes = odd_primes_in(3, config.prime_hi);
  for (long long m : config.denoms) {
    if (m == 0) throw InvalidGrid("scan: zero denominator");
    for (uint64_t p : primes)
      if (static_cast<unsigned long long>(m < 0 ? -m : m) % p == 0)
        throw InvalidGrid("scan: denominator " + std::to_string(m) +
                          " is not a unit mod " + std::to_string(p));
  }

  struct Combo {
    char family;
    LucasParams ab;
    long long m;
  };
  std::vector<Combo> combos;
  for (char family : config.families)
    for (long long a = config.a_lo; a <= config.a_hi; ++a)
      for (long long b = config.b_lo; b <= config.b_hi; ++b)
        for (long long m : config.denoms) {
          // an identically-zero weight sequence can never be a discovery;
          // for second-order recurrences the first two terms decide
          const long long s0 = family == 'U' ? 0 : 2, s1 = family == 'U' ? 1 : a;
          if (s0 == 0 && s1 == 0) continue;
          combos.push_back({family, {a, b}, m});
        }

  // pass bit per (combo, prime)
  std::vector<std::vector<uint8_t>> passed(combos.size(),
                                           std::vector<uint8_t>(primes.size(), 0));
  parallel_for(primes.size(), config.jobs, [&](size_t pi) {
    const PrimeModulus pm = PrimeModulus::make(primes[pi]);
    const Mod m2 = pm.mod_p2();
    const std::vector<uint64_t> row2 = row_binom_table(pm);
    const std::vector<uint64_t> central2 = central_binom_table(pm);
    std::vector<uint64_t> base(pm.p);
    for (uint64_t k = 0; k < pm.p; ++k)
      base[k] = m2.mul(row2[k], m2.mul(central2[k], central2[k]));
    for (size_t ci = 0; ci < combos.size(); ++ci) {
      const Combo& c = combos[ci];
      std::vector<uint64_t> seq = c.family == 'U'
                                      ? lucas_u_prefix(pm.p - 1, c.ab, m2)
                                      : lucas_v_prefix(pm.p - 1, c.ab, m2);
      const uint64_t q = m2.inv(m2.from_int(c.m));
      uint64_t acc = 0, qk = 1;
      for (uint64_t k = 0; k < pm.p; ++k) {
        acc = m2.add(acc, m2.mul(m2.mul(base[k], seq[k]), qk));
        qk = m2.mul(qk, q);
      }
      passed[ci][pi] = acc == 0;
    }
  });

  std::map<uint64_t, std::vector<size_t>> classes;
  for (size_t pi = 0; pi < primes.size(); ++pi)
    classes[primes[pi] % config.class_modulus].push_back(pi);

  std::vector<ScanFinding> findings;
  for (size_t ci = 0; ci < combos.size(); ++ci) {
    const Combo& c = combos[ci];
    for (const auto& [residue, members] : classes) {
      if (members.size() < config.min_primes) continue;
      bool all = true;
      for (size_t pi : members) all = all && passed[ci][pi];
      if (!all) continue;

      ScanFinding f;
      f.family = c.family;
      f.a = c.ab.a;
      f.b = c.ab.b;
      f.m = c.m;
      f.residue = residue;
      f.modulus = config.class_modulus;
      f.primes_tested = members.size();
      f.all_passed = true;
      f.known_match = known_match_for(c.family, c.ab.a, c.ab.b, c.m, residue,
                                      config.class_modulus);
      const long long disc = c.ab.discriminant();
      for (size_t pi : members) {
        uint64_t p = primes[pi];
        long long r = disc % static_cast<long long>(p);
        if (r == 0) f.disc_divisor_primes.push_back(p);
      }
      // soundness: the exact oracle must agree on the smallest three primes
      bool confirmed = true;
      for (size_t i = 0; i < members.size() && i < 3; ++i) {
        const PrimeModulus pm = PrimeModulus::make(primes[members[i]]);
        if (oracle_weighted_sum(c.family, c.ab, c.m, pm) != 0) confirmed = false;
      }
      if (!confirmed) {
        std::cerr << "scan: dropping finding (" << c.family << "," << c.ab.a << ","
                  << c.ab.b << "," << c.m << ") class " << residue
                  << ": oracle re-verification failed\n";
        continue;
      }
      findings.push_back(std::move(f));
    }
  }
  std::sort(findings.begin(), findings.end(),
            [](const ScanFinding& x, const ScanFinding& y) {
              return std::tie(x.family, x.a, x.b, x.m, x.residue) <
                     std::tie(y.family, y.a, y.b, y.m, y.residue);
            });
  return findings;
}

}  // namespace congsweep
