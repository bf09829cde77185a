#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include "congsweep/engine.hpp"
#include "congsweep/identities.hpp"

namespace {

using namespace congsweep;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::pair<long long, long long> parse_range(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos)
    throw InvalidConfig("range must look like LO:HI, got '" + s + "'");
  return {std::stoll(s.substr(0, colon)), std::stoll(s.substr(colon + 1))};
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= s.size()) {
    size_t comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    if (comma > start) out.push_back(s.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

std::vector<std::string> parse_checks(const std::string& s) {
  if (s == "all" || s.empty()) return {};
  return split_list(s);
}

std::vector<long long> parse_denoms(const std::string& s) {
  std::vector<long long> out;
  for (const std::string& item : split_list(s)) out.push_back(std::stoll(item));
  return out;
}

Perturbation parse_perturbation(const std::string& s) {
  if (s == "none") return Perturbation::None;
  if (s == "thm1_iii_denom7") return Perturbation::Thm1iiiDenom7;
  if (s == "morley_pow_m1") return Perturbation::MorleyPowM1;
  throw InvalidConfig("unknown perturbation: " + s);
}

bool parse_bool(const std::string& s) {
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw InvalidConfig("expected a boolean, got '" + s + "'");
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// "key = value" per line; values only apply to flags the user did not pass
using Setter = std::function<void(const std::string&)>;
void apply_config_file(CLI::App* sub, const std::string& path,
                       const std::map<std::string, Setter>& setters) {
  if (path.empty()) return;
  std::ifstream f(path);
  if (!f) throw IoError("cannot read config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw InvalidConfig("config line " + std::to_string(lineno) +
                          ": expected key = value");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    auto it = setters.find(key);
    if (it == setters.end())
      throw InvalidConfig("config line " + std::to_string(lineno) + ": unknown key '" +
                          key + "'");
    if (sub->count("--" + key) == 0) it->second(value);
  }
}

unsigned default_jobs_from_env() {
  const char* env = std::getenv("CONGSWEEP_JOBS");
  if (!env || !*env) return 1;
  try {
    unsigned long v = std::stoul(env);
    if (v < 1) throw std::out_of_range("jobs");
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw InvalidConfig(std::string("CONGSWEEP_JOBS is not a positive integer: ") + env);
  }
}

struct VerifyArgs {
  uint64_t from = 3, to = 1000;
  std::string checks = "all";
  std::string a_range = "-5:5", b_range = "-5:5";
  unsigned jobs = 1;
  std::string format = "jsonl";
  std::string out;
  bool timing = false;
  std::string perturb = "none";
  std::string config;
};

int run_verify(const VerifyArgs& args) {
  SweepConfig cfg;
  cfg.prime_lo = args.from;
  cfg.prime_hi = args.to;
  cfg.check_ids = parse_checks(args.checks);
  std::tie(cfg.a_lo, cfg.a_hi) = parse_range(args.a_range);
  std::tie(cfg.b_lo, cfg.b_hi) = parse_range(args.b_range);
  cfg.jobs = args.jobs;
  cfg.timing = args.timing;
  cfg.perturb = parse_perturbation(args.perturb);
  if (args.format != "jsonl" && args.format != "csv")
    throw InvalidConfig("format must be jsonl or csv");
  const ReportFormat fmt = args.format == "csv" ? ReportFormat::Csv : ReportFormat::Jsonl;

  auto t0 = std::chrono::steady_clock::now();
  std::vector<CheckResult> results = sweep(cfg);
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (args.out.empty())
    emit_report(results, fmt, std::cout);
  else
    emit_report(results, fmt, args.out);

  size_t applicable = 0, failed = 0;
  for (const auto& r : results) {
    if (!r.applicable) continue;
    ++applicable;
    if (!(r.pass && *r.pass)) ++failed;
  }
  std::cerr << "verify: " << results.size() << " results, " << applicable
            << " applicable, " << failed << " failed, " << secs << "s\n";
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

struct IdentityArgs {
  uint64_t max_n = 60;
  size_t series_order = 30;
  std::string config;
};

int run_identities(const IdentityArgs& args) {
  std::vector<IdentityResult> suite = identity_suite(args.max_n, args.series_order);
  bool all_ok = true;
  for (const auto& r : suite) {
    std::cout << (r.verified ? "ok   " : "FAIL ") << r.id << "\n";
    all_ok = all_ok && r.verified;
  }
  std::cout << (all_ok ? "all identities verified\n" : "identity failures present\n");
  return all_ok ? kExitOk : kExitCheckFailed;
}

struct ScanArgs {
  std::string family = "UV";
  std::string a_range = "-5:5", b_range = "-5:5";
  std::string denoms = "4,-4,8,-8,16,-16";
  uint64_t to = 1000;
  unsigned min_primes = 8;
  unsigned jobs = 1;
  uint64_t class_mod = 24;
  std::string out;
  std::string config;
};

int run_scan(const ScanArgs& args) {
  ScanConfig cfg;
  cfg.families.clear();
  for (char c : args.family)
    if (c != ',') cfg.families.push_back(c);
  std::tie(cfg.a_lo, cfg.a_hi) = parse_range(args.a_range);
  std::tie(cfg.b_lo, cfg.b_hi) = parse_range(args.b_range);
  cfg.denoms = parse_denoms(args.denoms);
  cfg.prime_hi = args.to;
  cfg.min_primes = args.min_primes;
  cfg.jobs = args.jobs;
  cfg.class_modulus = args.class_mod;

  auto t0 = std::chrono::steady_clock::now();
  std::vector<ScanFinding> findings = scan(cfg);
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (args.out.empty())
    emit_findings(findings, std::cout);
  else
    emit_findings(findings, args.out);

  size_t known = 0;
  for (const auto& f : findings)
    if (!f.known_match.empty()) ++known;
  std::cerr << "scan: " << findings.size() << " findings (" << known
            << " known rediscoveries), " << secs << "s\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic verification of binomial-sum congruences mod p^2"};
  app.require_subcommand(1);

  VerifyArgs v;
  IdentityArgs id_args;
  ScanArgs s;
  try {
    v.jobs = default_jobs_from_env();
    s.jobs = v.jobs;
  } catch (const InvalidConfig& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App* verify =
      app.add_subcommand("verify", "sweep primes and evaluate the congruence registry");
  verify->add_option("--from", v.from, "first prime bound (inclusive)");
  verify->add_option("--to", v.to, "last prime bound (inclusive)");
  verify->add_option("--checks", v.checks, "comma-separated check ids, or 'all'");
  verify->add_option("--a-range", v.a_range, "Lucas a grid LO:HI for thm2 checks");
  verify->add_option("--b-range", v.b_range, "Lucas b grid LO:HI for thm2 checks");
  verify->add_option("--jobs", v.jobs, "worker threads (env CONGSWEEP_JOBS)");
  verify->add_option("--format", v.format, "jsonl or csv");
  verify->add_option("--out", v.out, "report path (stdout when omitted)");
  verify->add_flag("--timing", v.timing,
                   "fill micros with wall-clock timings (reports stop being "
                   "byte-reproducible)");
  verify->add_option("--perturb", v.perturb,
                     "negative control: none, thm1_iii_denom7, morley_pow_m1");
  verify->add_option("--config", v.config, "key = value preset file; flags override");

  CLI::App* identities =
      app.add_subcommand("identities", "run the exact identity suites (no prime sweep)");
  identities->add_option("--max-n", id_args.max_n, "sequence identity bound");
  identities->add_option("--series-order", id_args.series_order,
                         "coefficient window for the transformation checks");
  identities->add_option("--config", id_args.config,
                         "key = value preset file; flags override");

  CLI::App* scan_cmd = app.add_subcommand(
      "scan", "hunt for new vanishing parameter points of the same shape");
  scan_cmd->add_option("--family", s.family, "U, V or UV");
  scan_cmd->add_option("--a", s.a_range, "a grid LO:HI");
  scan_cmd->add_option("--b", s.b_range, "b grid LO:HI");
  scan_cmd->add_option("--denoms", s.denoms, "comma-separated denominators");
  scan_cmd->add_option("--to", s.to, "prime bound");
  scan_cmd->add_option("--min-primes", s.min_primes,
                       "minimum primes per residue class before reporting");
  scan_cmd->add_option("--jobs", s.jobs, "worker threads (env CONGSWEEP_JOBS)");
  scan_cmd->add_option("--class-mod", s.class_mod, "residue class modulus");
  scan_cmd->add_option("--out", s.out, "findings path (stdout when omitted)");
  scan_cmd->add_option("--config", s.config, "key = value preset file; flags override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      apply_config_file(
          verify, v.config,
          {{"from", [&](const std::string& x) { v.from = std::stoull(x); }},
           {"to", [&](const std::string& x) { v.to = std::stoull(x); }},
           {"checks", [&](const std::string& x) { v.checks = x; }},
           {"a-range", [&](const std::string& x) { v.a_range = x; }},
           {"b-range", [&](const std::string& x) { v.b_range = x; }},
           {"jobs",
            [&](const std::string& x) { v.jobs = static_cast<unsigned>(std::stoul(x)); }},
           {"format", [&](const std::string& x) { v.format = x; }},
           {"out", [&](const std::string& x) { v.out = x; }},
           {"timing", [&](const std::string& x) { v.timing = parse_bool(x); }},
           {"perturb", [&](const std::string& x) { v.perturb = x; }}});
      return run_verify(v);
    }
    if (identities->parsed()) {
      apply_config_file(
          identities, id_args.config,
          {{"max-n", [&](const std::string& x) { id_args.max_n = std::stoull(x); }},
           {"series-order",
            [&](const std::string& x) { id_args.series_order = std::stoull(x); }}});
      return run_identities(id_args);
    }
    if (scan_cmd->parsed()) {
      apply_config_file(
          scan_cmd, s.config,
          {{"family", [&](const std::string& x) { s.family = x; }},
           {"a", [&](const std::string& x) { s.a_range = x; }},
           {"b", [&](const std::string& x) { s.b_range = x; }},
           {"denoms", [&](const std::string& x) { s.denoms = x; }},
           {"to", [&](const std::string& x) { s.to = std::stoull(x); }},
           {"min-primes",
            [&](const std::string& x) {
              s.min_primes = static_cast<unsigned>(std::stoul(x));
            }},
           {"jobs",
            [&](const std::string& x) { s.jobs = static_cast<unsigned>(std::stoul(x)); }},
           {"class-mod", [&](const std::string& x) { s.class_mod = std::stoull(x); }},
           {"out", [&](const std::string& x) { s.out = x; }}});
      return run_scan(s);
    }
  } catch (const InvalidConfig& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidGrid& e) {
    std::cerr << "grid error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
