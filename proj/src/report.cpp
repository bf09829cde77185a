#include "congsweep/engine.hpp"

#include <fstream>
#include <sstream>

namespace congsweep {

namespace {

// fields and order are fixed: prime, check, params, applicable, pass, lhs,
// modulus_power, micros; lhs as a decimal string so p^2 never hits a
// consumer's integer-width limit
void write_jsonl_line(std::ostream& out, const CheckResult& r) {
  out << "{\"prime\":" << r.prime << ",\"check\":\"" << r.id << "\",\"params\":";
  if (r.params)
    out << "{\"a\":" << r.params->a << ",\"b\":" << r.params->b << "}";
  else
    out << "null";
  out << ",\"applicable\":" << (r.applicable ? "true" : "false") << ",\"pass\":";
  if (r.pass)
    out << (*r.pass ? "true" : "false");
  else
    out << "null";
  out << ",\"lhs\":\"" << r.lhs << "\",\"modulus_power\":" << r.modulus_power
      << ",\"micros\":" << r.elapsed.count() << "}\n";
}

void write_csv_line(std::ostream& out, const CheckResult& r) {
  out << r.prime << "," << r.id << ",";
  if (r.params) out << "a=" << r.params->a << ";b=" << r.params->b;
  out << "," << (r.applicable ? "true" : "false") << ",";
  if (r.pass) out << (*r.pass ? "true" : "false");
  out << "," << r.lhs << "," << r.modulus_power << "," << r.elapsed.count() << "\n";
}

}  // namespace

void emit_report(const std::vector<CheckResult>& results, ReportFormat format,
                 std::ostream& out) {
  if (format == ReportFormat::Csv)
    out << "prime,check,params,applicable,pass,lhs,modulus_power,micros\n";
  for (const auto& r : results) {
    if (format == ReportFormat::Jsonl)
      write_jsonl_line(out, r);
    else
      write_csv_line(out, r);
  }
}

void emit_report(const std::vector<CheckResult>& results, ReportFormat format,
                 const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open report path: " + path);
  emit_report(results, format, f);
  f.flush();
  if (!f) throw IoError("write failed: " + path);
}

std::string render_report(const std::vector<CheckResult>& results, ReportFormat format) {
  std::ostringstream ss;
  emit_report(results, format, ss);
  return ss.str();
}

void emit_findings(const std::vector<ScanFinding>& findings, std::ostream& out) {
  for (const auto& f : findings) {
    out << "{\"family\":\"" << f.family << "\",\"a\":" << f.a << ",\"b\":" << f.b
        << ",\"m\":" << f.m << ",\"class\":" << f.residue
        << ",\"class_mod\":" << f.modulus << ",\"primes_tested\":" << f.primes_tested
        << ",\"all_passed\":" << (f.all_passed ? "true" : "false")
        << ",\"known_match\":";
    if (f.known_match.empty())
      out << "null";
    else
      out << "\"" << f.known_match << "\"";
    out << ",\"disc_divisor_primes\":[";
    for (size_t i = 0; i < f.disc_divisor_primes.size(); ++i) {
      if (i) out << ",";
      out << f.disc_divisor_primes[i];
    }
    out << "]}\n";
  }
}

void emit_findings(const std::vector<ScanFinding>& findings, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open findings path: " + path);
  emit_findings(findings, f);
  f.flush();
  if (!f) throw IoError("write failed: " + path);
}

std::string render_findings(const std::vector<ScanFinding>& findings) {
  std::ostringstream ss;
  emit_findings(findings, ss);
  return ss.str();
}

}  // namespace congsweep
