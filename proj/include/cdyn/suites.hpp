#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cdyn/dyn_system.hpp"

namespace cdyn {

// Residuals are relative to the natural size of the quantities involved;
// random elements are drawn with unit operator norm.
struct SuiteEntry {
  std::string check;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteEntry> entries;
  bool pass() const;
  const SuiteEntry& entry(const std::string& check) const;  // StructuralError if absent
};

// Value must satisfy value <= threshold.
SuiteEntry upper_entry(std::string check, double value, double threshold);
// Value must satisfy value >= -threshold (an inequality slack).
SuiteEntry slack_entry(std::string check, double slack, double threshold);

inline const std::vector<std::string> kSuiteNames{"module", "crossed", "fourier", "rc", "fell"};

// name is one of kSuiteNames. Deterministic in (sys, seed, tol).
SuiteReport run_suite(const DynSystem& sys, const std::string& name, std::uint64_t seed, double tol);
// "all" expands to every suite in kSuiteNames order.
std::vector<SuiteReport> run_suites(const DynSystem& sys, const std::string& name, std::uint64_t seed,
                                    double tol);

SuiteReport fourier_suite(const DynSystem& sys, std::uint64_t seed, double tol);
SuiteReport module_suite(const DynSystem& sys, std::uint64_t seed, double tol);
SuiteReport crossed_suite(const DynSystem& sys, std::uint64_t seed, double tol);
SuiteReport rc_suite(const DynSystem& sys, std::uint64_t seed, double tol);
SuiteReport fell_suite(const DynSystem& sys, std::uint64_t seed, double tol);

// Structured text: one "suite" line, one line per entry, one "overall" line.
void write_report(std::ostream& os, const SuiteReport& r);

}  // namespace cdyn
