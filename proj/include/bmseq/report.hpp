#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bmseq/bounds.hpp"
#include "bmseq/conjectures.hpp"
#include "bmseq/identities.hpp"
#include "bmseq/methods.hpp"

namespace bmseq {

enum class ReportFormat { text, csv, json };
std::optional<ReportFormat> parse_format(const std::string& name);

// Uniform emission layer. Rationals are serialized as "num/den" strings and
// surds as "(a) + (b)*sqrt(D)"; content is deterministic for fixed inputs
// (ordered by (l, m)), runtime_ms being the only run-dependent field.
struct ViolationRow {
  long l = 0, m = 0;
  std::string lhs, rhs;
  std::string note;  // optional qualifier (e.g. the method or part name)
};

struct CounterRow {
  long depth = 0;
  long index = 0;
  std::string lhs, rhs;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> params;
  long examined = 0;
  std::vector<ViolationRow> violations;
  std::vector<CounterRow> counterexamples;
  std::optional<std::pair<long, long>> min_margin;  // (l, m)
  std::optional<bool> verified;
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<std::pair<std::string, std::string>> notes;
  long long runtime_ms = 0;

  bool clean() const { return violations.empty() && counterexamples.empty(); }
};

SuiteReport to_suite_report(const SweepReport& sweep);
SuiteReport to_suite_report(const ConjectureReport& report);
SuiteReport to_suite_report(const PolyIdentityResult& result);
SuiteReport to_suite_report(const SurdIdentityResult& result);
SuiteReport to_suite_report(const ScanResult& result);
SuiteReport to_suite_report(const CrossValidationReport& report);

std::string render(const SuiteReport& report, ReportFormat format);

}  // namespace bmseq
