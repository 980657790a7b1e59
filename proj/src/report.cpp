#include "bmseq/report.hpp"

#include <json.hpp>
#include <sstream>

namespace bmseq {

std::optional<ReportFormat> parse_format(const std::string& name) {
  if (name == "text") return ReportFormat::text;
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  return std::nullopt;
}

SuiteReport to_suite_report(const SweepReport& sweep) {
  SuiteReport out;
  out.suite = sweep.suite;
  out.params = {{"max_m", std::to_string(sweep.max_m)}};
  out.examined = sweep.examined;
  out.verified = sweep.violations.empty();
  for (const auto& v : sweep.violations)
    out.violations.push_back({v.ell, v.m, v.lhs.str(), v.rhs.str(), ""});
  if (sweep.min_margin) out.min_margin = {{sweep.min_margin->ell, sweep.min_margin->m}};
  return out;
}

SuiteReport to_suite_report(const ConjectureReport& report) {
  SuiteReport out;
  out.suite = "conjecture:" + report.conjecture;
  out.params = report.params;
  out.examined = report.examined;
  out.verified = report.verified;
  for (const auto& ce : report.counterexamples)
    out.counterexamples.push_back({static_cast<long>(ce.depth), ce.index, rat_str(ce.lhs),
                                   rat_str(ce.rhs), ce.what});
  for (const auto& w : report.windows)
    out.notes.emplace_back("window_depth_" + std::to_string(w.depth),
                           "[" + std::to_string(w.window.lo) + "," +
                               std::to_string(w.window.hi) + "]");
  out.values = report.values;
  out.notes.emplace_back("disclaimer", report.disclaimer);
  return out;
}

SuiteReport to_suite_report(const PolyIdentityResult& result) {
  SuiteReport out;
  out.suite = "identity:" + result.id;
  out.params = {{"m_points", std::to_string(result.m_points)},
                {"l_points", std::to_string(result.l_points)}};
  out.examined = static_cast<long>(result.m_points) * result.l_points;
  out.verified = result.pass;
  if (result.first_difference)
    out.violations.push_back({result.first_difference->ell, result.first_difference->m,
                              result.lhs_at_difference.get_str(),
                              result.rhs_at_difference.get_str(), "first differing grid point"});
  out.notes.emplace_back("certificate",
                         "grid exceeds the degree bound in each variable; exact identity");
  return out;
}

SuiteReport to_suite_report(const SurdIdentityResult& result) {
  SuiteReport out;
  out.suite = "identity:" + result.id;
  out.examined = result.points_checked;
  out.verified = result.pass;
  if (result.first_failure)
    out.violations.push_back({result.first_failure->ell, result.first_failure->m,
                              result.lhs_at_failure, result.rhs_at_failure,
                              "first failing grid point"});
  out.notes.emplace_back("kind", "single-radical identity checked pointwise on the grid");
  return out;
}

SuiteReport to_suite_report(const ScanResult& result) {
  SuiteReport out;
  out.suite = "claim:" + result.id;
  out.examined = result.examined;
  out.verified = result.pass;
  for (const auto& v : result.violations)
    out.violations.push_back({v.ell, v.m, v.value, "0", v.part});
  out.notes.emplace_back("scanned_domain", result.scanned_domain);
  return out;
}

SuiteReport to_suite_report(const CrossValidationReport& report) {
  SuiteReport out;
  out.suite = "cross-validate";
  out.params = {{"max_m", std::to_string(report.max_m)},
                {"max_m_double_sum", std::to_string(report.max_m_double_sum)}};
  out.verified = report.ok();
  if (report.first_mismatch) {
    const auto& mm = *report.first_mismatch;
    out.violations.push_back({static_cast<long>(mm.ell), static_cast<long>(mm.m),
                              rat_str(mm.got), rat_str(mm.expected), mm.method});
  }
  for (const auto& t : report.timings)
    out.values.emplace_back("ms_" + t.method, std::to_string(t.ms));
  return out;
}

namespace {

nlohmann::ordered_json to_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["examined"] = r.examined;
  nlohmann::ordered_json viols = nlohmann::ordered_json::array();
  for (const auto& v : r.violations) {
    nlohmann::ordered_json e;
    e["l"] = v.l;
    e["m"] = v.m;
    e["lhs"] = v.lhs;
    e["rhs"] = v.rhs;
    if (!v.note.empty()) e["note"] = v.note;
    viols.push_back(e);
  }
  j["violations"] = viols;
  if (!r.counterexamples.empty()) {
    nlohmann::ordered_json ces = nlohmann::ordered_json::array();
    for (const auto& c : r.counterexamples) {
      nlohmann::ordered_json e;
      e["depth"] = c.depth;
      e["index"] = c.index;
      e["lhs"] = c.lhs;
      e["rhs"] = c.rhs;
      if (!c.note.empty()) e["note"] = c.note;
      ces.push_back(e);
    }
    j["counterexamples"] = ces;
  }
  if (r.min_margin)
    j["min_margin"] = {{"l", r.min_margin->first}, {"m", r.min_margin->second}};
  else
    j["min_margin"] = nullptr;
  if (r.verified) j["verified"] = *r.verified;
  if (!r.values.empty()) {
    nlohmann::ordered_json vals = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.values) vals[k] = v;
    j["values"] = vals;
  }
  for (const auto& [k, v] : r.notes) j[k] = v;
  j["runtime_ms"] = r.runtime_ms;
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string render(const SuiteReport& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::json:
      return to_json(r).dump(2) + "\n";
    case ReportFormat::csv: {
      std::ostringstream os;
      os << "kind,l,m,depth,index,lhs,rhs,note\n";
      for (const auto& v : r.violations)
        os << "violation," << v.l << ',' << v.m << ",,," << csv_escape(v.lhs) << ','
           << csv_escape(v.rhs) << ',' << csv_escape(v.note) << '\n';
      for (const auto& c : r.counterexamples)
        os << "counterexample,,," << c.depth << ',' << c.index << ',' << csv_escape(c.lhs) << ','
           << csv_escape(c.rhs) << ',' << csv_escape(c.note) << '\n';
      for (const auto& [k, v] : r.values)
        os << "value,,,,," << csv_escape(k) << ',' << csv_escape(v) << ",\n";
      return os.str();
    }
    case ReportFormat::text: {
      std::ostringstream os;
      os << "suite: " << r.suite << '\n';
      for (const auto& [k, v] : r.params) os << "param " << k << ": " << v << '\n';
      os << "examined: " << r.examined << '\n';
      if (r.verified) os << "verified: " << (*r.verified ? "yes" : "NO") << '\n';
      os << "violations: " << r.violations.size() << '\n';
      for (const auto& v : r.violations) {
        os << "  l=" << v.l << " m=" << v.m << " lhs=" << v.lhs << " rhs=" << v.rhs;
        if (!v.note.empty()) os << "  (" << v.note << ")";
        os << '\n';
      }
      if (!r.counterexamples.empty()) {
        os << "counterexamples: " << r.counterexamples.size() << '\n';
        for (const auto& c : r.counterexamples) {
          os << "  depth=" << c.depth << " index=" << c.index << " lhs=" << c.lhs
             << " rhs=" << c.rhs;
          if (!c.note.empty()) os << "  (" << c.note << ")";
          os << '\n';
        }
      }
      if (r.min_margin)
        os << "min_margin: l=" << r.min_margin->first << " m=" << r.min_margin->second << '\n';
      for (const auto& [k, v] : r.values) os << "value " << k << " = " << v << '\n';
      for (const auto& [k, v] : r.notes) os << k << ": " << v << '\n';
      os << "runtime_ms: " << r.runtime_ms << '\n';
      return os.str();
    }
  }
  return {};
}

}  // namespace bmseq
