#include "bmseq/conjectures.hpp"

#include <stdexcept>

namespace bmseq {

namespace {

constexpr const char* kDisclaimer =
    "finite verification on the stated windows; evidence, not proof";

// Counterexample lists are capped per run; the first hits matter, a flood
// of negatives (e.g. L^5 at l=2) does not need to be spelled out.
constexpr std::size_t kMaxCounterExamples = 16;

std::string istr(long v) { return std::to_string(v); }

Seq transposed_seq(const BMTable& table, unsigned ell, unsigned m_max) {
  if (m_max < ell || m_max > table.max_m())
    throw std::domain_error("transposed_seq: window [l, m_max] invalid or uncovered");
  Seq s;
  s.offset = static_cast<long>(ell);
  s.values.reserve(m_max - ell + 1);
  for (unsigned m = ell; m <= m_max; ++m) s.values.push_back(table.d(ell, m));
  return s;
}

}  // namespace

const char* conjecture_name(ConjectureId id) {
  switch (id) {
    case ConjectureId::C11_ROWS: return "c11";
    case ConjectureId::C41: return "c41";
    case ConjectureId::C42: return "c42";
    case ConjectureId::C43: return "c43";
    case ConjectureId::C44: return "c44";
    case ConjectureId::C45: return "c45";
  }
  return "?";
}

std::optional<ConjectureId> parse_conjecture_id(const std::string& name) {
  for (ConjectureId id : {ConjectureId::C11_ROWS, ConjectureId::C41, ConjectureId::C42,
                          ConjectureId::C43, ConjectureId::C44, ConjectureId::C45})
    if (name == conjecture_name(id)) return id;
  return std::nullopt;
}

ConjectureReport check_inf_logconcave(const BMTable& table, unsigned ell, unsigned depth,
                                      unsigned m_max) {
  if (depth == 0) throw std::invalid_argument("check_inf_logconcave: depth must be positive");
  if (m_max < ell + depth + 2)
    throw std::length_error("check_inf_logconcave: window exhausted, need m_max >= l+depth+2");
  ConjectureReport report;
  report.conjecture = "c41";
  report.params = {{"l", istr(ell)}, {"depth", istr(depth)}, {"m_max", istr(m_max)}};
  report.disclaimer = kDisclaimer;
  report.verified = true;

  Seq cur = transposed_seq(table, ell, m_max);
  for (unsigned j = 1; j <= depth; ++j) {
    cur = op_L(cur, /*left_boundary=*/true);
    report.windows.push_back({j, {cur.first_index(), cur.last_index()}});
    bool depth_clean = true;
    for (long i = cur.first_index(); i <= cur.last_index(); ++i) {
      ++report.examined;
      if (sign(cur.at(i)) <= 0) {
        depth_clean = false;
        report.verified = false;
        if (report.counterexamples.size() < kMaxCounterExamples)
          report.counterexamples.push_back(
              {j, i, "L^" + istr(j) + " entry not strictly positive", cur.at(i), Rat(0)});
      }
    }
    if (!depth_clean) break;  // deeper iterates of a failed level prove nothing
  }
  return report;
}

ConjectureReport check_row_inf_logconcave(const BMTable& table, unsigned m, unsigned depth) {
  if (m < 2) throw std::domain_error("check_row_inf_logconcave: need m >= 2");
  if (depth == 0)
    throw std::invalid_argument("check_row_inf_logconcave: depth must be positive");
  ConjectureReport report;
  report.conjecture = "c11";
  report.params = {{"m", istr(m)}, {"depth", istr(depth)}};
  report.disclaimer = kDisclaimer;
  report.verified = true;

  // The row is a complete finite sequence: a_{-1} = 0 comes from the
  // left-boundary mode and a_{m+1} = ... = 0 from explicit zero padding,
  // which survives exactly `depth` applications.
  Seq cur;
  cur.offset = 0;
  cur.values.reserve(m + 1 + depth);
  for (unsigned ell = 0; ell <= m; ++ell) cur.values.push_back(Rat(table.n_entry(ell, m)));
  for (unsigned j = 0; j < depth; ++j) cur.values.push_back(Rat(0));

  for (unsigned j = 1; j <= depth; ++j) {
    cur = op_L(cur, /*left_boundary=*/true);
    report.windows.push_back({j, {cur.first_index(), cur.last_index()}});
    bool depth_clean = true;
    for (long i = cur.first_index(); i <= cur.last_index(); ++i) {
      ++report.examined;
      if (sign(cur.at(i)) < 0) {
        depth_clean = false;
        report.verified = false;
        if (report.counterexamples.size() < kMaxCounterExamples)
          report.counterexamples.push_back(
              {j, i, "row L^" + istr(j) + " entry negative (m=" + istr(m) + ")", cur.at(i),
               Rat(0)});
      }
    }
    if (!depth_clean) break;
  }
  return report;
}

ConjectureReport check_rows_inf_logconcave_range(const BMTable& table, unsigned m_lo,
                                                 unsigned m_hi, unsigned depth) {
  if (m_hi < m_lo) throw std::domain_error("check_rows_inf_logconcave_range: empty window");
  ConjectureReport merged;
  merged.conjecture = "c11";
  merged.params = {{"m_lo", istr(m_lo)}, {"m_hi", istr(m_hi)}, {"depth", istr(depth)}};
  merged.disclaimer = kDisclaimer;
  merged.verified = true;
  for (unsigned m = m_lo; m <= m_hi; ++m) {
    ConjectureReport one = check_row_inf_logconcave(table, m, depth);
    merged.examined += one.examined;
    if (!one.verified) merged.verified = false;
    for (auto& ce : one.counterexamples)
      if (merged.counterexamples.size() < kMaxCounterExamples)
        merged.counterexamples.push_back(std::move(ce));
  }
  return merged;
}

Seq ratio_seq(const BMTable& table, unsigned ell, unsigned m_max) {
  if (m_max < ell + 2) throw std::domain_error("ratio_seq: need m_max >= l + 2");
  Seq s;
  s.offset = static_cast<long>(ell) + 1;
  s.values.reserve(m_max - ell - 1);
  for (unsigned m = ell + 1; m + 1 <= m_max; ++m) {
    const Int& mid = table.n_entry(ell, m);
    s.values.push_back(make_rat(table.n_entry(ell, m - 1) * table.n_entry(ell, m + 1), mid * mid));
  }
  return s;
}

namespace {

ConjectureReport outcome_report(const char* conj, unsigned ell, unsigned m_max,
                                const PropertyOutcome& outcome, const std::string& what) {
  ConjectureReport report;
  report.conjecture = conj;
  report.params = {{"l", istr(ell)}, {"m_max", istr(m_max)}};
  report.disclaimer = kDisclaimer;
  report.verified = outcome.holds;
  report.examined = outcome.checked_range.length();
  report.windows.push_back({0, outcome.checked_range});
  if (outcome.first_violation)
    report.counterexamples.push_back({0, outcome.first_violation->index, what,
                                      outcome.first_violation->lhs,
                                      outcome.first_violation->rhs});
  return report;
}

}  // namespace

ConjectureReport check_conj_c42(const BMTable& table, unsigned ell, unsigned m_max) {
  if (ell < 1) throw std::domain_error("c42: conjecture states l >= 1");
  const Seq q = ratio_seq(table, ell, m_max);
  return outcome_report("c42", ell, m_max, is_log_concave(q, false),
                        "ratio sequence not log-concave");
}

ConjectureReport check_conj_c43(const BMTable& table, unsigned ell, unsigned m_max) {
  const Seq q = ratio_seq(table, ell, m_max);
  // The ratio sequence starts at index l+1, so the extended-ultra offset is
  // k = l+1 (recorded assumption; the statement does not name k).
  ConjectureReport report =
      outcome_report("c43", ell, m_max,
                     extended_ultra(q, static_cast<long>(ell) + 1, UltraMode::reverse),
                     "ratio sequence not extended reverse ultra log-concave");
  report.params.push_back({"extended_ultra_offset_k", istr(ell + 1)});
  return report;
}

Rat r_ratio(const BMTable& table, unsigned ell, unsigned m) {
  if (ell < 2 || ell + 1 > m)
    throw std::domain_error("r_ratio: need 2 <= l <= m-1, got l=" + istr(ell) + " m=" + istr(m));
  const Int& a = table.n_entry(ell, m);
  const Int& b = table.n_entry(ell - 1, m);
  return make_rat(a * a * a * table.n_entry(ell - 2, m), b * b * b * table.n_entry(ell + 1, m));
}

ConjectureReport check_half_split(const BMTable& table, unsigned m) {
  if (m < 3) throw std::domain_error("check_half_split: need m >= 3");
  ConjectureReport report;
  report.conjecture = "c44";
  report.params = {{"m", istr(m)}};
  report.disclaimer = kDisclaimer;
  report.verified = true;
  const unsigned half = m / 2;
  for (unsigned ell = 2; ell + 1 <= m; ++ell) {
    const Rat r = r_ratio(table, ell, m);
    ++report.examined;
    report.values.emplace_back("r_" + istr(ell) + "(" + istr(m) + ")", rat_str(r));
    const bool want_less = ell <= half;
    const int c = cmp(r, Rat(1));
    if ((want_less && c >= 0) || (!want_less && c <= 0)) {
      report.verified = false;
      if (report.counterexamples.size() < kMaxCounterExamples)
        report.counterexamples.push_back(
            {0, static_cast<long>(ell),
             want_less ? "expected r_l(m) < 1 on the low half" : "expected r_l(m) > 1 on the high half",
             r, Rat(1)});
    }
  }
  report.windows.push_back({0, {2, static_cast<long>(m) - 1}});
  return report;
}

ConjectureReport check_half_split_range(const BMTable& table, unsigned m_lo, unsigned m_hi) {
  if (m_hi < m_lo) throw std::domain_error("check_half_split_range: empty window");
  ConjectureReport merged;
  merged.conjecture = "c44";
  merged.params = {{"m_lo", istr(m_lo)}, {"m_hi", istr(m_hi)}};
  merged.disclaimer = kDisclaimer;
  merged.verified = true;
  for (unsigned m = m_lo; m <= m_hi; ++m) {
    ConjectureReport one = check_half_split(table, m);
    merged.examined += one.examined;
    if (!one.verified) merged.verified = false;
    for (auto& ce : one.counterexamples)
      if (merged.counterexamples.size() < kMaxCounterExamples) {
        ce.what += " (m=" + istr(m) + ")";
        merged.counterexamples.push_back(std::move(ce));
      }
  }
  return merged;
}

ConjectureReport check_log_monotonic_conj(const BMTable& table, unsigned ell, unsigned order,
                                          unsigned m_max) {
  Seq s = transposed_seq(table, ell, m_max);
  if (ell >= 1) s = op_R(s);  // the conjecture for l >= 1 is about the ratio sequence
  PropertyOutcome outcome = log_monotonic_order(s, order);
  ConjectureReport report = outcome_report("c45", ell, m_max, outcome,
                                           "R-iterate with the wrong log-behavior");
  report.params.push_back({"order", istr(order)});
  return report;
}

Seq bessel_row(unsigned n) {
  Seq s;
  s.offset = 0;
  s.values.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k)
    s.values.push_back(make_rat(factorial(n + k), pow2(k) * factorial(k) * factorial(n - k)));
  return s;
}

}  // namespace bmseq
