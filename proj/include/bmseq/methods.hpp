#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bmseq/poly.hpp"
#include "bmseq/table.hpp"

namespace bmseq {

// The four independent evaluation routes for d_l(m). Each one throws
// std::domain_error outside its stated domain; all of them agree exactly on
// the shared domain (cross_validate asserts this).

// Single-sum closed form. n_closed_form returns the normalized integer
// 4^m d_l(m); d_closed_form the reduced rational.
Int n_closed_form(unsigned ell, unsigned m);
Rat d_closed_form(unsigned ell, unsigned m);

// Jacobi-polynomial form with alpha = m + 1/2, beta = -alpha, evaluated via
// generalized binomials.
Rat d_jacobi(unsigned ell, unsigned m);

// Three-term recurrence in m, iterated upward from seeds d_l(l), d_l(l+1).
// Accepts any m >= l (m == l or l+1 returns the seed unchanged).
Rat d_via_m_recurrence(unsigned ell, unsigned m, const Rat& seed_at_ell,
                       const Rat& seed_at_ell_plus_one);

// Intra-row recurrence: d_{l-2}(m) from d_l(m) and d_{l-1}(m); needs 2 <= l <= m.
Rat d_via_ell_recurrence(const Rat& d_ell, const Rat& d_ell_minus_one, unsigned ell, unsigned m);

// Double-sum expansion of P_m(x); exists as an independent oracle and is
// cost-capped separately in cross_validate.
PolyRational p_double_sum(unsigned m);

struct MethodTiming {
  std::string method;
  long long ms = 0;
};

struct Mismatch {
  std::string method;
  unsigned ell = 0, m = 0;
  Rat got, expected;
};

struct CrossValidationReport {
  unsigned max_m = 0;
  unsigned max_m_double_sum = 0;
  std::vector<MethodTiming> timings;
  std::optional<Mismatch> first_mismatch;
  bool ok() const { return !first_mismatch.has_value(); }
};

// Checks every method against `table` on its full domain (double sum capped
// at max_m_double_sum). Taking the table as input lets tests inject faults.
CrossValidationReport compare_methods(const BMTable& table, unsigned max_m_double_sum);

// Builds the table for max_m, then runs compare_methods.
CrossValidationReport cross_validate(unsigned max_m, unsigned max_m_double_sum,
                                     unsigned threads = 1);

}  // namespace bmseq
