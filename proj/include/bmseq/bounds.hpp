#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bmseq/surd.hpp"
#include "bmseq/table.hpp"

namespace bmseq {

// Closed-form bound machinery. Every evaluator reads its polynomial from
// the shared registry, so the same object backs the bound checks and the
// identity certificates.

// Discriminant of the ratio quadratic; domain l >= 1, m >= l+1.
Int delta1_value(long ell, long m);

// W(l, m) = (m(2m+1)(2l+3) - sqrt(delta1)) / (4m(l^2+l)); same domain.
QuadraticSurd w_value(long ell, long m);

// f_l(m); a total function.
Int f_value(long ell, long m);

// lambda_l(m) and U(l, m); domain l >= 1, m >= l+1. When lambda is a
// perfect square the surd canonicalizes to a rational.
std::pair<Int, QuadraticSurd> lambda_and_u(long ell, long m);

struct QuadRoots {
  QuadraticSurd x1, x2;
};
// The two zeros of the ratio quadratic; x1 coincides with W.
QuadRoots quad_roots(long ell, long m);

// Larger root of the ratio-in-m quadratic; throws std::domain_error with a
// negative-radicand message when f_l(m) < 0.
QuadraticSurd y_root(long ell, long m);

// Consecutive integers (t, t+1) with f_l(t) >= 0 > f_l(t+1), scanning up
// from l+1 (the start is valid because f_l(l+1) > 0). Hard cap m <= 10^6
// guards against implementation bugs.
std::pair<long, long> isolate_r2(long ell);

// Exact gaps between the paired bounds: D1 for the in-row pair, D2 for the
// transposed pair. Domain l >= 1, m >= l+1.
std::pair<Rat, Rat> gap_values(long ell, long m);

enum class BoundId {
  UB_TRANSPOSED,
  LB_TRANSPOSED,
  COR_M2,
  PROP_CHAIN,
  W_LOWER,
  CHEN_XIA_UB,
  CHEN_GU_UB,
  CHEN_GU_LB,
  U_LOWER,
  INEQ_110,
};

struct BoundSpec {
  BoundId id;
  std::string name;         // CLI suite id, e.g. "ub-transposed"
  std::string description;  // one-line statement of the inequality
  long ell_min;
  bool needs_next_row;  // check at (l, m) reads table row m+1
  bool in_domain(long ell, long m) const { return ell >= ell_min && m >= ell + 1; }
};

const std::vector<BoundSpec>& bound_specs();
const BoundSpec& bound_spec(BoundId id);
const BoundSpec* find_bound_spec(const std::string& name);

struct CheckRecord {
  long ell = 0, m = 0;
  QuadraticSurd lhs, rhs;
  bool holds = false;
  int margin_sign = 0;
  // Oriented so that positive means the strict inequality is satisfied.
  QuadraticSurd margin;
};

// Evaluates one inequality exactly. Throws std::domain_error outside the
// spec domain and std::out_of_range when the table does not cover the
// needed entries.
CheckRecord check_inequality(BoundId id, long ell, long m, const BMTable& table);

struct SweepReport {
  BoundId id{};
  std::string suite;
  long max_m = 0;
  long examined = 0;
  std::vector<CheckRecord> violations;
  std::optional<CheckRecord> min_margin;
};

// Runs check_inequality over the suite's whole domain with m <= max_m.
// Partitioned by l across threads; the merged result is deterministic and
// ordered by (l, m).
SweepReport sweep(BoundId id, long max_m, const BMTable& table, unsigned threads = 1);

}  // namespace bmseq
