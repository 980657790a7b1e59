#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bmseq/logprops.hpp"
#include "bmseq/table.hpp"

namespace bmseq {

// Finite-depth verifiers for the open conjectures. Every report carries the
// examined windows (truncation-adjusted) and a disclaimer: these runs are
// evidence on a finite window, never proofs.

enum class ConjectureId { C11_ROWS, C41, C42, C43, C44, C45 };

const char* conjecture_name(ConjectureId id);
std::optional<ConjectureId> parse_conjecture_id(const std::string& name);

struct DepthWindow {
  unsigned depth = 0;
  IndexRange window;
};

struct CounterExample {
  unsigned depth = 0;  // operator-iteration depth (0 for direct checks)
  long index = 0;      // violating logical index
  std::string what;
  Rat lhs, rhs;
};

struct ConjectureReport {
  std::string conjecture;
  std::vector<std::pair<std::string, std::string>> params;
  bool verified = false;  // no counterexample on the examined windows
  long examined = 0;
  std::vector<DepthWindow> windows;  // exact index sets actually checked
  std::vector<CounterExample> counterexamples;
  // Named exact witness values (e.g. the r_l(m) fractions of a single-m run).
  std::vector<std::pair<std::string, std::string>> values;
  std::string disclaimer;
};

// Strict positivity of every L-iterate of the transposed sequence
// {d_l(m)}_{m=l..m_max} up to the given depth, with the origin convention
// a_{-1} = 0 at m = l. Requires m_max >= l + depth + 2.
ConjectureReport check_inf_logconcave(const BMTable& table, unsigned ell, unsigned depth,
                                      unsigned m_max);

// Depth-k nonnegativity of the L-iterates of the full row {d_l(m)}_{l=0..m},
// with zero padding at both ends (the row is a complete finite sequence).
ConjectureReport check_row_inf_logconcave(const BMTable& table, unsigned m, unsigned depth);
ConjectureReport check_rows_inf_logconcave_range(const BMTable& table, unsigned m_lo,
                                                 unsigned m_hi, unsigned depth);

// q_m = d_l(m-1) d_l(m+1) / d_l(m)^2 for m = l+1 .. m_max-1, offset l+1.
Seq ratio_seq(const BMTable& table, unsigned ell, unsigned m_max);

// C42: log-concavity of the ratio sequence (l >= 1).
ConjectureReport check_conj_c42(const BMTable& table, unsigned ell, unsigned m_max);
// C43: extended reverse ultra log-concavity of the ratio sequence (l >= 0);
// the offset k = l+1 comes from the sequence's first index.
ConjectureReport check_conj_c43(const BMTable& table, unsigned ell, unsigned m_max);

// r_l(m) = d_l(m)^3 d_{l-2}(m) / (d_{l-1}(m)^3 d_{l+1}(m)); 2 <= l <= m-1.
Rat r_ratio(const BMTable& table, unsigned ell, unsigned m);

// C44 at a single m: r_l(m) < 1 for 2 <= l <= floor(m/2) and r_l(m) > 1 for
// floor(m/2)+1 <= l <= m-1. The report lists every r_l(m) exactly.
ConjectureReport check_half_split(const BMTable& table, unsigned m);
ConjectureReport check_half_split_range(const BMTable& table, unsigned m_lo, unsigned m_hi);

// C45: log-monotonicity of order k for {d_0(m)} (l = 0) or of the ratio
// sequence R({d_l(m)}) (l >= 1).
ConjectureReport check_log_monotonic_conj(const BMTable& table, unsigned ell, unsigned order,
                                          unsigned m_max);

// Bessel polynomial coefficient row: (n+k)!/(2^k k! (n-k)!), k = 0..n.
// Test fixture for the ultra predicates.
Seq bessel_row(unsigned n);

}  // namespace bmseq
