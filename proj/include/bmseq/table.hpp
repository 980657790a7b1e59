#pragma once

#include <vector>

#include "bmseq/rational.hpp"

namespace bmseq {

// Triangle of normalized entries N_l(m) = 4^m * d_l(m), rows m = 0..max_m.
// The single-sum form shows N_l(m) is a positive integer, so the triangle is
// stored as integers and every recurrence division is checked to be exact.
// Immutable after construction.
class BMTable {
 public:
  // Fills rows 0..max_m with the row recurrence
  //   N_l(m+1) = 2*(2(m+l) N_{l-1}(m) + (4m+2l+3) N_l(m)) / (m+1),
  // boundary N_{-1} = 0. Entries within a row are built concurrently when
  // threads > 1. Throws std::logic_error if a division is inexact.
  static BMTable build(unsigned max_m, unsigned threads = 1);

  // Adopts externally produced rows (cache load, fault-injection tests).
  // Row m must have exactly m+1 entries.
  static BMTable from_rows(std::vector<std::vector<Int>> rows);

  // Copy of the triangle cut down to rows 0..new_max_m.
  BMTable truncated(unsigned new_max_m) const;

  unsigned max_m() const { return static_cast<unsigned>(rows_.size()) - 1; }
  bool covers(unsigned ell, unsigned m) const { return m < rows_.size() && ell <= m; }

  // N_l(m); throws std::out_of_range when asked beyond the triangle.
  const Int& n_entry(unsigned ell, unsigned m) const;
  // d_l(m) = N_l(m) / 4^m as a reduced rational.
  Rat d(unsigned ell, unsigned m) const;

  const std::vector<Int>& row(unsigned m) const;

 private:
  BMTable() = default;
  std::vector<std::vector<Int>> rows_;
};

}  // namespace bmseq
