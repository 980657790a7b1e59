#pragma once

#include <optional>
#include <vector>

#include "bmseq/rational.hpp"

namespace bmseq {

// Finite window of an exact-rational sequence. Logical index i lives at
// values[i - offset]; offset is the index of the first element.
struct Seq {
  long offset = 0;
  std::vector<Rat> values;

  Seq() = default;
  Seq(long offset_, std::vector<Rat> values_);

  long size() const { return static_cast<long>(values.size()); }
  long first_index() const { return offset; }
  long last_index() const { return offset + size() - 1; }
  const Rat& at(long i) const;

  Seq scaled(const Rat& c) const;
};

// Inclusive index interval; empty when lo > hi.
struct IndexRange {
  long lo = 0;
  long hi = -1;
  bool empty() const { return lo > hi; }
  long length() const { return empty() ? 0 : hi - lo + 1; }
  bool operator==(const IndexRange&) const = default;
};

struct Violation {
  long index = 0;
  Rat lhs, rhs;
};

// Result of a predicate check: holds is true iff no violation was found on
// checked_range. "holds" never covers indices outside checked_range.
struct PropertyOutcome {
  bool holds = true;
  std::optional<Violation> first_violation;
  IndexRange checked_range;
};

}  // namespace bmseq
