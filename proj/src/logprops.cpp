#include "bmseq/logprops.hpp"

#include <stdexcept>
#include <string>

namespace bmseq {

namespace {

void require_length(const Seq& s, long n, const char* who) {
  if (s.size() < n)
    throw std::length_error(std::string(who) + ": need at least " + std::to_string(n) +
                            " elements, got " + std::to_string(s.size()));
}

void require_positive(const Seq& s, const char* who) {
  for (long i = s.first_index(); i <= s.last_index(); ++i)
    if (sign(s.at(i)) <= 0)
      throw std::domain_error(std::string(who) + ": positivity violation at index " +
                              std::to_string(i));
}

// Shared three-term scan: cmp(+1) checks a_i^2 >(=) a_{i-1}a_{i+1},
// cmp(-1) the reversed orientation.
PropertyOutcome three_term_scan(const Seq& s, int orientation, bool strict) {
  PropertyOutcome out;
  out.checked_range = {s.first_index() + 1, s.last_index() - 1};
  for (long i = out.checked_range.lo; i <= out.checked_range.hi; ++i) {
    Rat lhs = s.at(i) * s.at(i);
    Rat rhs = s.at(i - 1) * s.at(i + 1);
    const int c = cmp(lhs, rhs) * orientation;
    if (c < 0 || (strict && c == 0)) {
      out.holds = false;
      out.first_violation = Violation{i, std::move(lhs), std::move(rhs)};
      break;
    }
  }
  return out;
}

}  // namespace

Seq op_L(const Seq& s, bool left_boundary) {
  require_length(s, left_boundary ? 2 : 3, "op_L");
  Seq out;
  out.offset = left_boundary ? s.offset : s.offset + 1;
  out.values.reserve(s.size() - (left_boundary ? 1 : 2));
  if (left_boundary) out.values.push_back(s.at(s.first_index()) * s.at(s.first_index()));
  for (long i = s.first_index() + 1; i <= s.last_index() - 1; ++i)
    out.values.push_back(s.at(i) * s.at(i) - s.at(i - 1) * s.at(i + 1));
  return out;
}

Seq op_R(const Seq& s) {
  require_length(s, 2, "op_R");
  Seq out;
  out.offset = s.offset;
  out.values.reserve(s.size() - 1);
  for (long i = s.first_index(); i < s.last_index(); ++i) {
    if (s.at(i) == 0)
      throw std::domain_error("op_R: zero element at index " + std::to_string(i));
    out.values.push_back(s.at(i + 1) / s.at(i));
  }
  return out;
}

PropertyOutcome is_log_concave(const Seq& s, bool strict) {
  require_length(s, 3, "is_log_concave");
  return three_term_scan(s, +1, strict);
}

PropertyOutcome is_log_convex(const Seq& s, bool strict) {
  require_length(s, 3, "is_log_convex");
  return three_term_scan(s, -1, strict);
}

PropertyOutcome is_k_log_concave(const Seq& s, unsigned k, bool left_boundary) {
  if (k == 0) throw std::invalid_argument("is_k_log_concave: depth must be positive");
  const long needed = left_boundary ? static_cast<long>(k) + 2 : 2 * static_cast<long>(k) + 2;
  if (s.size() < needed)
    throw std::length_error("is_k_log_concave: window exhausted, need length >= " +
                            std::to_string(needed) + " for depth " + std::to_string(k));
  PropertyOutcome out;
  Seq cur = s;
  for (unsigned j = 1; j <= k; ++j) {
    cur = op_L(cur, left_boundary);
    out.checked_range = {cur.first_index(), cur.last_index()};
    for (long i = cur.first_index(); i <= cur.last_index(); ++i) {
      if (sign(cur.at(i)) < 0) {
        out.holds = false;
        out.first_violation = Violation{i, cur.at(i), Rat(0)};
        return out;
      }
    }
  }
  return out;
}

PropertyOutcome ultra_log_concave(const Seq& s, unsigned n, UltraMode mode) {
  if (s.offset != 0 || s.size() != static_cast<long>(n) + 1)
    throw std::invalid_argument("ultra_log_concave: sequence must be indexed 0..n");
  PropertyOutcome out;
  out.checked_range = {1, static_cast<long>(n) - 1};
  const int orientation = mode == UltraMode::ultra ? +1 : -1;
  for (long i = 1; i + 1 <= static_cast<long>(n); ++i) {
    Rat lhs = s.at(i) * s.at(i);
    lhs /= Rat(binomial(n, i) * binomial(n, i));
    Rat rhs = s.at(i - 1) * s.at(i + 1);
    rhs /= Rat(binomial(n, i - 1) * binomial(n, i + 1));
    if (cmp(lhs, rhs) * orientation <= 0) {
      out.holds = false;
      out.first_violation = Violation{i, std::move(lhs), std::move(rhs)};
      break;
    }
  }
  return out;
}

PropertyOutcome extended_ultra(const Seq& s, long k, UltraMode mode) {
  if (k < 0) throw std::invalid_argument("extended_ultra: offset k must be nonnegative");
  if (s.offset != k)
    throw std::invalid_argument("extended_ultra: offset mismatch, sequence starts at " +
                                std::to_string(s.offset) + " but k = " + std::to_string(k));
  require_length(s, 3, "extended_ultra");
  Seq scaled;
  scaled.offset = s.offset;
  scaled.values.reserve(s.size());
  for (long i = s.first_index(); i <= s.last_index(); ++i)
    scaled.values.push_back(s.at(i) / Rat(binomial(i, k)));
  // ultra: strict log-concavity of a_i/C(i,k); reverse: strict log-convexity.
  return three_term_scan(scaled, mode == UltraMode::ultra ? +1 : -1, true);
}

PropertyOutcome log_monotonic_order(const Seq& s, unsigned k) {
  if (k == 0) throw std::invalid_argument("log_monotonic_order: order must be positive");
  require_positive(s, "log_monotonic_order");
  if (s.size() < static_cast<long>(k) + 2)
    throw std::length_error("log_monotonic_order: window exhausted, need length >= " +
                            std::to_string(k + 2) + " for order " + std::to_string(k));
  Seq cur = s;
  PropertyOutcome out;
  for (unsigned j = 0; j < k; ++j) {
    const bool want_convex = (j % 2 == 0);
    PropertyOutcome level =
        want_convex ? is_log_convex(cur, false) : is_log_concave(cur, false);
    out.checked_range = level.checked_range;
    if (!level.holds) {
      out.holds = false;
      out.first_violation = level.first_violation;
      return out;
    }
    if (j + 1 < k) cur = op_R(cur);
  }
  return out;
}

PropertyOutcome briggs_check(const Seq& s) {
  require_length(s, 4, "briggs_check");
  PropertyOutcome out;
  out.checked_range = {s.first_index() + 1, s.last_index() - 2};
  for (long i = out.checked_range.lo; i <= out.checked_range.hi; ++i) {
    Rat lhs = s.at(i) * s.at(i) * (s.at(i) * s.at(i) - s.at(i - 1) * s.at(i + 1));
    Rat rhs = s.at(i - 1) * s.at(i - 1) * (s.at(i + 1) * s.at(i + 1) - s.at(i) * s.at(i + 2));
    if (cmp(lhs, rhs) <= 0) {
      out.holds = false;
      out.first_violation = Violation{i, std::move(lhs), std::move(rhs)};
      break;
    }
  }
  return out;
}

PropertyOutcome nth_root_log_convex(const Seq& s, bool strict) {
  if (s.offset != 1)
    throw std::invalid_argument("nth_root_log_convex: sequence must be indexed from n = 1");
  require_positive(s, "nth_root_log_convex");
  require_length(s, 3, "nth_root_log_convex");
  PropertyOutcome out;
  out.checked_range = {2, s.last_index() - 1};
  for (long n = out.checked_range.lo; n <= out.checked_range.hi; ++n) {
    const unsigned long un = static_cast<unsigned long>(n);
    // a_n^{2(n-1)(n+1)} vs a_{n-1}^{n(n+1)} a_{n+1}^{n(n-1)}
    Rat lhs = rat_pow(s.at(n), 2 * (un - 1) * (un + 1));
    Rat rhs = rat_pow(s.at(n - 1), un * (un + 1)) * rat_pow(s.at(n + 1), un * (un - 1));
    const int c = cmp(lhs, rhs);
    if (c > 0 || (strict && c == 0)) {
      out.holds = false;
      out.first_violation = Violation{n, std::move(lhs), std::move(rhs)};
      break;
    }
  }
  return out;
}

PropertyOutcome higher_turan_check(const Seq& s) {
  require_length(s, 4, "higher_turan_check");
  PropertyOutcome out;
  out.checked_range = {s.first_index() + 1, s.last_index() - 2};
  for (long n = out.checked_range.lo; n <= out.checked_range.hi; ++n) {
    Rat t1 = s.at(n) * s.at(n) - s.at(n - 1) * s.at(n + 1);
    Rat t2 = s.at(n + 1) * s.at(n + 1) - s.at(n) * s.at(n + 2);
    Rat lhs = 4 * t1 * t2;
    Rat mixed = s.at(n) * s.at(n + 1) - s.at(n - 1) * s.at(n + 2);
    Rat rhs = mixed * mixed;
    if (cmp(lhs, rhs) < 0) {
      out.holds = false;
      out.first_violation = Violation{n, std::move(lhs), std::move(rhs)};
      break;
    }
  }
  return out;
}

}  // namespace bmseq
