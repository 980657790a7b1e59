#pragma once

#include "bmseq/seq.hpp"

namespace bmseq {

enum class UltraMode { ultra, reverse };

// L operator: b_i = a_i^2 - a_{i-1} a_{i+1}. When left_boundary is true the
// window starts at the sequence's true origin and a_{-1} = 0 supplies the
// first entry; otherwise only interior indices are produced. The rightmost
// input element has no successor and is always dropped, so callers working
// on windows cut from infinite sequences never see entries that depend on
// unavailable data.
Seq op_L(const Seq& s, bool left_boundary);

// R operator: b_i = a_{i+1} / a_i; offset preserved, length shrinks by one.
// Throws std::domain_error naming the index of a zero element.
Seq op_R(const Seq& s);

PropertyOutcome is_log_concave(const Seq& s, bool strict);
PropertyOutcome is_log_convex(const Seq& s, bool strict);

// k-log-concavity: every L-iterate up to depth k is nonnegative on its valid
// window (the window loses one element per application). checked_range
// reports the window of the deepest iterate.
PropertyOutcome is_k_log_concave(const Seq& s, unsigned k, bool left_boundary);

// Ultra log-concavity of order n for a row indexed 0..n: compares
// a_i^2/C(n,i)^2 against a_{i-1}a_{i+1}/(C(n,i-1)C(n,i+1)), strictly, with
// the orientation given by mode.
PropertyOutcome ultra_log_concave(const Seq& s, unsigned n, UltraMode mode);

// Extended ultra log-concavity with offset k: strict log-concavity (ultra)
// or strict log-convexity (reverse) of a_i / C(i,k) over i >= k. Requires
// s.offset == k.
PropertyOutcome extended_ultra(const Seq& s, long k, UltraMode mode);

// Log-monotonicity of order k: R^j(s) is log-convex for even j and
// log-concave for odd j, j = 0..k-1 (non-strict). All values must be
// positive.
PropertyOutcome log_monotonic_order(const Seq& s, unsigned k);

// Briggs inequality: a_k^2 (a_k^2 - a_{k-1}a_{k+1}) > a_{k-1}^2 (a_{k+1}^2 - a_k a_{k+2}).
PropertyOutcome briggs_check(const Seq& s);

// Log-convexity of a_n^{1/n} for a sequence indexed from n = 1, checked in
// the cross-multiplied integer-exponent form
//   a_n^{2(n-1)(n+1)} <= a_{n-1}^{n(n+1)} a_{n+1}^{n(n-1)}.
PropertyOutcome nth_root_log_convex(const Seq& s, bool strict);

// Higher-order Turan inequality in the standard quartic form
//   4(a_n^2 - a_{n-1}a_{n+1})(a_{n+1}^2 - a_n a_{n+2}) >= (a_n a_{n+1} - a_{n-1}a_{n+2})^2.
// The source material cites the property without printing the formula; this
// form is the standard one from the literature.
PropertyOutcome higher_turan_check(const Seq& s);

}  // namespace bmseq
