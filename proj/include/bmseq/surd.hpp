#pragma once

#include <string>

#include "bmseq/rational.hpp"

namespace bmseq {

// Exact value a + b*sqrt(D) with rational a, b and integer radicand D >= 0.
// Canonical form: b == 0 implies D == 0, and perfect-square radicands are
// folded into the rational part (detected by exact integer square root).
// After canonicalization a nonzero b guarantees D is a non-square >= 2, so
// sign and comparison are decided by case analysis and squaring; no
// floating point is involved anywhere.
class QuadraticSurd {
 public:
  QuadraticSurd() : a_(0), b_(0), d_(0) {}
  QuadraticSurd(Rat a) : a_(std::move(a)), b_(0), d_(0) {}  // NOLINT: implicit by design
  QuadraticSurd(Rat a, Rat b, Int radicand);

  static QuadraticSurd sqrt_of(Int radicand) { return QuadraticSurd(Rat(0), Rat(1), std::move(radicand)); }

  const Rat& rational_part() const { return a_; }
  const Rat& radical_coeff() const { return b_; }
  const Int& radicand() const { return d_; }
  bool is_rational() const { return sign(b_) == 0; }

  int sign_of() const;

  // Field operations inside Q(sqrt(D)); operands must be rational or share
  // the radicand (throws std::domain_error otherwise).
  QuadraticSurd& operator+=(const QuadraticSurd& o);
  QuadraticSurd& operator-=(const QuadraticSurd& o);
  QuadraticSurd& operator*=(const QuadraticSurd& o);
  friend QuadraticSurd operator+(QuadraticSurd x, const QuadraticSurd& y) { return x += y; }
  friend QuadraticSurd operator-(QuadraticSurd x, const QuadraticSurd& y) { return x -= y; }
  friend QuadraticSurd operator*(QuadraticSurd x, const QuadraticSurd& y) { return x *= y; }
  friend QuadraticSurd operator-(QuadraticSurd x) {
    x.a_ = -x.a_;
    x.b_ = -x.b_;
    return x;
  }
  QuadraticSurd square() const { return *this * *this; }

  bool operator==(const QuadraticSurd& o) const {
    return a_ == o.a_ && b_ == o.b_ && d_ == o.d_;
  }

  // "(a) + (b)*sqrt(D)" with a, b in num/den form; plain "num/den" when
  // the value is rational.
  std::string str() const;

 private:
  Rat a_, b_;
  Int d_;
  void canonicalize();
};

// Exact three-way comparison. Operands must share the radicand or be
// rational; distinct nonzero radicands raise std::domain_error.
int surd_cmp(const QuadraticSurd& s, const QuadraticSurd& t);

// Exact three-way comparison for arbitrary radicands, via nested squaring.
// Used where values from different (l, m) cells must be ordered (min-margin
// tracking); the public surd_cmp contract above stays narrow on purpose.
int surd_cmp_general(const QuadraticSurd& s, const QuadraticSurd& t);

}  // namespace bmseq
