#include "bmseq/surd.hpp"

#include <stdexcept>

namespace bmseq {

QuadraticSurd::QuadraticSurd(Rat a, Rat b, Int radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(radicand)) {
  if (sign(d_) < 0) throw std::domain_error("QuadraticSurd: negative radicand");
  canonicalize();
}

void QuadraticSurd::canonicalize() {
  if (sign(b_) == 0 || d_ == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  Int root;
  if (perfect_square(d_, &root)) {
    a_ += b_ * Rat(root);
    b_ = 0;
    d_ = 0;
  }
}

int QuadraticSurd::sign_of() const {
  const int sa = sign(a_);
  const int sb = sign(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against b^2 D; the larger magnitude wins.
  const int c = cmp(a_ * a_, b_ * b_ * Rat(d_));
  if (c == 0) return 0;  // unreachable for non-square D, kept for safety
  return c > 0 ? sa : sb;
}

namespace {

void require_compatible(const QuadraticSurd& x, const QuadraticSurd& y, const char* who) {
  if (!x.is_rational() && !y.is_rational() && x.radicand() != y.radicand())
    throw std::domain_error(std::string(who) + ": incompatible radicands " +
                            x.radicand().get_str() + " and " + y.radicand().get_str());
}

}  // namespace

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& o) {
  require_compatible(*this, o, "QuadraticSurd::operator+");
  a_ += o.a_;
  b_ += o.b_;
  if (d_ == 0) d_ = o.d_;
  canonicalize();
  return *this;
}

QuadraticSurd& QuadraticSurd::operator-=(const QuadraticSurd& o) {
  require_compatible(*this, o, "QuadraticSurd::operator-");
  a_ -= o.a_;
  b_ -= o.b_;
  if (d_ == 0) d_ = o.d_;
  canonicalize();
  return *this;
}

QuadraticSurd& QuadraticSurd::operator*=(const QuadraticSurd& o) {
  require_compatible(*this, o, "QuadraticSurd::operator*");
  const Int d = d_ != 0 ? d_ : o.d_;
  // (a1 + b1 sqrt(D))(a2 + b2 sqrt(D)) = a1 a2 + b1 b2 D + (a1 b2 + a2 b1) sqrt(D)
  Rat new_a = a_ * o.a_ + b_ * o.b_ * Rat(d);
  Rat new_b = a_ * o.b_ + o.a_ * b_;
  a_ = std::move(new_a);
  b_ = std::move(new_b);
  d_ = d;
  canonicalize();
  return *this;
}

std::string QuadraticSurd::str() const {
  if (is_rational()) return rat_str(a_);
  return "(" + rat_str(a_) + ") + (" + rat_str(b_) + ")*sqrt(" + d_.get_str() + ")";
}

int surd_cmp(const QuadraticSurd& s, const QuadraticSurd& t) {
  require_compatible(s, t, "surd_cmp");
  return (s - t).sign_of();
}

int surd_cmp_general(const QuadraticSurd& s, const QuadraticSurd& t) {
  if (s.is_rational() || t.is_rational() || s.radicand() == t.radicand()) return surd_cmp(s, t);
  // sign of X - Y with X = a + b1 sqrt(D1) and Y = b2 sqrt(D2), where the
  // rational parts were folded into X. If the signs of X and Y differ the
  // answer is immediate; otherwise compare X^2 against Y^2 (one radical
  // disappears, the other stays comparable by surd_cmp).
  const QuadraticSurd x(s.rational_part() - t.rational_part(), s.radical_coeff(), s.radicand());
  const QuadraticSurd y(Rat(0), t.radical_coeff(), t.radicand());
  const int sx = x.sign_of();
  const int sy = y.sign_of();
  if (sx != sy) return sx > sy ? +1 : -1;
  if (sx == 0) return 0;
  const int csq = surd_cmp(x.square(), y.square());
  return sx > 0 ? csq : -csq;
}

}  // namespace bmseq
