#pragma once

#include <cstddef>
#include <vector>

#include "bmseq/rational.hpp"

namespace bmseq {

// Dense univariate polynomial over Rat; coeffs()[i] is the x^i coefficient.
// Trailing zeros are stripped, so the zero polynomial has an empty
// coefficient list and degree -1.
class PolyRational {
 public:
  PolyRational() = default;
  explicit PolyRational(std::vector<Rat> coeffs);

  static PolyRational constant(const Rat& c);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rat coeff(std::size_t i) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  PolyRational& operator+=(const PolyRational& other);
  friend PolyRational operator+(PolyRational a, const PolyRational& b) {
    a += b;
    return a;
  }
  friend PolyRational operator*(const PolyRational& a, const PolyRational& b);
  PolyRational scaled(const Rat& c) const;

  bool operator==(const PolyRational& other) const = default;

 private:
  void strip();
  std::vector<Rat> coeffs_;
};

}  // namespace bmseq
