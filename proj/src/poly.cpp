#include "bmseq/poly.hpp"

namespace bmseq {

PolyRational::PolyRational(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

PolyRational PolyRational::constant(const Rat& c) { return PolyRational({c}); }

Rat PolyRational::coeff(std::size_t i) const {
  if (i >= coeffs_.size()) return Rat(0);
  return coeffs_[i];
}

void PolyRational::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyRational& PolyRational::operator+=(const PolyRational& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  strip();
  return *this;
}

PolyRational operator*(const PolyRational& a, const PolyRational& b) {
  if (a.is_zero() || b.is_zero()) return PolyRational();
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return PolyRational(std::move(out));
}

PolyRational PolyRational::scaled(const Rat& c) const {
  std::vector<Rat> out = coeffs_;
  for (auto& x : out) x *= c;
  return PolyRational(std::move(out));
}

}  // namespace bmseq
