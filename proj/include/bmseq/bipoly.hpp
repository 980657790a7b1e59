#pragma once

#include <map>
#include <string>
#include <utility>

#include "bmseq/rational.hpp"

namespace bmseq {

// Sparse bivariate polynomial in (m, l) with arbitrary-precision integer
// coefficients. Zero coefficients are never stored.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(long c) { add_term(0, 0, Int(c)); }  // NOLINT: implicit constants read naturally
  BiPoly(const Int& c) { add_term(0, 0, c); }  // NOLINT

  static BiPoly var_m() {
    BiPoly p;
    p.add_term(1, 0, Int(1));
    return p;
  }
  static BiPoly var_l() {
    BiPoly p;
    p.add_term(0, 1, Int(1));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  int deg_m() const;
  int deg_l() const;

  Int eval(const Int& m, const Int& l) const;

  // Substitutes the given polynomials for the variables.
  BiPoly compose(const BiPoly& m_rep, const BiPoly& l_rep) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly x, const BiPoly& y) { return x += y; }
  friend BiPoly operator-(BiPoly x, const BiPoly& y) { return x -= y; }
  friend BiPoly operator*(const BiPoly& x, const BiPoly& y);
  friend BiPoly operator-(const BiPoly& x) { return BiPoly(-1) * x; }

  bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }

  std::string str() const;

 private:
  void add_term(int dm, int dl, const Int& c);
  // (deg_m, deg_l) -> coefficient; ordered for deterministic iteration.
  std::map<std::pair<int, int>, Int> terms_;
};

BiPoly pow(const BiPoly& base, unsigned e);

}  // namespace bmseq
