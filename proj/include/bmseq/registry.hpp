#pragma once

#include "bmseq/bipoly.hpp"

namespace bmseq {

// The named proof polynomials in (m, l), defined once and shared by the
// bound evaluators and the identity registry so every consumer sees the
// same object.
struct ProofPolys {
  static const ProofPolys& instance();

  BiPoly delta1;  // radicand of W and of the x1/x2 roots
  BiPoly delta2;  // radicand appearing in the induction step
  BiPoly p_poly;  // radical-free part of P
  BiPoly big_f;   // F
  BiPoly g1, g2, g3;
  BiPoly h1, h2;
  BiPoly f_poly;  // f_l(m), radicand of y_l(m)
  BiPoly lambda;  // radicand inside U
  BiPoly k1, k2, k3;
  BiPoly m1_poly, m2_poly;
  BiPoly s_poly, t_poly;
  BiPoly omega;  // univariate in m (diagonal radicand)
  BiPoly qa, qb, qc;     // quadratic coefficients A, B, C (ratio in l)
  BiPoly qa2, qb2, qc2;  // quadratic coefficients for the ratio in m

 private:
  ProofPolys();
};

}  // namespace bmseq
