#include "bmseq/registry.hpp"

namespace bmseq {

const ProofPolys& ProofPolys::instance() {
  static const ProofPolys polys;
  return polys;
}

ProofPolys::ProofPolys() {
  const BiPoly m = BiPoly::var_m();
  const BiPoly l = BiPoly::var_l();
  const BiPoly m2 = m * m, m3 = m2 * m, m4 = m3 * m, m5 = m4 * m, m6 = m5 * m, m7 = m6 * m,
               m8 = m7 * m;
  const BiPoly l2 = l * l, l3 = l2 * l, l4 = l3 * l, l6 = l4 * l2, l8 = l6 * l2;

  delta1 = 52 * m4 + (64 * l2 + 56) * m3 + (16 * l4 + 36 * l2 + 13) * m2 - 8 * l2 * m - 4 * l2;

  delta2 = 52 * m4 + (64 * l2 + 264) * m3 + (16 * l4 + 228 * l2 + 493) * m2 +
           (32 * l4 + 256 * l2 + 402) * m + 16 * l4 + 88 * l2 + 121;

  p_poly = 8 * m3 + 32 * m2 + 43 * m - 4 * l2 * m - 4 * l2 + 19;

  big_f = 16 * l * m2 + 24 * m2 - 16 * l2 * m + 16 * l * m + 54 * m + 8 * l3 - 12 * l2 - 8 * l + 27;

  g1 = (m2 + m) * (12 * m2 + 24 * m - 16 * l4 + 28 * l2 + 3);
  g2 = 8 * m3 + 8 * m2 - 4 * l2 * m + 3 * m;
  g3 = (m + 1) * (8 * m2 + 24 * m - 4 * l2 + 19);

  h1 = 8 * pow(m + 1, 2) *
       (832 * m7 + 1536 * l2 * m6 + 4576 * m6 + 512 * l4 * m5 + 7104 * l2 * m5 + 9556 * m5 +
        1792 * l4 * m4 + 11648 * l2 * m4 + 9358 * m4 + 2048 * l4 * m3 + 7588 * l2 * m3 +
        4192 * m3 + 800 * l4 * m2 + 770 * l2 * m2 + 646 * m2 - 32 * l6 * m + 120 * l4 * m -
        1018 * l2 * m - 16 * l6 + 32 * l4 - 241 * l2);

  h2 = 8 * (m + 1) *
       (128 * m6 + 128 * l2 * m5 + 496 * m5 + 448 * l2 * m4 + 672 * m4 + 480 * l2 * m3 +
        368 * m3 + 120 * l2 * m2 + 64 * m2 + 8 * l4 * m - 62 * l2 * m + 4 * l4 - 19 * l2);

  f_poly = -12 * m6 + (64 * l2 - 72) * m5 + (16 * l4 + 100 * l2 - 47) * m4 + (120 * l2 + 8) * m3 +
           (56 * l2 + 4) * m2 - 8 * l2 * m - 4 * l2;

  lambda = (m + l2) * (4 * l4 + 8 * l2 * m + 5 * l2 + m);

  k1 = 3 * m2 * (2 * m + 1) * (m + l2);
  k2 = 2 * l * m2;
  k3 = m + l2;

  m1_poly = 12 * m5 + 27 * m4 + (3 * l2 + 14) * m3 + l2;
  m2_poly = 4 * l2 * m4 + 12 * l4 * m3 + (20 * l4 + 16 * l2 + 2) * m2 +
            (30 * l4 + 16 * l2 + 1) * m + 14 * l4;

  s_poly = 144 * pow(m, 10) + 648 * pow(m, 9) + (272 * l4 + 108 * l2 + 1065) * m8 +
           (336 * l6 + 504 * l4 + 198 * l2 + 756) * m7 +
           (452 * l6 + 169 * l4 + 77 * l2 + 196) * m6 -
           (336 * l8 + 336 * l6 + 122 * l4 - 16 * l2) * m5 -
           (1084 * l8 + 1091 * l6 + 360 * l4 + 10 * l2 + 4) * m4 -
           (1536 * l8 + 1600 * l6 + 666 * l4 + 68 * l2 + 4) * m3 -
           (1460 * l8 + 1408 * l6 + 372 * l4 + 32 * l2 + 1) * m2 -
           (840 * l8 + 448 * l6 + 28 * l4) * m - (196 * l8 - l4);

  t_poly = 6 * l * m2 * (2 * m + 1) * m1_poly;

  omega = 16 * m6 + 96 * m5 + 296 * m4 + 520 * m3 + 581 * m2 + 402 * m + 121;

  qa = 4 * m2 * l2 * pow(l + 1, 2);
  qb = -(2 * m2 * (2 * m + 1) * l * (l + 1) * (2 * l + 3));
  qc = (m - l) * (4 * (l2 + 3 * l - 1) * m3 + (4 * l3 + 8 * l - 5) * m2 - (2 * l + 1) * m - l);

  qa2 = 4 * m4 * pow(m + 1 - l, 2) * (m + 1);
  qb2 = -(2 * m4 * (m + 1 - l) * (8 * m2 + 8 * m - 4 * l2 + 3));
  qc2 = (16 * m2 - 1) * (m + 1) * (m2 + 1) * (m2 - l2);
}

}  // namespace bmseq
