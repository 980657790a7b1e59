#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bmseq/bounds.hpp>
#include <bmseq/logprops.hpp>
#include <bmseq/registry.hpp>

using namespace bmseq;

namespace {

Rat q(long num, long den) { return make_rat(Int(num), Int(den)); }

}  // namespace

TEST_CASE("delta1 values and domain") {
  CHECK(delta1_value(1, 2) == 2032);
  CHECK(delta1_value(1, 2) == Int(16) * 127);
  CHECK(delta1_value(1, 3) == 8009);
  CHECK_THROWS_AS(delta1_value(0, 5), std::domain_error);
  CHECK_THROWS_AS(delta1_value(2, 2), std::domain_error);
}

TEST_CASE("W values") {
  // W(1,2) = (25 - 2 sqrt(127))/8, stored with the raw radicand 2032
  const QuadraticSurd w12 = w_value(1, 2);
  CHECK(w12.rational_part() == q(25, 8));
  CHECK(w12.radical_coeff() == q(-1, 16));
  CHECK(w12.radicand() == 2032);
  CHECK(surd_cmp_general(w12, QuadraticSurd(q(25, 8), q(-2, 8), Int(127))) == 0);
  CHECK(w12.str() == "(25/8) + (-1/16)*sqrt(2032)");

  // W(1,3) = (105 - sqrt(8009))/24
  const QuadraticSurd w13 = w_value(1, 3);
  CHECK(w13.rational_part() == q(105, 24));
  CHECK(w13.radical_coeff() == q(-1, 24));
  CHECK(w13.radicand() == 8009);

  // diagonal cells carry the omega radicand
  const ProofPolys& P = ProofPolys::instance();
  for (long m = 1; m <= 20; ++m)
    CHECK(w_value(m, m + 1).radicand() == P.omega.eval(Int(m), Int(0)));
}

TEST_CASE("f evaluation") {
  for (long ell = 0; ell <= 10; ++ell) {
    CHECK(f_value(ell, 0) == Int(-4) * ell * ell);
    const Int L(ell);
    CHECK(f_value(ell, 1) == 16 * L * L * L * L + 328 * L * L - 119);
  }
  CHECK(f_value(1, 2) == 1324);
  CHECK(f_value(1, 3) == -1135);
  // l = 0 has no positive region: f_0(m) < 0 for every m >= 1
  for (long m = 1; m <= 30; ++m) CHECK(sign(f_value(0, m)) < 0);
}

TEST_CASE("lambda and U") {
  const auto [lam12, u12] = lambda_and_u(1, 2);
  CHECK(lam12 == 81);  // perfect square: U collapses to a rational
  CHECK(u12.is_rational());
  CHECK(u12.rational_part() == q(17, 6));

  const auto [lam23, u23] = lambda_and_u(2, 3);
  CHECK(lam23 == 1281);
  CHECK_FALSE(u23.is_rational());
  CHECK(u23.radicand() == 1281);

  CHECK_THROWS_AS(lambda_and_u(0, 3), std::domain_error);
}

TEST_CASE("quadratic roots and the root gap") {
  const QuadRoots roots = quad_roots(1, 2);
  CHECK(roots.x1 == w_value(1, 2));
  // x2 - x1 = sqrt(delta1) / (2 m (l^2 + l)) > 0
  for (long ell = 1; ell <= 8; ++ell)
    for (long m = ell + 1; m <= ell + 8; ++m) {
      const QuadRoots r = quad_roots(ell, m);
      const QuadraticSurd gap = r.x2 - r.x1;
      const Int L(ell), M(m);
      CHECK(gap ==
            QuadraticSurd(Rat(0), make_rat(Int(1), 2 * M * (L * L + L)), delta1_value(ell, m)));
      CHECK(gap.sign_of() > 0);
    }
}

TEST_CASE("y root and the negative-radicand error") {
  const QuadraticSurd y12 = y_root(1, 2);
  CHECK(y12.rational_part() == q(188, 96));
  CHECK(y12.radical_coeff() == q(1, 96));
  CHECK(y12.radicand() == 1324);
  CHECK_THROWS_WITH_AS(y_root(1, 3), doctest::Contains("negative radicand"),
                       std::domain_error);
}

TEST_CASE("isolate_r2") {
  // f_1(2) = 1324 > 0 > f_1(3) = -1135
  CHECK(isolate_r2(1) == std::pair<long, long>{2, 3});
  for (long ell = 1; ell <= 20; ++ell) {
    CHECK(sign(f_value(ell, ell + 1)) > 0);  // bracket start is valid
    const auto [t, t1] = isolate_r2(ell);
    CHECK(t1 == t + 1);
    CHECK(t >= ell + 1);
    CHECK(sign(f_value(ell, t)) >= 0);
    CHECK(sign(f_value(ell, t1)) < 0);
  }
  CHECK_THROWS_AS(isolate_r2(0), std::domain_error);
}

TEST_CASE("gap values against the bound differences") {
  const auto [d1_12, d2_12] = gap_values(1, 2);
  CHECK(d2_12 == q(4, 15));
  const auto [d1_13, d2_13] = gap_values(1, 3);
  CHECK(d1_13 == q(3, 5));  // (3*2)/(2*1*5), the difference of the in-row pair

  // D1 = CHEN_GU_UB - CHEN_GU_LB and D2 = UB_TRANSPOSED - LB_TRANSPOSED
  for (long ell = 1; ell <= 8; ++ell)
    for (long m = ell + 1; m <= ell + 8; ++m) {
      const auto [d1, d2] = gap_values(ell, m);
      const Int L(ell), M(m);
      const Rat gu_ub = make_rat((M - L + 1) * (L + 1), (M - L) * L);
      const Rat gu_lb = make_rat((M - L + 1) * (L + 1) * (M + L), (M - L) * L * (M + L + 1));
      CHECK(d1 == gu_ub - gu_lb);
      const Rat t_ub = make_rat((M - L + 1) * M, (M - L) * (M + 1));
      const Rat t_lb = make_rat((M - L + 1) * M * M * M, (M - L) * (M + 1) * (M * M + 1));
      CHECK(d2 == t_ub - t_lb);
    }

  // m^2 D2(1, m) = m^4/(m^4 - 1) approaches 1 from above, monotonically
  Rat prev;
  bool have_prev = false;
  for (long m : {10L, 100L, 1000L}) {
    const auto [d1, d2] = gap_values(1, m);
    const Rat scaled = Rat(Int(m) * Int(m)) * d2;
    CHECK(scaled > 1);
    if (have_prev) CHECK(scaled < prev);
    prev = scaled;
    have_prev = true;
  }
  const Rat at100 = Rat(Int(100) * Int(100)) * gap_values(1, 100).second;
  CHECK(at100 - 1 < q(1, 10));
}

TEST_CASE("check_inequality fixtures at (1,2)") {
  const BMTable t = BMTable::build(4);

  const CheckRecord ub = check_inequality(BoundId::UB_TRANSPOSED, 1, 2, t);
  CHECK(ub.holds);
  CHECK(ub.lhs == QuadraticSurd(q(225, 172)));
  CHECK(ub.rhs == QuadraticSurd(q(4, 3)));

  const CheckRecord lb = check_inequality(BoundId::LB_TRANSPOSED, 1, 2, t);
  CHECK(lb.holds);
  CHECK(lb.lhs == QuadraticSurd(q(225, 172)));
  CHECK(lb.rhs == QuadraticSurd(q(16, 15)));

  const CheckRecord w = check_inequality(BoundId::W_LOWER, 1, 2, t);
  CHECK(w.holds);
  CHECK(w.lhs == QuadraticSurd(q(2, 5)));
  CHECK(w.rhs == w_value(1, 2));
  CHECK(w.margin_sign == 1);

  const CheckRecord u = check_inequality(BoundId::U_LOWER, 1, 2, t);
  CHECK(u.holds);
  CHECK(u.lhs == QuadraticSurd(q(43, 15)));
  CHECK(u.rhs == QuadraticSurd(q(17, 6)));

  CHECK_THROWS_AS(check_inequality(BoundId::UB_TRANSPOSED, 0, 2, t), std::domain_error);
  CHECK_THROWS_AS(check_inequality(BoundId::COR_M2, 1, 2, t), std::domain_error);
  CHECK_THROWS_AS(check_inequality(BoundId::UB_TRANSPOSED, 1, 4, t), std::out_of_range);
}

TEST_CASE("sweeps are clean at moderate sizes") {
  const BMTable t = BMTable::build(41);
  for (const BoundSpec& spec : bound_specs()) {
    const SweepReport rep = sweep(spec.id, 40, t);
    INFO("suite ", spec.name);
    CHECK(rep.violations.empty());
    CHECK(rep.examined > 0);
    CHECK(rep.min_margin.has_value());
  }
  CHECK_THROWS_AS(sweep(BoundId::U_LOWER, 41, t), std::out_of_range);
}

TEST_CASE("sweep is deterministic across thread counts") {
  const BMTable t = BMTable::build(31);
  const SweepReport a = sweep(BoundId::UB_TRANSPOSED, 30, t, 1);
  const SweepReport b = sweep(BoundId::UB_TRANSPOSED, 30, t, 4);
  CHECK(a.examined == b.examined);
  REQUIRE(a.min_margin.has_value());
  REQUIRE(b.min_margin.has_value());
  CHECK(a.min_margin->ell == b.min_margin->ell);
  CHECK(a.min_margin->m == b.min_margin->m);
}

TEST_CASE("cross-consistency: UB sweep agrees with extended reverse ultra") {
  const BMTable t = BMTable::build(41);
  for (unsigned ell = 1; ell <= 10; ++ell) {
    Seq s;
    s.offset = ell;
    for (unsigned m = ell; m <= 40; ++m) s.values.push_back(t.d(ell, m));
    const PropertyOutcome eu = extended_ultra(s, ell, UltraMode::reverse);
    CHECK(eu.holds);
    for (long m = ell + 1; m <= 39; ++m)
      CHECK(check_inequality(BoundId::UB_TRANSPOSED, ell, m, t).holds);
  }
}

TEST_CASE("bracketing: x1 < ratio < (m-l)/(l+1) < x2") {
  const BMTable t = BMTable::build(40);
  for (long ell = 1; ell <= 39; ++ell)
    for (long m = ell + 1; m <= 40; ++m) {
      const QuadraticSurd ratio(make_rat(t.n_entry(ell + 1, m), t.n_entry(ell, m)));
      const QuadRoots roots = quad_roots(ell, m);
      const QuadraticSurd mid(make_rat(Int(m - ell), Int(ell + 1)));
      CHECK(surd_cmp(roots.x1, ratio) < 0);
      CHECK(surd_cmp(ratio, mid) < 0);
      CHECK(surd_cmp(mid, roots.x2) < 0);
    }
}

TEST_CASE("diagonal ratio identity d_{m+1}(m+1)/d_m(m+1) = 2/(2m+3)") {
  const BMTable t = BMTable::build(60);
  for (unsigned m = 0; m + 1 <= 60; ++m)
    CHECK(make_rat(t.n_entry(m + 1, m + 1), t.n_entry(m, m + 1)) ==
          make_rat(Int(2), Int(2 * m + 3)));
}

TEST_CASE("prop-chain margins pick the tighter link") {
  const BMTable t = BMTable::build(10);
  const CheckRecord rec = check_inequality(BoundId::PROP_CHAIN, 2, 5, t);
  CHECK(rec.holds);
  CHECK(rec.margin_sign == 1);
  // the record's lhs/rhs pair is one of the two chain links, exactly
  const Rat d2 = t.d(2, 5) * t.d(2, 5);
  const Rat mid = t.d(2, 4) * t.d(2, 6);
  const Rat cross = t.d(1, 5) * t.d(3, 5);
  const bool is_first = rec.lhs == QuadraticSurd(d2) && rec.rhs == QuadraticSurd(mid);
  const bool is_second = rec.lhs == QuadraticSurd(mid) && rec.rhs == QuadraticSurd(cross);
  CHECK((is_first || is_second));
}

TEST_CASE("bound evaluators read the shared registry polynomials") {
  const ProofPolys& P = ProofPolys::instance();
  for (long ell = 1; ell <= 6; ++ell)
    for (long m = ell + 1; m <= ell + 6; ++m) {
      CHECK(delta1_value(ell, m) == P.delta1.eval(Int(m), Int(ell)));
      CHECK(f_value(ell, m) == P.f_poly.eval(Int(m), Int(ell)));
      CHECK(lambda_and_u(ell, m).first == P.lambda.eval(Int(m), Int(ell)));
    }
}
