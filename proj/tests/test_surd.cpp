#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <bmseq/surd.hpp>

using namespace bmseq;

namespace {

Rat q(long num, long den) { return make_rat(Int(num), Int(den)); }

std::mt19937_64 rng(77031);

QuadraticSurd random_surd(const Int& d) {
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 7);
  return QuadraticSurd(q(num(rng), den(rng)), q(num(rng), den(rng)), d);
}

}  // namespace

TEST_CASE("canonical form") {
  const QuadraticSurd zero_b(Rat(3), Rat(0), Int(17));
  CHECK(zero_b.is_rational());
  CHECK(zero_b.radicand() == 0);

  const QuadraticSurd zero_d(Rat(3), Rat(5), Int(0));
  CHECK(zero_d.is_rational());
  CHECK(zero_d.rational_part() == Rat(3));

  // perfect squares fold into the rational part
  const QuadraticSurd sq(q(1, 2), q(1, 3), Int(36));
  CHECK(sq.is_rational());
  CHECK(sq.rational_part() == q(5, 2));

  CHECK_THROWS_AS(QuadraticSurd(Rat(0), Rat(1), Int(-5)), std::domain_error);
}

TEST_CASE("sign determination") {
  CHECK(QuadraticSurd(Rat(0), Rat(1), Int(2)).sign_of() == 1);
  CHECK(QuadraticSurd(Rat(0), Rat(-1), Int(2)).sign_of() == -1);
  CHECK(QuadraticSurd(Rat(0)).sign_of() == 0);
  // 3 - 2*sqrt(2) > 0 since 9 > 8; 3 - 3*sqrt(2) < 0 since 9 < 18
  CHECK(QuadraticSurd(Rat(3), Rat(-2), Int(2)).sign_of() == 1);
  CHECK(QuadraticSurd(Rat(3), Rat(-3), Int(2)).sign_of() == -1);
  CHECK(QuadraticSurd(Rat(-3), Rat(2), Int(2)).sign_of() == -1);
  CHECK(QuadraticSurd(Rat(-3), Rat(3), Int(2)).sign_of() == 1);
}

TEST_CASE("comparisons from the proof anchors") {
  // W(1,2) = (25 - 2 sqrt(127))/8 < 2/5, equivalent to 10 sqrt(127) > 109
  const QuadraticSurd w(q(25, 8), q(-1, 16), Int(2032));  // raw radicand form
  CHECK(surd_cmp(w, QuadraticSurd(q(2, 5))) < 0);
  // sqrt(2) < 3/2 by squaring: 8 < 9
  CHECK(surd_cmp(QuadraticSurd::sqrt_of(Int(2)), QuadraticSurd(q(3, 2))) < 0);
  // a + 0*sqrt(D) equals a
  CHECK(surd_cmp(QuadraticSurd(Rat(5), Rat(0), Int(7)), QuadraticSurd(Rat(5))) == 0);

  const QuadraticSurd s2(Rat(0), Rat(1), Int(2));
  const QuadraticSurd s3(Rat(0), Rat(1), Int(3));
  CHECK_THROWS_AS(surd_cmp(s2, s3), std::domain_error);
}

TEST_CASE("arithmetic stays in the field") {
  const Int d(127);
  const QuadraticSurd x(q(1, 2), q(3, 4), d);
  const QuadraticSurd y(Rat(2), q(-1, 4), d);
  const QuadraticSurd sum = x + y;
  CHECK(sum.rational_part() == q(5, 2));
  CHECK(sum.radical_coeff() == q(1, 2));
  const QuadraticSurd prod = x * y;
  // (1/2 + 3/4 r)(2 - 1/4 r) with r^2 = 127: rational part 1 - 3/16*127
  CHECK(prod.rational_part() == Rat(1) - q(3, 16) * Rat(127));
  CHECK(prod.radical_coeff() == q(-1, 8) + q(3, 2));

  // (a + b sqrt(D))(a - b sqrt(D)) is rational
  const QuadraticSurd conj(q(1, 2), q(-3, 4), d);
  CHECK((x * conj).is_rational());

  CHECK_THROWS_AS(x + QuadraticSurd(Rat(0), Rat(1), Int(2)), std::domain_error);
}

TEST_CASE("squaring matches multiplication (random property)") {
  for (int trial = 0; trial < 100; ++trial) {
    const QuadraticSurd s = random_surd(Int(161));  // 7*23, not a square
    CHECK(s.square() == s * s);
    // sign of the square is never negative
    CHECK(s.square().sign_of() >= 0);
    CHECK((s - s).sign_of() == 0);
  }
}

TEST_CASE("general comparison across radicands") {
  const QuadraticSurd s2 = QuadraticSurd::sqrt_of(Int(2));
  const QuadraticSurd s3 = QuadraticSurd::sqrt_of(Int(3));
  CHECK(surd_cmp_general(s2, s3) < 0);
  CHECK(surd_cmp_general(s3, s2) > 0);
  // sqrt(8) + 1 > sqrt(2) + 2 since 2 sqrt(2) - sqrt(2) = sqrt(2) > 1
  CHECK(surd_cmp_general(QuadraticSurd(Rat(1), Rat(1), Int(8)),
                         QuadraticSurd(Rat(2), Rat(1), Int(2))) > 0);
  // equal values written with different radicands: 2 sqrt(2) == sqrt(8)
  CHECK(surd_cmp_general(QuadraticSurd(Rat(0), Rat(2), Int(2)),
                         QuadraticSurd::sqrt_of(Int(8))) == 0);
  CHECK(surd_cmp_general(QuadraticSurd(Rat(-1), Rat(2), Int(2)),
                         QuadraticSurd(Rat(-1), Rat(1), Int(8))) == 0);
  // mixed signs resolve without squaring
  CHECK(surd_cmp_general(QuadraticSurd(Rat(5), Rat(-1), Int(2)),
                         QuadraticSurd(Rat(0), Rat(-1), Int(3))) > 0);

  // random consistency against same-radicand comparison after rescaling:
  // a + b sqrt(18) == a + 3b sqrt(2)
  std::mt19937_64 local(4242);
  std::uniform_int_distribution<long> num(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const Rat a1(num(local)), b1(num(local)), a2(num(local)), b2(num(local));
    const QuadraticSurd lhs18(a1, b1, Int(18));
    const QuadraticSurd rhs2(a2, b2, Int(2));
    const QuadraticSurd lhs2(a1, b1 * 3, Int(2));
    CHECK(surd_cmp_general(lhs18, rhs2) == surd_cmp(lhs2, rhs2));
  }
}

TEST_CASE("serialization") {
  CHECK(QuadraticSurd(q(25, 8), q(-1, 16), Int(2032)).str() ==
        "(25/8) + (-1/16)*sqrt(2032)");
  CHECK(QuadraticSurd(q(17, 6)).str() == "17/6");
  CHECK(QuadraticSurd(q(1, 2), q(1, 3), Int(36)).str() == "5/2");
}
