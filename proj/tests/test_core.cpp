#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bmseq/methods.hpp>
#include <bmseq/table.hpp>

using namespace bmseq;

namespace {

Rat q(long num, long den) { return make_rat(Int(num), Int(den)); }

// Test-only oracle: expands P_m(x) = 2^{-2m} sum_k 2^k C(2m-2k,m-k) C(m+k,k) (x+1)^k
// by explicit polynomial multiplication. Independent of the closed form's
// per-coefficient binom(k,l) route and of the table recurrence.
PolyRational pm_by_expansion(unsigned m) {
  PolyRational acc;
  for (unsigned k = 0; k <= m; ++k) {
    std::vector<Rat> pow_coeffs(k + 1);
    for (unsigned t = 0; t <= k; ++t) pow_coeffs[t] = Rat(binomial(k, t));
    PolyRational term(std::move(pow_coeffs));  // (x+1)^k
    Rat scale(pow2(k) * binomial(2 * m - 2 * k, m - k) * binomial(m + k, k));
    acc += term.scaled(scale);
  }
  return acc.scaled(make_rat(Int(1), pow2(2 * m)));
}

}  // namespace

TEST_CASE("generalized binomial") {
  CHECK(generalized_binomial(q(-1, 2), 0) == 1);
  CHECK(generalized_binomial(q(-1, 2), 1) == q(-1, 2));
  // (-1/2)(-3/2)/2! computed by hand
  CHECK(generalized_binomial(q(-1, 2), 2) == q(3, 8));
  // integer arguments reduce to plain binomials
  CHECK(generalized_binomial(Rat(7), 3) == Rat(35));
  CHECK(generalized_binomial(Rat(2), 5) == 0);
}

TEST_CASE("closed form matches hand-evaluated values") {
  CHECK(d_closed_form(0, 0) == 1);
  CHECK(d_closed_form(1, 2) == q(15, 4));
  CHECK(d_closed_form(2, 2) == q(3, 2));
  CHECK(d_closed_form(2, 2) / d_closed_form(1, 2) == q(2, 5));
  CHECK(d_closed_form(1, 3) == q(43, 4));
  CHECK(d_closed_form(0, 3) == q(77, 16));
  CHECK_THROWS_AS(d_closed_form(3, 2), std::domain_error);
}

TEST_CASE("closed form agrees with the expansion oracle") {
  for (unsigned m = 0; m <= 15; ++m) {
    const PolyRational p = pm_by_expansion(m);
    for (unsigned ell = 0; ell <= m; ++ell) CHECK(d_closed_form(ell, m) == p.coeff(ell));
  }
}

TEST_CASE("table rows and the boundary convention") {
  const BMTable t = BMTable::build(8);
  CHECK(t.row(1) == std::vector<Int>{6, 4});
  CHECK(t.row(2) == std::vector<Int>{42, 60, 24});
  CHECK(t.n_entry(3, 3) == 160);
  // d_{-1} = 0 convention reproduces d_0(1) = 3/2 from d_0(0) = 1
  CHECK(t.d(0, 1) == q(3, 2));
  CHECK_THROWS_AS(t.n_entry(1, 9), std::out_of_range);
  CHECK_THROWS_AS(t.n_entry(5, 4), std::out_of_range);
}

TEST_CASE("diagonal closed form (confirmed before use as invariant)") {
  const BMTable t = BMTable::build(40);
  for (unsigned m = 0; m <= 40; ++m) {
    CHECK(t.n_entry(m, m) == pow2(m) * binomial(2 * m, m));
    CHECK(t.d(m, m) == make_rat(binomial(2 * m, m), pow2(m)));
  }
}

TEST_CASE("jacobi form") {
  CHECK(d_jacobi(0, 0) == 1);
  // hand expansion: k=0 gives (-1)*genbinom(-1/2,1) = 1/2, k=1 gives 1
  CHECK(d_jacobi(0, 1) == q(3, 2));
  CHECK(d_jacobi(1, 1) == 1);
  CHECK_THROWS_AS(d_jacobi(2, 1), std::domain_error);
}

TEST_CASE("m-recurrence from closed-form seeds") {
  CHECK(d_via_m_recurrence(1, 3, Rat(1), q(15, 4)) == q(43, 4));
  CHECK(d_via_m_recurrence(0, 2, Rat(1), q(3, 2)) == q(21, 8));
  CHECK_THROWS_AS(d_via_m_recurrence(3, 2, Rat(1), Rat(1)), std::domain_error);
}

TEST_CASE("ell-recurrence walks a row downward") {
  CHECK(d_via_ell_recurrence(q(3, 2), q(15, 4), 2, 2) == q(21, 8));
  CHECK(d_via_ell_recurrence(q(5, 2), q(35, 4), 3, 3) == q(43, 4));
  CHECK(d_via_ell_recurrence(q(35, 4), q(43, 4), 2, 3) == q(77, 16));
  CHECK_THROWS_AS(d_via_ell_recurrence(Rat(1), Rat(1), 1, 3), std::domain_error);
}

TEST_CASE("double sum expands to the same polynomials") {
  CHECK(p_double_sum(0) == PolyRational({Rat(1)}));
  CHECK(p_double_sum(1) == PolyRational({q(3, 2), Rat(1)}));
  CHECK(p_double_sum(2) == PolyRational({q(21, 8), q(15, 4), q(3, 2)}));
  for (unsigned m = 3; m <= 12; ++m) CHECK(p_double_sum(m) == pm_by_expansion(m));
}

TEST_CASE("cross validation is clean and locates injected faults") {
  const CrossValidationReport ok = cross_validate(20, 10);
  CHECK(ok.ok());
  CHECK(ok.timings.size() == 5);

  // flip one entry and the comparison must point at exactly that cell
  std::vector<std::vector<Int>> rows;
  const BMTable t = BMTable::build(12);
  for (unsigned m = 0; m <= 12; ++m) rows.push_back(t.row(m));
  rows[7][3] += 1;
  const CrossValidationReport bad = compare_methods(BMTable::from_rows(std::move(rows)), 5);
  REQUIRE(bad.first_mismatch.has_value());
  CHECK(bad.first_mismatch->m == 7);
  CHECK(bad.first_mismatch->ell == 3);
}

TEST_CASE("row invariants: positivity, unimodality, log-concavity") {
  const BMTable t = BMTable::build(60);
  for (unsigned m = 0; m <= 60; ++m) {
    const auto& row = t.row(m);
    for (const Int& v : row) CHECK(sign(v) > 0);
    // unimodal with the peak within distance 1 of m/2 (|2p - m| <= 2)
    std::size_t peak = 0;
    for (std::size_t i = 1; i < row.size(); ++i)
      if (row[i] > row[peak]) peak = i;
    CHECK(std::abs(2 * static_cast<long>(peak) - static_cast<long>(m)) <= 2);
    bool rising = true;
    for (std::size_t i = 1; i < row.size(); ++i) {
      if (row[i] > row[i - 1]) CHECK(rising);
      if (row[i] < row[i - 1]) rising = false;
    }
    // log-concave in l, strict for m >= 2 (same 4^m scale within a row)
    for (std::size_t i = 1; i + 1 < row.size(); ++i) {
      const Int lhs = row[i] * row[i];
      const Int rhs = row[i - 1] * row[i + 1];
      CHECK(lhs >= rhs);
      if (m >= 2) CHECK(lhs > rhs);
    }
  }
}

TEST_CASE("row sums match the central-binomial closed form") {
  // sum_l N_l(m) = 4^m P_m(1) = C(4m+2, 2m+1)/2: an independent route to
  // the whole row, not shared with any of the per-entry methods.
  const BMTable t = BMTable::build(100);
  for (unsigned m = 0; m <= 100; ++m) {
    Int sum = 0;
    for (const Int& v : t.row(m)) sum += v;
    Int expected = binomial(4 * m + 2, 2 * m + 1);
    mpz_divexact_ui(expected.get_mpz_t(), expected.get_mpz_t(), 2);
    CHECK(sum == expected);
  }
}

TEST_CASE("parallel build is identical to serial") {
  const BMTable serial = BMTable::build(30, 1);
  const BMTable parallel = BMTable::build(30, 4);
  for (unsigned m = 0; m <= 30; ++m) CHECK(serial.row(m) == parallel.row(m));
}
