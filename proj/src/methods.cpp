#include "bmseq/methods.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

namespace bmseq {

namespace {

void require_ell_le_m(unsigned ell, unsigned m, const char* who) {
  if (ell > m)
    throw std::domain_error(std::string(who) + ": need l <= m, got l=" + std::to_string(ell) +
                            " m=" + std::to_string(m));
}

// One step of the three-term recurrence in m: given d_l(j-1), d_l(j),
// returns d_l(j+1) from
//   4(j^2+j)(j+1-l) d_l(j+1) = 2j(8j^2+8j-4l^2+3) d_l(j) - (16j^2-1)(j+l) d_l(j-1).
Rat m_recurrence_step(unsigned ell, unsigned j, const Rat& prev, const Rat& cur) {
  const Int J(j), L(ell);
  const Int a = 2 * J * (8 * J * J + 8 * J - 4 * L * L + 3);
  const Int b = (16 * J * J - 1) * (J + L);
  const Int c = 4 * (J * J + J) * (J + 1 - L);
  return (Rat(a) * cur - Rat(b) * prev) / Rat(c);
}

}  // namespace

Int n_closed_form(unsigned ell, unsigned m) {
  require_ell_le_m(ell, m, "n_closed_form");
  // 4^m d_l(m) = sum_{k=l}^m 2^k C(2m-2k, m-k) C(m+k, k) C(k, l)
  Int acc = 0;
  Int term;
  for (unsigned k = ell; k <= m; ++k) {
    term = binomial(2 * m - 2 * k, m - k);
    term *= binomial(m + k, k);
    term *= binomial(k, ell);
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), k);
    acc += term;
  }
  return acc;
}

Rat d_closed_form(unsigned ell, unsigned m) {
  return make_rat(n_closed_form(ell, m), pow2(2 * m));
}

Rat d_jacobi(unsigned ell, unsigned m) {
  require_ell_le_m(ell, m, "d_jacobi");
  // With beta = -alpha = -(m + 1/2) the Jacobi sum collapses to
  //   sum_k (-1)^{m-k} genbinom(-1/2, m-k) C(m+k, k) C(k, l) / 2^k,
  // since m + beta = -1/2 and alpha + beta = 0.
  Rat acc = 0;
  // genbinom(-1/2, n) for n = 0..m-l, built by the falling-factor ratio.
  std::vector<Rat> gb(m - ell + 1);
  gb[0] = 1;
  for (unsigned n = 1; n <= m - ell; ++n)
    gb[n] = gb[n - 1] * Rat(Int(-1) - Int(2 * (n - 1)), Int(2 * n));
  for (unsigned k = ell; k <= m; ++k) {
    Rat term(binomial(m + k, k) * binomial(k, ell), pow2(k));
    term.canonicalize();
    term *= gb[m - k];
    if ((m - k) % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

Rat d_via_m_recurrence(unsigned ell, unsigned m, const Rat& seed_at_ell,
                       const Rat& seed_at_ell_plus_one) {
  if (m < ell)
    throw std::domain_error("d_via_m_recurrence: need m >= l, got l=" + std::to_string(ell) +
                            " m=" + std::to_string(m));
  if (m == ell) return seed_at_ell;
  Rat prev = seed_at_ell;
  Rat cur = seed_at_ell_plus_one;
  for (unsigned j = ell + 1; j < m; ++j) {
    Rat next = m_recurrence_step(ell, j, prev, cur);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Rat d_via_ell_recurrence(const Rat& d_ell, const Rat& d_ell_minus_one, unsigned ell, unsigned m) {
  if (ell < 2 || ell > m)
    throw std::domain_error("d_via_ell_recurrence: need 2 <= l <= m, got l=" +
                            std::to_string(ell) + " m=" + std::to_string(m));
  const Int M(m), L(ell);
  // (m+2-l)(m+l-1) d_{l-2}(m) = (2m+1)(l-1) d_{l-1}(m) - l(l-1) d_l(m)
  const Rat num = Rat((2 * M + 1) * (L - 1)) * d_ell_minus_one - Rat(L * (L - 1)) * d_ell;
  return num / Rat((M + 2 - L) * (M + L - 1));
}

PolyRational p_double_sum(unsigned m) {
  // 8^m P_m(x) = sum_{j,k} C(2m+1,2j) C(m-j,k) C(2k+2j,k+j) 8^{m-j-k} (x+1)^j (x-1)^k
  // is an integer polynomial; build it and divide by 8^m at the end.
  std::vector<Int> acc(m + 1, Int(0));
  std::vector<Int> term;
  for (unsigned j = 0; j <= m; ++j) {
    for (unsigned k = 0; k + j <= m; ++k) {
      Int c = binomial(2 * m + 1, 2 * j);
      c *= binomial(m - j, k);
      c *= binomial(2 * k + 2 * j, k + j);
      mpz_mul_2exp(c.get_mpz_t(), c.get_mpz_t(), 3 * (m - j - k));
      // coefficient list of (x+1)^j (x-1)^k
      term.assign(j + k + 1, Int(0));
      for (unsigned a = 0; a <= j; ++a) {
        const Int bj = binomial(j, a);
        for (unsigned b = 0; b <= k; ++b) {
          Int w = bj * binomial(k, b);
          if ((k - b) % 2 == 1) w = -w;
          term[a + b] += w;
        }
      }
      for (unsigned t = 0; t <= j + k; ++t) acc[t] += c * term[t];
    }
  }
  const Int den = pow2(3 * m);
  std::vector<Rat> coeffs(m + 1);
  for (unsigned t = 0; t <= m; ++t) coeffs[t] = make_rat(acc[t], den);
  return PolyRational(std::move(coeffs));
}

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

}  // namespace

CrossValidationReport compare_methods(const BMTable& table, unsigned max_m_double_sum) {
  const unsigned max_m = table.max_m();
  if (max_m_double_sum > max_m)
    throw std::domain_error("compare_methods: double-sum cap exceeds table size");
  CrossValidationReport report;
  report.max_m = max_m;
  report.max_m_double_sum = max_m_double_sum;

  auto note_mismatch = [&](const std::string& method, unsigned ell, unsigned m, Rat got,
                           Rat expected) {
    if (!report.first_mismatch)
      report.first_mismatch = Mismatch{method, ell, m, std::move(got), std::move(expected)};
  };

  {
    auto t0 = Clock::now();
    for (unsigned m = 0; m <= max_m && !report.first_mismatch; ++m)
      for (unsigned ell = 0; ell <= m; ++ell)
        if (Int n = n_closed_form(ell, m); n != table.n_entry(ell, m)) {
          note_mismatch("closed_form", ell, m, make_rat(n, pow2(2 * m)), table.d(ell, m));
          break;
        }
    report.timings.push_back({"closed_form", ms_since(t0)});
  }
  {
    auto t0 = Clock::now();
    for (unsigned m = 0; m <= max_m && !report.first_mismatch; ++m)
      for (unsigned ell = 0; ell <= m; ++ell)
        if (Rat got = d_jacobi(ell, m); got != table.d(ell, m)) {
          note_mismatch("jacobi", ell, m, got, table.d(ell, m));
          break;
        }
    report.timings.push_back({"jacobi", ms_since(t0)});
  }
  {
    // Seeds come from the closed form, not the table, to keep the routes
    // independent.
    auto t0 = Clock::now();
    for (unsigned ell = 0; ell <= max_m && !report.first_mismatch; ++ell) {
      Rat prev = d_closed_form(ell, ell);
      if (prev != table.d(ell, ell)) {
        note_mismatch("m_recurrence", ell, ell, prev, table.d(ell, ell));
        break;
      }
      if (ell == max_m) break;
      Rat cur = d_closed_form(ell, ell + 1);
      if (cur != table.d(ell, ell + 1)) {
        note_mismatch("m_recurrence", ell, ell + 1, cur, table.d(ell, ell + 1));
        break;
      }
      for (unsigned m = ell + 2; m <= max_m; ++m) {
        Rat next = m_recurrence_step(ell, m - 1, prev, cur);
        prev = std::move(cur);
        cur = std::move(next);
        if (cur != table.d(ell, m)) {
          note_mismatch("m_recurrence", ell, m, cur, table.d(ell, m));
          break;
        }
      }
    }
    report.timings.push_back({"m_recurrence", ms_since(t0)});
  }
  {
    auto t0 = Clock::now();
    for (unsigned m = 2; m <= max_m && !report.first_mismatch; ++m) {
      Rat hi = d_closed_form(m, m);
      Rat lo = d_closed_form(m - 1, m);
      for (unsigned ell = m; ell >= 2; --ell) {
        Rat next = d_via_ell_recurrence(hi, lo, ell, m);
        if (next != table.d(ell - 2, m)) {
          note_mismatch("ell_recurrence", ell - 2, m, next, table.d(ell - 2, m));
          break;
        }
        hi = std::move(lo);
        lo = std::move(next);
      }
    }
    report.timings.push_back({"ell_recurrence", ms_since(t0)});
  }
  {
    auto t0 = Clock::now();
    for (unsigned m = 0; m <= max_m_double_sum && !report.first_mismatch; ++m) {
      const PolyRational p = p_double_sum(m);
      for (unsigned ell = 0; ell <= m; ++ell)
        if (Rat got = p.coeff(ell); got != table.d(ell, m)) {
          note_mismatch("double_sum", ell, m, got, table.d(ell, m));
          break;
        }
    }
    report.timings.push_back({"double_sum", ms_since(t0)});
  }
  return report;
}

CrossValidationReport cross_validate(unsigned max_m, unsigned max_m_double_sum, unsigned threads) {
  return compare_methods(BMTable::build(max_m, threads), max_m_double_sum);
}

}  // namespace bmseq
