#include "bmseq/table.hpp"

#include <stdexcept>
#include <string>

#include "bmseq/parallel.hpp"

namespace bmseq {

BMTable BMTable::build(unsigned max_m, unsigned threads) {
  BMTable t;
  t.rows_.reserve(max_m + 1);
  t.rows_.push_back({Int(1)});
  for (unsigned m = 0; m < max_m; ++m) {
    const std::vector<Int>& cur = t.rows_.back();
    std::vector<Int> next(m + 2);
    parallel_for(m + 2, threads, [&](std::size_t l) {
      Int acc = 0;
      if (l >= 1) {
        // 2(m+l) * N_{l-1}(m)
        mpz_addmul_ui(acc.get_mpz_t(), cur[l - 1].get_mpz_t(), 2 * (m + l));
      }
      if (l <= m) {
        // (4m+2l+3) * N_l(m)
        mpz_addmul_ui(acc.get_mpz_t(), cur[l].get_mpz_t(), 4 * m + 2 * l + 3);
      }
      mpz_mul_2exp(acc.get_mpz_t(), acc.get_mpz_t(), 1);
      Int q;
      const unsigned long rem = mpz_tdiv_q_ui(q.get_mpz_t(), acc.get_mpz_t(), m + 1);
      if (rem != 0)
        throw std::logic_error("BMTable::build: inexact division at m=" + std::to_string(m + 1) +
                               " l=" + std::to_string(l));
      next[l] = std::move(q);
    });
    t.rows_.push_back(std::move(next));
  }
  return t;
}

BMTable BMTable::from_rows(std::vector<std::vector<Int>> rows) {
  if (rows.empty()) throw std::invalid_argument("BMTable::from_rows: no rows");
  for (std::size_t m = 0; m < rows.size(); ++m)
    if (rows[m].size() != m + 1)
      throw std::invalid_argument("BMTable::from_rows: row " + std::to_string(m) +
                                  " has wrong length");
  BMTable t;
  t.rows_ = std::move(rows);
  return t;
}

BMTable BMTable::truncated(unsigned new_max_m) const {
  if (new_max_m >= max_m()) return *this;
  BMTable t;
  t.rows_.assign(rows_.begin(), rows_.begin() + new_max_m + 1);
  return t;
}

const Int& BMTable::n_entry(unsigned ell, unsigned m) const {
  if (!covers(ell, m))
    throw std::out_of_range("BMTable: entry (l=" + std::to_string(ell) +
                            ", m=" + std::to_string(m) + ") not covered (max_m=" +
                            std::to_string(max_m()) + ")");
  return rows_[m][ell];
}

Rat BMTable::d(unsigned ell, unsigned m) const { return make_rat(n_entry(ell, m), pow2(2 * m)); }

const std::vector<Int>& BMTable::row(unsigned m) const {
  if (m >= rows_.size())
    throw std::out_of_range("BMTable: row " + std::to_string(m) + " not covered");
  return rows_[m];
}

}  // namespace bmseq
