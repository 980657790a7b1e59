#include "bmseq/rational.hpp"

#include <stdexcept>

namespace bmseq {

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int pow2(unsigned long e) {
  Int r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
  return r;
}

Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat rat_pow(const Rat& q, unsigned long e) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den().get_mpz_t(), e);
  // q is canonical, so num^e / den^e already is.
  return r;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat generalized_binomial(const Rat& r, unsigned long n) {
  Rat acc = 1;
  Rat factor = r;
  for (unsigned long i = 0; i < n; ++i) {
    acc *= factor;
    factor -= 1;
  }
  return acc / Rat(factorial(n));
}

int sign(const Rat& q) { return sgn(q); }
int sign(const Int& n) { return sgn(n); }

bool perfect_square(const Int& n, Int* root) {
  if (sgn(n) < 0) return false;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
  if (root != nullptr) mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
  return true;
}

std::string rat_str(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace bmseq
