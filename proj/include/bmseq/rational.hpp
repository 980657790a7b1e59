#pragma once

#include <gmpxx.h>

#include <string>

namespace bmseq {

// All arithmetic in this project is exact. Int and Rat are the only number
// types; no floating point appears anywhere in the verification paths.
using Int = mpz_class;
using Rat = mpq_class;

Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);
Int pow2(unsigned long e);
Int ipow(const Int& base, unsigned long e);
Rat rat_pow(const Rat& q, unsigned long e);

// Reduced fraction num/den with positive denominator. Throws on den == 0.
Rat make_rat(const Int& num, const Int& den);

// r(r-1)...(r-n+1)/n!, the falling-factorial binomial; 1 when n == 0.
Rat generalized_binomial(const Rat& r, unsigned long n);

int sign(const Rat& q);
int sign(const Int& n);

// True iff n >= 0 and n is a perfect square; on success *root holds sqrt(n).
bool perfect_square(const Int& n, Int* root = nullptr);

// "num/den" with the denominator always spelled out ("3/1" for integers).
std::string rat_str(const Rat& q);

}  // namespace bmseq
