#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace padl {

using Integer = mpz_class;
using Rational = mpq_class;

// ---- integer utilities ----------------------------------------------------

Integer zpow(const Integer& base, unsigned long e);
Integer factorial(unsigned long n);
Integer binomial(const Integer& n, unsigned long k);

// Exponent of the prime p in n; throws on n = 0.
long valuation(const Integer& n, const Integer& p);
// Exponent of p in q, negative when p divides the denominator; throws on q = 0.
long valuation(const Rational& q, const Integer& p);

bool is_prime(const Integer& n);
// Trial-division factorization of |n| into (prime, exponent) pairs in
// increasing prime order; n must be nonzero, units give the empty list.
std::vector<std::pair<Integer, unsigned>> factor(const Integer& n);
int mobius(const Integer& n);
// Kronecker symbol (a|n), the extension of the Jacobi symbol to all n.
int kronecker(const Integer& a, const Integer& n);
// Smallest positive primitive root modulo an odd prime p.
unsigned long primitive_root(unsigned long p);
unsigned long powmod(unsigned long a, unsigned long e, unsigned long m);

// ---- rational utilities ----------------------------------------------------

// base^e with e of either sign; throws on 0^negative.
Rational qpow(const Rational& base, long e);
std::string to_string(const Rational& q);  // "a/b", or "a" when the denominator is 1
Rational rational_from_string(const std::string& s);

// Bernoulli numbers in the first convention B_1 = -1/2, defined by B_0 = 1 and
// sum_{j=0}^{n} C(n+1,j) B_j = 0 for n >= 1.  Cached; safe to call from
// parallel regions.  With this convention zeta(1-k) = (-1)^{k+1} B_k / k.
const Rational& bernoulli(unsigned n);

// Bernoulli polynomial B_k(x) = sum_{j=0}^{k} C(k,j) B_j x^{k-j}.
Rational bernoulli_poly(unsigned k, const Rational& x);

// zeta(1-k) of the Riemann zeta function, k >= 1, exact.
Rational riemann_zeta_neg(unsigned k);

}  // namespace padl
