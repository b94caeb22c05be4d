#pragma once

#include "padl/cyclotomic.hpp"
#include "padl/rational.hpp"

#include <string>

namespace padl {

// Element of Z_p known modulo p^prec, stored as the canonical lift in
// [0, p^prec).  Arithmetic mixes precision by truncating to the smaller
// operand; mixing different primes is an error.  Equality compares lifts at
// the common precision.
class PadicInt {
public:
    PadicInt(unsigned long p, unsigned prec, const Integer& value);

    // q with denominator prime to p, reduced mod p^prec
    static PadicInt from_rational(const Rational& q, unsigned long p, unsigned prec);
    // the unique (p-1)st root of unity congruent to a mod p; zero for p | a
    static PadicInt teichmuller(const Integer& a, unsigned long p, unsigned prec);

    unsigned long prime() const { return p_; }
    unsigned precision() const { return prec_; }
    const Integer& lift() const { return v_; }

    // p-adic valuation truncated at the precision: a residue divisible by
    // p^prec reports prec ("at least prec")
    unsigned valuation() const;
    bool is_zero() const { return v_ == 0; }
    bool is_unit() const { return v_ % Integer(p_) != 0; }
    PadicInt inverse() const;  // requires is_unit

    PadicInt operator-() const;
    PadicInt& operator+=(const PadicInt& o);
    PadicInt& operator-=(const PadicInt& o);
    PadicInt& operator*=(const PadicInt& o);

    std::string str() const;  // "v + O(p^prec)"

private:
    unsigned long p_;
    unsigned prec_;
    Integer v_;
    Integer modulus() const;
    void match(const PadicInt& o);  // shrink to common precision, check prime
};

PadicInt operator+(PadicInt a, const PadicInt& b);
PadicInt operator-(PadicInt a, const PadicInt& b);
PadicInt operator*(PadicInt a, const PadicInt& b);
bool operator==(const PadicInt& a, const PadicInt& b);
bool operator!=(const PadicInt& a, const PadicInt& b);
PadicInt pow(const PadicInt& a, unsigned long e);

// Evaluate a cyclotomic element whose order divides p-1 inside Z_p by the
// embedding zeta_{p-1} -> teichmuller(g0), g0 the smallest primitive root
// mod p.  Coefficients must be p-integral.
PadicInt embed_cyclo(const CycloElt& x, unsigned long p, unsigned prec);

}  // namespace padl
