#pragma once

#include "padl/rational.hpp"

#include <complex>
#include <string>
#include <vector>

namespace padl {

// Dense polynomial over Q, coefficient i belongs to x^i.
using QPoly = std::vector<Rational>;

// n-th cyclotomic polynomial, monic with integer coefficients, computed by
// exact division of x^n - 1 by all lower-order factors.  Cached; safe to call
// from parallel regions.
const QPoly& cyclotomic_poly(unsigned long n);

// Element of Q(zeta_n) in the power basis 1, z, ..., z^{phi(n)-1} mod Phi_n.
// The stored order is part of the representation, not of the value: mixed
// order arithmetic lifts both operands to the lcm of their orders first, and
// equality compares after lifting, so the same algebraic number stored at
// different orders compares equal.
class CycloElt {
public:
    CycloElt();  // zero, order 1
    CycloElt(const Rational& a);
    CycloElt(long a);
    // Any coefficient list is accepted and reduced mod Phi_n.
    CycloElt(unsigned long order, std::vector<Rational> coeffs);

    // zeta_n^power, any integer power
    static CycloElt root_of_unity(unsigned long n, long power);

    unsigned long order() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // throws unless is_rational()

    CycloElt lifted_to(unsigned long m) const;  // requires order() | m
    // The same value at the smallest storage order: the minimal d | order()
    // with the element fixed by Gal(Q(zeta_order)/Q(zeta_d)), re-expressed in
    // the power basis of Q(zeta_d).
    CycloElt reduced() const;

    CycloElt operator-() const;
    CycloElt& operator+=(const CycloElt& o);
    CycloElt& operator-=(const CycloElt& o);
    CycloElt& operator*=(const CycloElt& o);
    CycloElt& operator/=(const CycloElt& o);

    // zeta -> zeta^c for gcd(c, order) = 1; fixes rationals
    CycloElt galois(unsigned long c) const;
    CycloElt conj() const;     // complex conjugation, zeta -> zeta^{-1}
    CycloElt inverse() const;  // throws on zero

    std::complex<double> complex_eval() const;
    std::string str() const;

private:
    unsigned long n_;
    std::vector<Rational> c_;  // size phi(n_)
    void reduce(std::vector<Rational> raw);
};

CycloElt operator+(CycloElt a, const CycloElt& b);
CycloElt operator-(CycloElt a, const CycloElt& b);
CycloElt operator*(CycloElt a, const CycloElt& b);
CycloElt operator/(CycloElt a, const CycloElt& b);
bool operator==(const CycloElt& a, const CycloElt& b);
bool operator!=(const CycloElt& a, const CycloElt& b);

CycloElt pow(const CycloElt& a, long e);

unsigned long euler_phi(unsigned long n);

}  // namespace padl
