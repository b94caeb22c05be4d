#pragma once

#include "padl/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace padl {

// The rationals or a real quadratic field Q(sqrt d), d >= 2 squarefree.
// The ring of integers is Z[omega] with omega = (1 + sqrt d)/2 when
// d = 1 mod 4 and omega = sqrt d otherwise; omega satisfies
// omega^2 = t*omega - n, so the two real embeddings send omega to
// (t +- sqrt(t^2 - 4n))/2.  Place 0 takes the + sign.
struct QuadField {
    unsigned degree = 1;
    long d = 1;
    Integer disc = 1;
    Integer t = 0;
    Integer n = 0;

    static QuadField rationals();
    static QuadField real_quadratic(long d);
    bool operator==(const QuadField&) const = default;
    std::string str() const;
};

// a + b*omega with rational coordinates; b stays 0 in degree 1
class FieldElt {
public:
    FieldElt(const QuadField& F, const Rational& a, const Rational& b = Rational(0));

    const QuadField& field() const { return F_; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_integral() const;
    Rational norm() const;
    Rational trace() const;
    FieldElt conj() const;
    FieldElt inverse() const;

    // exact sign of the image under real embedding 0 or 1
    int sign_at(unsigned place) const;
    bool is_totally_positive() const;
    double approx_at(unsigned place) const;

    FieldElt operator-() const;
    FieldElt& operator+=(const FieldElt& o);
    FieldElt& operator-=(const FieldElt& o);
    FieldElt& operator*=(const FieldElt& o);
    FieldElt& operator/=(const FieldElt& o);

    std::string str() const;

private:
    QuadField F_;
    Rational a_, b_;
};

FieldElt operator+(FieldElt a, const FieldElt& b);
FieldElt operator-(FieldElt a, const FieldElt& b);
FieldElt operator*(FieldElt a, const FieldElt& b);
FieldElt operator/(FieldElt a, const FieldElt& b);
bool operator==(const FieldElt& a, const FieldElt& b);
bool operator!=(const FieldElt& a, const FieldElt& b);
FieldElt pow(const FieldElt& a, long e);

// Nonzero fractional ideal, stored as scale * (Z a + Z (b + c omega)) with
// a, c > 0, 0 <= b < a, gcd(a, b, c) = 1 and a positive rational scale.  In
// degree 1 the lattice part is trivial (a = c = 1, b = 0) and the ideal is
// scale * Z.  The representation is unique, so equality is componentwise.
class FracIdeal {
public:
    static FracIdeal unit_ideal(const QuadField& F);
    static FracIdeal principal(const FieldElt& g);
    static FracIdeal from_generators(const QuadField& F, const std::vector<FieldElt>& gens);

    const QuadField& field() const { return F_; }
    const Rational& scale() const { return s_; }
    const Integer& hnf_a() const { return a_; }
    const Integer& hnf_b() const { return b_; }
    const Integer& hnf_c() const { return c_; }

    Rational norm() const;
    bool is_integral() const;
    bool contains(const FieldElt& x) const;
    bool divides(const FracIdeal& J) const;  // J * this^{-1} integral

    FieldElt basis1() const;  // scale * a
    FieldElt basis2() const;  // scale * (b + c omega)

    FracIdeal operator*(const FracIdeal& J) const;
    FracIdeal inverse() const;
    FracIdeal conj() const;
    FracIdeal pow(long e) const;
    bool operator==(const FracIdeal&) const;

    std::optional<FieldElt> principal_generator() const;
    // the totally positive generator alpha with b-coefficient >= 0 and
    // b-coefficient of alpha/eps+ < 0 (the unique one in the unit window);
    // degree 1: the positive rational generator; throws when the ideal is
    // not principal or has no totally positive generator
    FieldElt canonical_generator() const;

    std::string str() const;

private:
    FracIdeal(const QuadField& F, const Rational& s, const Integer& a, const Integer& b, const Integer& c);
    QuadField F_;
    Rational s_;
    Integer a_, b_, c_;
};

// prime ideals over p, in deterministic order (split pair ordered by hnf_b)
std::vector<FracIdeal> primes_above(const QuadField& F, const Integer& p);
// (prime, exponent) pairs for an integral ideal, ordered by norm then hnf_b
std::vector<std::pair<FracIdeal, unsigned>> factor_ideal(const FracIdeal& I);
int mobius_ideal(const FracIdeal& I);
// all integral ideals of norm exactly n / of norm <= bound
std::vector<FracIdeal> ideals_of_norm(const QuadField& F, const Integer& n);
std::vector<FracIdeal> ideals_up_to(const QuadField& F, const Integer& bound);

// different ideal, generated by 2 omega - t (the unit ideal in degree 1)
FracIdeal different_ideal(const QuadField& F);

FieldElt fundamental_unit(const QuadField& F);  // degree 2 only
// generator of the totally positive unit group: eps or eps^2 by the norm of
// the fundamental unit; the element 1 in degree 1
FieldElt fundamental_totally_positive_unit(const QuadField& F);

unsigned class_number(const QuadField& F);
unsigned narrow_class_number(const QuadField& F);

// O / P^m for a prime ideal P; degree 1 reduces to Z/p^m with the second
// coordinate pinned to 0
class ResidueRing {
public:
    ResidueRing(const FracIdeal& P, unsigned m);

    const QuadField& field() const { return P_.field(); }
    const FracIdeal& prime() const { return P_; }
    const FracIdeal& modulus_ideal() const { return Pm_; }
    unsigned level() const { return m_; }
    const Integer& size() const { return size_; }
    const Integer& unit_count() const { return units_; }

    // canonical coordinates of the residue of an integral element
    std::pair<Integer, Integer> reduce(const FieldElt& e) const;
    FieldElt reduce_elt(const FieldElt& e) const;
    bool congruent(const FieldElt& x, const FieldElt& y) const;
    bool is_invertible(const FieldElt& e) const;
    FieldElt inverse_mod(const FieldElt& e) const;
    FieldElt pow_mod(const FieldElt& e, const Integer& k) const;

    std::vector<FieldElt> all_residues() const;
    std::vector<FieldElt> unit_residues() const;

private:
    FracIdeal P_, Pm_;
    unsigned m_;
    Integer size_, units_;
};

}  // namespace padl
