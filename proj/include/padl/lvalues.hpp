#pragma once

#include "padl/rayclass.hpp"

namespace padl {

// zeta(1-k, C) for one ray class: the Hurwitz formula in degree 1 and the
// two-generator Shintani cone decomposition in degree 2, both exact
Rational partial_zeta_neg(const RayClassData& G, unsigned cls, unsigned k);

// the full table, one value per class; the parallel builder is the default
// and the serial one is kept as a reference for tests and benchmarks
std::vector<Rational> partial_zeta_table(const RayClassData& G, unsigned k);
std::vector<Rational> partial_zeta_table_serial(const RayClassData& G, unsigned k);

// sum_C chi(C) zeta(1-k, C) over the classes of the character's own group;
// for characters of conductor below the level this already equals the
// primitive value once the conductor exponent is >= 1
CycloElt hecke_L_neg(const HeckeChar& chi, unsigned k);

// zeta_K(1-k) through the level-0 class group
Rational dedekind_zeta_neg(const QuadField& F, unsigned k);

// pi^m * d for the canonical generators pi of P and d of the different;
// base of the additive character x -> zeta_{p^m}^(p^m Tr(x / base))
FieldElt additive_character_base(const QuadField& F, const FracIdeal& prime, unsigned m);
// exponent p^m Tr(x / base) reduced mod p^m; throws if the trace is not
// p^m-integral
Integer additive_character_exponent(const FieldElt& x, const FieldElt& base, const Integer& pm);
// rational prime under a prime ideal
Integer residue_characteristic(const FracIdeal& prime);

// Gauss sum of the primitive avatar at its conductor (1 for unramified
// characters)
CycloElt gauss_sum(const HeckeChar& chi);

// exact algebraic value of (-2 pi i)^{kr} / ((k-1)!^r |D|^{(2k-1)/2} 2^r L(k, chi)),
// evaluated through the functional equation:
//   trivial chi:  (1 - Np^{-k})^{-1} / zeta_K(1-k)   (level >= 1; no Euler
//                 factor at level 0)
//   ramified chi: (-1)^{kr} N(P^{m'})^{k-1} tau(chi^{-1}) / L(1-k, chi^{-1})
CycloElt reciprocal_L_at_k(const HeckeChar& chi, unsigned k);

// numeric oracle: zeta_K(2) = sum r(n)/n^2 with r(n) = sum_{d|n} (disc|d),
// truncated at `terms` with a mean-value tail correction
double dedekind_zeta2_numeric(const QuadField& F, unsigned long terms);
double dedekind_zeta2_numeric_serial(const QuadField& F, unsigned long terms);

}  // namespace padl
