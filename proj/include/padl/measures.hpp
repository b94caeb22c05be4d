#pragma once

#include "padl/eisenstein.hpp"
#include "padl/lvalues.hpp"
#include "padl/padic.hpp"

namespace padl {

// Exact p-adic distribution on the ray class tower, stored at one level.
// The grid runs over pairs (j, a) with j a class of the level-0 group and a
// a unit residue mod P^m; the mass of a cell is values[j * nres + ai] plus
// the shared Haar term.  The cell of (j, a) sits over the ray class of
// b_j^{-1} (alpha_a), which is how characters see it.
struct Distribution {
    RayClassPtr group;             // level-m strict ray class group
    unsigned weight;               // k
    std::vector<CycloElt> values;  // cuspidal cell masses
    Rational haar_cell;            // Haar mass shared by every cell
    std::vector<unsigned> cell_class;  // ray class under each cell
};

// Weight-k Eisenstein distribution: cell (j, a) gets the normalized
// coefficient of the class-j cusp at residue a divided by nu_m (the eps+
// window order, so that lift sums telescope exactly across levels), plus
// the Haar term eta(k)/phi_m with
//
//   eta(k) = [ (1 - Np^{k-1})^{-1} - (1 - Np^{-1} - Np^{-k})(1 - Np^{-k})^{-1} ]
//            / zeta_K(1-k)
//
// calibrated so the total mass is h+ (1 - Np^{k-1})^{-1} / zeta_K(1-k); when
// the trivial character's parity does not match k the Haar term is zero.
Distribution build_lambda(const RayClassPtr& Gm, unsigned k);

// sum over cells of chi(class) * mass, or chi(class^{-1}) * mass when
// inverse is set (integration against U -> lambda(U^{-1}))
CycloElt integrate_character(const Distribution& d, const HeckeChar& chi, bool inverse = false);

// expected value of the integral of chi^{-1} against the weight-k
// distribution: h+ (1 - Np^{k-1})^{-1} / zeta_K(1-k) for the trivial
// character, h+ / L(1-k, chi) for primitive chi of matching parity
CycloElt interpolation_target(const HeckeChar& chi, unsigned k);
// false when the L-value in the target vanishes by parity, in which case
// the integral is exactly zero as well
bool interpolation_applicable(const HeckeChar& chi, unsigned k);

// (1 - chi(c) Nc^k) L(1-k, chi), the k-th moment of the c-smoothed measure
CycloElt dr_moment(const HeckeChar& chi, unsigned k, const FracIdeal& c);

// class masses of the c-smoothed level-m measure,
//   mu(C) = (1/|G|) sum_chi conj(chi)(C) dr_moment(chi, 1, c);
// Galois equivariance of the moments makes every mass rational
std::vector<Rational> mu_class_values(const RayClassPtr& Gm, const FracIdeal& c);
// the same measure on the (j, a) grid: each class spreads its mass evenly
// over its nu_m grid cells
Distribution build_mu1c(const RayClassPtr& Gm, const FracIdeal& c);

// total mass over each ray class (cells summed, Haar included)
std::vector<CycloElt> class_masses(const Distribution& d);

// level-m Riemann sum of the k-th moment: sum_C chi(C) N(rep C)^{k-1} mu(C)
// in Z_p; requires the character values to embed (order dividing p-1).
// Exact at k = 1; for k >= 2 it approximates dr_moment mod p^m.
PadicInt dr_moment_riemann(const RayClassPtr& Gm, const FracIdeal& c, const HeckeChar& chi, unsigned k,
                           unsigned prec);

// Teichmuller character of the group: omega(C) = zeta_{p-1}^dlog(N(rep C)),
// the discrete log taken to the smallest primitive root mod p so that
// embed_cyclo sends omega(C) to the Teichmuller lift of N(rep C)
std::vector<CycloElt> omega_values(const RayClassPtr& Gm);
// order q of omega on the group: [K(mu_p) : K]
unsigned omega_order(const RayClassPtr& Gm);
// prime-to-p component of each class (the image of the CRT idempotent
// exponent e = 1 mod q', e = 0 mod p^s, where |G| = q' p^s)
std::vector<unsigned> delta_component(const RayClassPtr& Gm);

// branch i of the omega decomposition applied to class masses:
//   B_i(C) = sum_{d in Delta} omega(d)^{-i} mass(d C)
// Values land in Q(zeta_{p-1}).  When omega is faithful on Delta the masses
// reassemble as mass(C) = (1/q) sum_{i mod q} B_i(C).
std::vector<CycloElt> omega_branch(const std::vector<CycloElt>& masses, const RayClassPtr& Gm, unsigned i);

// class generating the p-part of the group with trivial Teichmuller part
// (omega = 1); the branch series below is taken on its powers
unsigned gamma_class_index(const RayClassPtr& Gm);

// Power series over Z_p truncated mod (p^precision, T^truncation)
struct IwasawaSeries {
    unsigned long p;
    unsigned precision;
    unsigned truncation;
    std::vector<PadicInt> coeffs;  // truncation entries
};

// f(T) = sum_{n < p^s} branch(gamma^n) (1+T)^n with p^s the order of gamma;
// branch values must embed in Z_p
IwasawaSeries to_iwasawa_series(const std::vector<CycloElt>& branch, const RayClassPtr& Gm,
                                unsigned gamma_class, unsigned precision, unsigned truncation);

// multiplication and inversion in Z_p[[T]] mod (p^N, T^M)
IwasawaSeries convolve(const IwasawaSeries& f, const IwasawaSeries& g);
IwasawaSeries series_invert(const IwasawaSeries& f);

// class values of the convolution inverse: the reciprocal character sums
//   mu^{-1}(C) = (1/|G|) sum_{chi : moment != 0} conj(chi)(C) / dr_moment(chi, 1, c)
// (branches with vanishing moment carry no invertible mass and are skipped)
std::vector<CycloElt> mu_inverse_classes(const RayClassPtr& Gm, const FracIdeal& c);

// regularized inverse: mu*(U) = mu^{-1}(U) - Nc mu^{-1}(c^{-1} U)
std::vector<CycloElt> mu_star_classes(const RayClassPtr& Gm, const FracIdeal& c);

// k-th moment of mu*: (1 - chi(c) Nc^k) / dr_moment(chi, k, c) when the
// moment is nonzero, and 0 on the dead branches; the c-dependence cancels,
// leaving exactly 1 / L(1-k, chi) wherever the L-value is nonzero
CycloElt mu_star_moment(const HeckeChar& chi, unsigned k, const FracIdeal& c);

}  // namespace padl
