#pragma once

#include "padl/lvalues.hpp"

#include <complex>
#include <vector>

namespace padl {

// Cusp datum for a strict ideal class: a determinant-one matrix
//
//   [ alpha1  alpha3 ]
//   [ alpha2  alpha4 ]
//
// whose second column generates an integral ideal b in the chosen class and
// whose first column lies in b^{-1}.  Weight-k series attached to different
// matrices for the same class agree after the N(b)^k normalisation, which is
// why the coefficient routines below never depend on the matrix entries
// beyond the residue routing.
struct CuspData {
    unsigned cls;
    FieldElt alpha1, alpha2, alpha3, alpha4;
    FracIdeal b;
};

// cusp matrix for class `cls` of the strict class group G0 (level 0); the
// second column is the HNF basis of the stored representative and the first
// is found by a small search in its inverse
CuspData cusp_for_class(const RayClassData& G0, unsigned cls);
// the same cusp with the second column scaled by a totally positive gamma
// and the first by gamma^{-1}; same class, different matrix and ideal b
CuspData rescaled_cusp(const CuspData& cusp, const FieldElt& gamma);

// Moebius sum over one ray class, sum_{t in C} mu(t) N(t)^{-k} with t running
// over integral ideals prime to the modulus, in the normalisation of
// reciprocal_L_at_k: character orthogonality gives
//
//   M_C(k) = (1/|G|) sum_chi conj(chi)(C) / L^(P)(k, chi),
//
// and only characters with chi_v(-1) = (-1)^k at every real place
// contribute, because the +-eps folding of the defining lattice sum kills
// the rest.  At level 0 no Euler factor is removed.
CycloElt class_mobius_sum(const RayClassPtr& G, unsigned cls, unsigned k);
std::vector<CycloElt> class_mobius_table(const RayClassPtr& G, unsigned k);

// numeric oracle: the raw ideal sum over one class truncated at
// N(t) <= bound.  Unlike the projected value above it still carries the
// parity-mismatched characters, so it matches
// archimedean_constant(F,k) * complex_eval only after summing a class
// together with its images under the sign-flip classes, which is exactly
// the combination the +-identified lattice sum produces.
double truncated_class_mobius(const RayClassPtr& G, unsigned cls, unsigned k, const Integer& bound);

// the constant relating normalised and analytic values,
// A(k) = 2^r ((k-1)!)^r |D|^{(2k-1)/2} / (-2 pi i)^{kr}; requires kr even,
// which is when A(k) is real
double archimedean_constant(const QuadField& F, unsigned k);

// one Fourier coefficient of the distribution lambda
struct EisensteinCoeff {
    unsigned weight;
    unsigned level_exponent;
    unsigned cusp_class;
    FieldElt residue;
    CycloElt value;
};

// Coefficient of the level-P^m weight-k Eisenstein distribution at the grid
// point (cusp, a), for an invertible residue a mod P^m and m >= 1:
//
//   value = sum_{u=0}^{m} N(P)^{u(k-1)-mk} sum_{rho} M_{cls(rho)^{-1}}(k)
//           zeta_{p^m}^{t(rho,a,u)}
//
// where rho runs over the unit residues mod P^m, t(rho,a,u) is the additive
// character exponent of lift(rho) alpha_a pi^u against the base pi^m d, and
// alpha_a is a totally positive lift of a.  Summing residues rather than
// classes keeps the value canonical: each class is hit once per generator in
// its eps+ window, so no choice of generator enters (over Q the two sums
// coincide).  The residue is routed through the cusp as a2' = alpha_a / beta
// with beta the generator of cusp.b, and the formula multiplies the cusp
// ideal back in, so the value carries no N(b)^k or 2^r factor and is
// independent of the cusp matrix; the exponent only depends on a mod P^m,
// not on the chosen lift.  Twisting by a character collapses the residue sum
// to a Gauss sum times a reciprocal L-value, and the resulting Galois
// symmetry forces every coefficient to be a plain rational number.
EisensteinCoeff lambda_coefficient(const RayClassPtr& Gm, const CuspData& cusp, const FieldElt& a, unsigned k);
// values for every unit residue of the level ring, in ring().unit_residues()
// order; the parallel builder is the default, the serial one is the
// reference for tests and benchmarks
std::vector<EisensteinCoeff> lambda_coefficient_table(const RayClassPtr& Gm, const CuspData& cusp, unsigned k);
std::vector<EisensteinCoeff> lambda_coefficient_table_serial(const RayClassPtr& Gm, const CuspData& cusp, unsigned k);

// Constant term of the sieved weight-k series over Q at level p^m, truncated
// at |l| <= bound:
//
//   sum_{l = a2 mod p^m, 0 < |l| <= bound} l^{-k} sum_{t | l, p^m does not divide t} mu(t)
//
// At m = 0 the divisor condition is vacuous and the inner sum collapses to
// [l = +-1]; at m = 1 only l with l = +-p^j survive; at m >= 2 only units.
// Degree 1 only.
Rational constant_term_truncated(const FracIdeal& prime, unsigned m, unsigned k, const Integer& a2, const Integer& bound);

// Partial lattice sums over Q, as numeric oracles.
//
// raw congruence sum: sum over (c,d) = (a1,a2) mod N, 0 < max(|c|,|d|) <= B,
// of (cz+d)^{-k}; when N | 2 a1 and N | 2 a2 the classes of (c,d) and
// (-c,-d) coincide and the sum runs over one representative per pair, the
// one with c > 0 or c = 0, d > 0
std::complex<double> numeric_partial_eisenstein(unsigned k, long N, long a1, long a2,
                                                std::complex<double> z, long B);
// coprime sum for the lambda series: sum over gcd(c,d) = 1, d = a2 mod N,
// both signs, of (Ncz+d)^{-k}
std::complex<double> numeric_lambda_partial(unsigned k, long N, long a2, std::complex<double> z, long B);
// S equally spaced samples of the same sum on the segment height y,
// z_s = s/S + iy; the coprimality mask is computed once and shared
std::vector<std::complex<double>> sample_lambda_series(unsigned k, long N, long a2,
                                                       double y, unsigned S, long B);
std::vector<std::complex<double>> sample_lambda_series_serial(unsigned k, long N, long a2,
                                                              double y, unsigned S, long B);
// n-th Fourier coefficient from one period of samples at height y:
// a_n = e^{2 pi n y} (1/S) sum_s f(z_s) e^{-2 pi i n s / S}
std::complex<double> dft_coefficient(const std::vector<std::complex<double>>& samples,
                                     unsigned n, double y);

}  // namespace padl
