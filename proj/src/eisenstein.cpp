#include "padl/eisenstein.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace padl {

namespace {

FieldElt linear_combo(const FieldElt& g1, const FieldElt& g2, long x, long y) {
    return FieldElt(g1.field(), Rational(x)) * g1 + FieldElt(g1.field(), Rational(y)) * g2;
}

}  // namespace

CuspData cusp_for_class(const RayClassData& G0, unsigned cls) {
    if (G0.level() != 0) throw std::invalid_argument("cusps are indexed by the level-0 class group");
    const QuadField& F = G0.field();
    FracIdeal b = G0.reps().at(cls);
    if (F.degree == 1) {
        // [1/s 0; 0 s] with b = sZ: the second column generates b, the first
        // its inverse, and the determinant is 1
        FieldElt s = b.basis1();
        return CuspData{cls, s.inverse(), FieldElt(F, Rational(0)), FieldElt(F, Rational(0)), s, b};
    }
    FieldElt a3 = b.basis1(), a4 = b.basis2();
    FracIdeal binv = b.inverse();
    FieldElt g1 = binv.basis1(), g2 = binv.basis2();
    FieldElt one(F, Rational(1));
    const long W = 3;
    for (long x1 = -W; x1 <= W; ++x1)
        for (long y1 = -W; y1 <= W; ++y1)
            for (long x2 = -W; x2 <= W; ++x2)
                for (long y2 = -W; y2 <= W; ++y2) {
                    FieldElt a1 = linear_combo(g1, g2, x1, y1);
                    FieldElt a2 = linear_combo(g1, g2, x2, y2);
                    if (a1 * a4 - a2 * a3 == one) return CuspData{cls, a1, a2, a3, a4, b};
                }
    throw std::runtime_error("no unimodular completion of the class representative in the search box");
}

CuspData rescaled_cusp(const CuspData& cusp, const FieldElt& gamma) {
    if (gamma.is_zero() || !gamma.is_totally_positive())
        throw std::invalid_argument("cusp rescaling needs a totally positive gamma");
    FieldElt ginv = gamma.inverse();
    return CuspData{cusp.cls,          cusp.alpha1 * ginv, cusp.alpha2 * ginv,
                    cusp.alpha3 * gamma, cusp.alpha4 * gamma, FracIdeal::principal(gamma) * cusp.b};
}

std::vector<CycloElt> class_mobius_table(const RayClassPtr& G, unsigned k) {
    if (k == 0) throw std::invalid_argument("the Moebius sum needs weight k >= 1");
    std::vector<HeckeChar> chars = characters_of(G);
    std::vector<const HeckeChar*> live;
    std::vector<CycloElt> recip;
    for (const HeckeChar& chi : chars) {
        // the +-unit folding of the lattice sum kills every character whose
        // infinity signs do not match (-1)^k, so those drop out here rather
        // than contributing a vanishing reciprocal
        if (!chi.parity_matches(k)) continue;
        live.push_back(&chi);
        recip.push_back(reciprocal_L_at_k(chi, k));
    }
    CycloElt inv_order{Rational(1, static_cast<unsigned long>(G->order()))};
    std::vector<CycloElt> out;
    out.reserve(G->order());
    for (unsigned cls = 0; cls < G->order(); ++cls) {
        CycloElt total;
        for (size_t s = 0; s < live.size(); ++s) total += live[s]->value(cls).conj() * recip[s];
        out.push_back(inv_order * total);
    }
    return out;
}

CycloElt class_mobius_sum(const RayClassPtr& G, unsigned cls, unsigned k) {
    return class_mobius_table(G, k).at(cls);
}

double truncated_class_mobius(const RayClassPtr& G, unsigned cls, unsigned k, const Integer& bound) {
    double total = 0.0;
    for (const FracIdeal& I : ideals_up_to(G->field(), bound)) {
        if (G->level() >= 1 && G->prime_ideal().divides(I)) continue;
        int mu = mobius_ideal(I);
        if (mu == 0) continue;
        if (G->class_of(I) != cls) continue;
        total += mu / std::pow(I.norm().get_d(), static_cast<double>(k));
    }
    return total;
}

double archimedean_constant(const QuadField& F, unsigned k) {
    unsigned r = F.degree;
    if ((k * r) % 2 != 0) throw std::invalid_argument("the archimedean constant is real only for kr even");
    double absd = std::abs(F.disc.get_d());
    double num = std::pow(2.0, r) * std::pow(std::tgamma(static_cast<double>(k)), r) *
                 std::pow(absd, (2.0 * k - 1.0) / 2.0);
    double den = std::pow(2.0 * M_PI, static_cast<double>(k) * r);
    double sign = (k * r / 2) % 2 == 0 ? 1.0 : -1.0;
    return sign * num / den;
}

namespace {

// shared data for all residues of one (group, weight) pair.  The outer sum
// of the coefficient runs over unit residues rho, each weighted by the
// Moebius sum of the inverse of its class; one class contributes its whole
// eps+ window of generators, which keeps the value independent of any
// generator choice.  Over Q the window has length one and this is the
// class-by-class sum.
struct LambdaBasis {
    std::vector<CycloElt> M;        // Moebius sum of cls(rho)^{-1}, per residue
    std::vector<FieldElt> lift;     // totally positive lift of rho
    FieldElt pi;                    // canonical generator of P
    FieldElt base;                  // pi^m d
    Integer pm;                     // rational p^m, the root of unity order
    Rational np;                    // N(P)
};

LambdaBasis lambda_basis(const RayClassPtr& Gm, unsigned k) {
    if (Gm->level() == 0) throw std::invalid_argument("the distribution needs level >= 1");
    const QuadField& F = Gm->field();
    std::vector<CycloElt> cls_mobius = class_mobius_table(Gm, k);
    LambdaBasis B{{},
                  {},
                  Gm->prime_ideal().canonical_generator(),
                  additive_character_base(F, Gm->prime_ideal(), Gm->level()),
                  Integer(1),
                  Gm->prime_ideal().norm()};
    for (const FieldElt& rho : Gm->ring().unit_residues()) {
        B.M.push_back(cls_mobius[Gm->inv(Gm->class_of_residue(rho))]);
        B.lift.push_back(Gm->totally_positive_lift(rho));
    }
    Integer p = residue_characteristic(Gm->prime_ideal());
    for (unsigned i = 0; i < Gm->level(); ++i) B.pm *= p;
    return B;
}

CycloElt coefficient_value(const LambdaBasis& B, unsigned m, unsigned k, const FieldElt& routed) {
    unsigned long pml = B.pm.get_ui();
    CycloElt total;
    FieldElt piu(routed.field(), Rational(1));
    for (unsigned u = 0; u <= m; ++u) {
        CycloElt inner;
        for (size_t i = 0; i < B.M.size(); ++i) {
            Integer t = additive_character_exponent(B.lift[i] * routed * piu, B.base, B.pm);
            inner += B.M[i] * CycloElt::root_of_unity(pml, t.get_si());
        }
        long e = static_cast<long>(u) * (static_cast<long>(k) - 1) - static_cast<long>(m) * k;
        total += CycloElt(qpow(B.np, e)) * inner;
        piu *= B.pi;
    }
    return total;
}

FieldElt route_residue(const RayClassData& Gm, const CuspData& cusp, const FieldElt& a) {
    if (!Gm.ring().is_invertible(a)) throw std::invalid_argument("the residue must be invertible mod P^level");
    FieldElt alpha = Gm.totally_positive_lift(a);
    // second-row residue of the cusp matrix, then the cusp ideal scales back
    // in; the generator cancels exactly, so the value never sees the matrix
    FieldElt beta = cusp.b.canonical_generator();
    FieldElt a2prime = alpha * beta.inverse();
    return a2prime * beta;
}

}  // namespace

EisensteinCoeff lambda_coefficient(const RayClassPtr& Gm, const CuspData& cusp, const FieldElt& a, unsigned k) {
    LambdaBasis B = lambda_basis(Gm, k);
    CycloElt v = coefficient_value(B, Gm->level(), k, route_residue(*Gm, cusp, a));
    return EisensteinCoeff{k, Gm->level(), cusp.cls, a, v};
}

std::vector<EisensteinCoeff> lambda_coefficient_table_serial(const RayClassPtr& Gm, const CuspData& cusp, unsigned k) {
    LambdaBasis B = lambda_basis(Gm, k);
    std::vector<EisensteinCoeff> out;
    for (const FieldElt& a : Gm->ring().unit_residues())
        out.push_back(EisensteinCoeff{k, Gm->level(), cusp.cls, a,
                                      coefficient_value(B, Gm->level(), k, route_residue(*Gm, cusp, a))});
    return out;
}

std::vector<EisensteinCoeff> lambda_coefficient_table(const RayClassPtr& Gm, const CuspData& cusp, unsigned k) {
#ifdef PADL_HAVE_OPENMP
    LambdaBasis B = lambda_basis(Gm, k);
    std::vector<FieldElt> residues = Gm->ring().unit_residues();
    std::vector<FieldElt> routed;
    routed.reserve(residues.size());
    for (const FieldElt& a : residues) routed.push_back(route_residue(*Gm, cusp, a));
    std::vector<CycloElt> values(residues.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(residues.size()); ++i)
        values[i] = coefficient_value(B, Gm->level(), k, routed[i]);
    std::vector<EisensteinCoeff> out;
    for (size_t i = 0; i < residues.size(); ++i)
        out.push_back(EisensteinCoeff{k, Gm->level(), cusp.cls, residues[i], values[i]});
    return out;
#else
    return lambda_coefficient_table_serial(Gm, cusp, k);
#endif
}

Rational constant_term_truncated(const FracIdeal& prime, unsigned m, unsigned k, const Integer& a2,
                                 const Integer& bound) {
    if (prime.field().degree != 1) throw std::invalid_argument("constant terms are implemented over Q only");
    if (k == 0) throw std::invalid_argument("the constant term needs weight k >= 1");
    Integer p = residue_characteristic(prime);
    Integer pm = 1;
    for (unsigned i = 0; i < m; ++i) pm *= p;
    Rational total(0);
    for (Integer l = 1; l <= bound; ++l) {
        // squarefree divisors of l from its distinct prime factors
        std::vector<Integer> primes;
        Integer rest = l, q = 2;
        while (q * q <= rest) {
            if (rest % q == 0) {
                primes.push_back(q);
                while (rest % q == 0) rest /= q;
            }
            ++q;
        }
        if (rest > 1) primes.push_back(rest);
        long inner = 0;
        for (unsigned long mask = 0; mask < (1ul << primes.size()); ++mask) {
            Integer t = 1;
            int mu = 1;
            for (size_t i = 0; i < primes.size(); ++i)
                if (mask & (1ul << i)) {
                    t *= primes[i];
                    mu = -mu;
                }
            if (m >= 1 && t % pm == 0) continue;
            inner += mu;
        }
        if (inner == 0) continue;
        for (int sign : {1, -1}) {
            Integer ls = sign * l;
            Integer rem = (ls - a2) % pm;
            if (rem != 0) continue;
            total += Rational(inner) / qpow(Rational(ls), static_cast<long>(k));
        }
    }
    total.canonicalize();
    return total;
}

namespace {

std::complex<double> inv_pow(std::complex<double> w, unsigned k) {
    std::complex<double> acc(1.0, 0.0);
    std::complex<double> base = w;
    unsigned e = k;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return 1.0 / acc;
}

long first_at_least(long lo, long residue, long N) {
    // smallest value >= lo congruent to residue mod N
    long r = ((residue % N) + N) % N;
    long base = lo + ((r - lo) % N + N) % N;
    return base;
}

}  // namespace

std::complex<double> numeric_partial_eisenstein(unsigned k, long N, long a1, long a2, std::complex<double> z,
                                                long B) {
    if (N <= 0 || B <= 0) throw std::invalid_argument("modulus and box must be positive");
    bool fold = ((2 * a1) % N + N) % N == 0 && ((2 * a2) % N + N) % N == 0;
    std::complex<double> total(0.0, 0.0);
    for (long c = first_at_least(-B, a1, N); c <= B; c += N) {
        if (fold && c < 0) continue;
        for (long d = first_at_least(-B, a2, N); d <= B; d += N) {
            if (c == 0 && d == 0) continue;
            if (fold && c == 0 && d < 0) continue;
            total += inv_pow(static_cast<double>(c) * z + static_cast<double>(d), k);
        }
    }
    return total;
}

std::complex<double> numeric_lambda_partial(unsigned k, long N, long a2, std::complex<double> z, long B) {
    if (N <= 0 || B <= 0) throw std::invalid_argument("modulus and box must be positive");
    std::complex<double> total(0.0, 0.0);
    std::complex<double> Nz = static_cast<double>(N) * z;
    for (long c = -B; c <= B; ++c)
        for (long d = first_at_least(-B, a2, N); d <= B; d += N) {
            if (std::gcd(std::abs(c), std::abs(d)) != 1) continue;
            total += inv_pow(static_cast<double>(c) * Nz + static_cast<double>(d), k);
        }
    return total;
}

namespace {

// coprimality table for |c|, |d| <= B, shared by all samples
std::vector<uint8_t> coprime_mask(long B) {
    std::vector<uint8_t> mask(static_cast<size_t>(B + 1) * (B + 1));
    for (long c = 0; c <= B; ++c)
        for (long d = 0; d <= B; ++d) mask[static_cast<size_t>(c) * (B + 1) + d] = std::gcd(c, d) == 1;
    return mask;
}

std::complex<double> masked_sample(unsigned k, long N, long a2, std::complex<double> z, long B,
                                   const std::vector<uint8_t>& mask) {
    std::complex<double> total(0.0, 0.0);
    std::complex<double> Nz = static_cast<double>(N) * z;
    for (long c = -B; c <= B; ++c) {
        size_t row = static_cast<size_t>(std::abs(c)) * (B + 1);
        std::complex<double> cNz = static_cast<double>(c) * Nz;
        for (long d = first_at_least(-B, a2, N); d <= B; d += N) {
            if (!mask[row + std::abs(d)]) continue;
            total += inv_pow(cNz + static_cast<double>(d), k);
        }
    }
    return total;
}

}  // namespace

std::vector<std::complex<double>> sample_lambda_series_serial(unsigned k, long N, long a2, double y, unsigned S,
                                                              long B) {
    std::vector<uint8_t> mask = coprime_mask(B);
    std::vector<std::complex<double>> out(S);
    for (unsigned s = 0; s < S; ++s)
        out[s] = masked_sample(k, N, a2, {static_cast<double>(s) / S, y}, B, mask);
    return out;
}

std::vector<std::complex<double>> sample_lambda_series(unsigned k, long N, long a2, double y, unsigned S, long B) {
#ifdef PADL_HAVE_OPENMP
    std::vector<uint8_t> mask = coprime_mask(B);
    std::vector<std::complex<double>> out(S);
#pragma omp parallel for schedule(static)
    for (long s = 0; s < static_cast<long>(S); ++s)
        out[s] = masked_sample(k, N, a2, {static_cast<double>(s) / S, y}, B, mask);
    return out;
#else
    return sample_lambda_series_serial(k, N, a2, y, S, B);
#endif
}

std::complex<double> dft_coefficient(const std::vector<std::complex<double>>& samples, unsigned n, double y) {
    if (samples.empty()) throw std::invalid_argument("the coefficient needs at least one sample");
    size_t S = samples.size();
    std::complex<double> total(0.0, 0.0);
    for (size_t s = 0; s < S; ++s) {
        double angle = -2.0 * M_PI * static_cast<double>(n) * static_cast<double>(s) / static_cast<double>(S);
        total += samples[s] * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return total * std::exp(2.0 * M_PI * n * y) / static_cast<double>(S);
}

}  // namespace padl
