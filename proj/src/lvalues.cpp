#include "padl/lvalues.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace padl {

namespace {

Integer rational_floor(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
}

// positive generator of (I /\ Z) for an integral ideal
Integer integer_generator(const FracIdeal& I) {
    Rational sa = I.scale() * Rational(I.hnf_a());
    if (sa.get_den() != 1) throw std::logic_error("ideal is not integral");
    return sa.get_num();
}

// truncated power series with coefficients in K
using KSeries = std::vector<FieldElt>;

KSeries kseries_mul(const KSeries& A, const KSeries& B, size_t len, const QuadField& F) {
    KSeries C(len, FieldElt(F, Rational(0)));
    for (size_t i = 0; i < A.size() && i < len; ++i)
        for (size_t j = 0; j < B.size() && i + j < len; ++j) C[i + j] += A[i] * B[j];
    return C;
}

KSeries kseries_inverse(const KSeries& A, size_t len, const QuadField& F) {
    KSeries C(len, FieldElt(F, Rational(0)));
    FieldElt lead = A.at(0).inverse();
    C[0] = lead;
    for (size_t n = 1; n < len; ++n) {
        FieldElt acc(F, Rational(0));
        for (size_t j = 1; j <= n; ++j)
            if (j < A.size()) acc += A[j] * C[n - j];
        C[n] = -(lead * acc);
    }
    return C;
}

// Special value at s = 1-k of the cone zeta
//   Z(s) = sum_{n1,n2 >= 0} N((x1+n1) v1 + (x2+n2) v2)^{-s},
// v1, v2 totally positive, x1 in (0,1], x2 in [0,1).  Splitting the Mellin
// integral of the product of the two generating functions
//   e^{(1-x) y}/(e^y - 1) = sum_r B_r(1-x) y^{r-1}/r!
// at t2 = w t1 and t1 = w t2 turns the double pole of Gamma(s)^2 Z(s) into
// a Taylor coefficient in w:
//   Z(1-k) = ((k-1)!)^2 (1/2) sum_{orderings} [w^{k-1}]
//            sum_{r+r'=2k} (B_r(1-x1)/r!)(B_{r'}(1-x2)/r'!) E^{r-1} F^{r'-1}
// with E(w) = v1' + v1'' w, F(w) = v2' + v2'' w in the first embedding
// ordering and the two embeddings swapped in the second.  Tracking the first
// ordering with coefficients in K itself makes the second the field
// conjugate, so the average of the orderings is half the trace.
Rational shintani_cone_value(const QuadField& F, const FieldElt& v1, const FieldElt& v2,
                             const Rational& x1, const Rational& x2, unsigned k) {
    if (F.degree != 2) throw std::logic_error("cone values are a degree-2 tool");
    size_t len = k;
    KSeries E{v1, v1.conj()};
    KSeries Fs{v2, v2.conj()};

    // powers E^{r-1} for r = 0..2k (r = 0 is the series inverse)
    std::vector<KSeries> Ep(2 * k + 1), Fp(2 * k + 1);
    Ep[0] = kseries_inverse(E, len, F);
    Fp[0] = kseries_inverse(Fs, len, F);
    Ep[1] = KSeries{FieldElt(F, Rational(1))};
    Fp[1] = KSeries{FieldElt(F, Rational(1))};
    for (unsigned r = 2; r <= 2 * k; ++r) {
        Ep[r] = kseries_mul(Ep[r - 1], E, len, F);
        Fp[r] = kseries_mul(Fp[r - 1], Fs, len, F);
    }

    Rational omx1 = Rational(1) - x1;
    Rational omx2 = Rational(1) - x2;
    FieldElt total(F, Rational(0));
    for (unsigned r = 0; r <= 2 * k; ++r) {
        unsigned rp = 2 * k - r;
        Rational cr = bernoulli_poly(r, omx1) / Rational(factorial(r));
        if (cr == 0) continue;
        Rational crp = bernoulli_poly(rp, omx2) / Rational(factorial(rp));
        if (crp == 0) continue;
        KSeries prod = kseries_mul(Ep[r], Fp[rp], len, F);
        Rational c = cr * crp;
        total += FieldElt(F, c) * prod[k - 1];
    }

    // half trace averages the two embedding orderings
    Rational tr = total.trace();
    Rational fact = Rational(factorial(k - 1) * factorial(k - 1));
    Rational out = fact * tr / 2;
    out.canonicalize();
    return out;
}

Rational partial_zeta_deg1(const RayClassData& G, unsigned cls, unsigned k) {
    FracIdeal Pm = G.prime_ideal().pow(static_cast<long>(G.level()));
    Integer f = integer_generator(Pm);
    Integer a = G.reps()[cls].scale().get_num();
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), f.get_mpz_t());
    if (r == 0) r = f;  // level 0: the single class uses x = 1
    Rational x(r, f);
    x.canonicalize();
    Rational val = -qpow(Rational(f), static_cast<long>(k) - 1) * bernoulli_poly(k, x) / Rational(k);
    val.canonicalize();
    return val;
}

Rational partial_zeta_deg2(const RayClassData& G, unsigned cls, unsigned k) {
    const QuadField& F = G.field();
    FracIdeal a = G.reps()[G.inv(cls)];  // integral representative of C^{-1}
    unsigned m = G.level();
    FracIdeal Pm = G.prime_ideal().pow(static_cast<long>(m));
    FracIdeal Lat = Pm * a;

    // delta in a with delta = 1 mod P^m (delta = 0 at level 0, where the
    // congruence is empty and the coset is the ideal itself)
    FieldElt A1 = a.basis1(), A2 = a.basis2();
    Integer pz = integer_generator(Pm);
    bool have_delta = false;
    FieldElt delta(F, Rational(0));
    for (Integer i = 0; i < pz && !have_delta; ++i)
        for (Integer j = 0; j < pz && !have_delta; ++j) {
            FieldElt cand = FieldElt(F, Rational(i)) * A1 + FieldElt(F, Rational(j)) * A2;
            FieldElt diff = cand - FieldElt(F, Rational(1));
            if (diff.is_zero() || Pm.contains(diff)) {
                delta = cand;
                have_delta = true;
            }
        }
    if (!have_delta) throw std::logic_error("no residue-one element in the class representative");

    // cone generators c, c eps+ with c the positive integer generating Lat /\ Z
    Integer cz = integer_generator(Lat);
    FieldElt v1(F, Rational(cz));
    FieldElt v2 = v1 * G.eps_plus();

    Rational detL = (Lat.scale() * Rational(Lat.hnf_a())) * (Lat.scale() * Rational(Lat.hnf_c()));
    Rational detM = Rational(cz) * v2.b();
    if (detM < 0) detM = -detM;
    Rational idxq = detM / detL;
    idxq.canonicalize();
    if (idxq.get_den() != 1) throw std::logic_error("cone lattice is not a sublattice of the ideal");
    unsigned long index = idxq.get_num().get_ui();

    FieldElt B1 = Lat.basis1(), B2 = Lat.basis2();
    Rational total(0);
    for (unsigned t = 0; t < G.eps_plus_order(); ++t) {
        FieldElt delta_t = delta * pow(G.eps_plus(), -static_cast<long>(t));
        std::set<std::pair<Rational, Rational>> seen;
        for (unsigned long i = 0; i < index && seen.size() < index; ++i)
            for (unsigned long j = 0; j < index && seen.size() < index; ++j) {
                FieldElt rho = delta_t + FieldElt(F, Rational(Integer(i))) * B1 + FieldElt(F, Rational(Integer(j))) * B2;
                // coordinates of rho in the basis (v1, v2)
                Rational y2 = rho.b() / v2.b();
                y2.canonicalize();
                Rational y1 = (rho.a() - y2 * v2.a()) / v1.a();
                y1.canonicalize();
                Rational f1 = y1 - Rational(rational_floor(y1));
                Rational f2 = y2 - Rational(rational_floor(y2));
                f1.canonicalize();
                f2.canonicalize();
                if (!seen.insert({f1, f2}).second) continue;
                Rational x1 = f1 == 0 ? Rational(1) : f1;
                total += shintani_cone_value(F, v1, v2, x1, f2, k);
            }
        if (seen.size() != index) throw std::logic_error("coset enumeration missed part of the quotient");
    }

    Rational Na = a.norm();
    Rational out = qpow(Na, 1 - static_cast<long>(k)) * total;
    out.canonicalize();
    return out;
}

Integer extract_p(const FracIdeal& prime) {
    Integer np = prime.norm().get_num();
    if (is_prime(np)) return np;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), np.get_mpz_t());
    if (r * r != np || !is_prime(r)) throw std::invalid_argument("ideal norm is not a prime power");
    return r;
}

}  // namespace

Rational partial_zeta_neg(const RayClassData& G, unsigned cls, unsigned k) {
    if (k == 0) throw std::invalid_argument("partial zeta special values start at k = 1");
    if (cls >= G.order()) throw std::invalid_argument("class index out of range");
    return G.field().degree == 1 ? partial_zeta_deg1(G, cls, k) : partial_zeta_deg2(G, cls, k);
}

std::vector<Rational> partial_zeta_table_serial(const RayClassData& G, unsigned k) {
    std::vector<Rational> out(G.order());
    for (unsigned j = 0; j < G.order(); ++j) out[j] = partial_zeta_neg(G, j, k);
    return out;
}

std::vector<Rational> partial_zeta_table(const RayClassData& G, unsigned k) {
#ifdef PADL_HAVE_OPENMP
    std::vector<Rational> out(G.order());
#pragma omp parallel for schedule(dynamic)
    for (long j = 0; j < static_cast<long>(G.order()); ++j)
        out[j] = partial_zeta_neg(G, static_cast<unsigned>(j), k);
    return out;
#else
    return partial_zeta_table_serial(G, k);
#endif
}

CycloElt hecke_L_neg(const HeckeChar& chi, unsigned k) {
    const RayClassData& G = chi.group();
    std::vector<Rational> table = partial_zeta_table(G, k);
    CycloElt total(Rational(0));
    for (unsigned j = 0; j < G.order(); ++j) total = total + chi.value(j) * CycloElt(table[j]);
    return total;
}

Rational dedekind_zeta_neg(const QuadField& F, unsigned k) {
    FracIdeal P2 = primes_above(F, Integer(2)).at(0);
    auto G0 = RayClassData::build(F, P2, 0);
    std::vector<Rational> table = partial_zeta_table(*G0, k);
    Rational total(0);
    for (const Rational& v : table) total += v;
    total.canonicalize();
    return total;
}

FieldElt additive_character_base(const QuadField& F, const FracIdeal& prime, unsigned m) {
    FieldElt pi = prime.canonical_generator();
    FieldElt d = different_ideal(F).canonical_generator();
    return pow(pi, static_cast<long>(m)) * d;
}

Integer residue_characteristic(const FracIdeal& prime) { return extract_p(prime); }

Integer additive_character_exponent(const FieldElt& x, const FieldElt& base, const Integer& pm) {
    FieldElt ratio = x / base;
    Rational q = ratio.trace() * Rational(pm);
    q.canonicalize();
    if (q.get_den() != 1) throw std::invalid_argument("additive character exponent is not integral");
    Integer e;
    mpz_mod(e.get_mpz_t(), q.get_num().get_mpz_t(), pm.get_mpz_t());
    return e;
}

CycloElt gauss_sum(const HeckeChar& chi) {
    HeckeChar prim = primitive_avatar(chi);
    const RayClassData& H = prim.group();
    unsigned mc = H.level();
    if (mc == 0) return CycloElt(Rational(1));

    const QuadField& F = H.field();
    Integer p = extract_p(H.prime_ideal());
    Integer pm = zpow(p, mc);
    if (!mpz_fits_slong_p(pm.get_mpz_t())) throw std::invalid_argument("conductor too large for a root of unity order");
    unsigned long pm_ul = pm.get_ui();
    FieldElt base = additive_character_base(F, H.prime_ideal(), mc);

    CycloElt total(Rational(0));
    for (const FieldElt& x : H.ring().unit_residues()) {
        FieldElt lift = H.totally_positive_lift(x);
        Integer e = additive_character_exponent(lift, base, pm);
        total = total + prim.value_residue(x) * CycloElt::root_of_unity(pm_ul, e.get_si());
    }
    return total;
}

CycloElt reciprocal_L_at_k(const HeckeChar& chi, unsigned k) {
    if (k == 0) throw std::invalid_argument("reciprocal values start at k = 1");
    const RayClassData& G = chi.group();
    const QuadField& F = G.field();
    unsigned r = F.degree;
    Rational Np = G.prime_ideal().norm();

    if (chi.is_trivial()) {
        Rational zk = dedekind_zeta_neg(F, k);
        if (zk == 0) throw std::domain_error("zeta_K(1-k) vanishes; k does not match the trivial parity");
        Rational val = Rational(1) / zk;
        if (G.level() >= 1) {
            // the level sum drops the P-Euler factor: divide by (1 - Np^{-k})
            Rational npk = qpow(Np, static_cast<long>(k));
            val *= npk / (npk - 1);
        }
        val.canonicalize();
        return CycloElt(val);
    }

    HeckeChar inv_prim = primitive_avatar(chi.power(-1));
    unsigned mc = inv_prim.group().level();
    CycloElt L = hecke_L_neg(inv_prim, k);
    if (L.is_zero()) throw std::domain_error("L(1-k) vanishes; character parity does not match k");
    CycloElt tau = gauss_sum(inv_prim);
    Rational sign = (static_cast<unsigned long>(k) * r) % 2 == 0 ? Rational(1) : Rational(-1);
    Rational scale = sign * qpow(Np, static_cast<long>(mc) * (static_cast<long>(k) - 1));
    return CycloElt(scale) * tau * L.inverse();
}

namespace {

double zeta2_from_counts(const std::vector<long>& r, unsigned long B) {
    double sum = 0.0;
    double cum = 0.0;
    for (unsigned long n = 1; n <= B; ++n) {
        sum += static_cast<double>(r[n]) / (static_cast<double>(n) * static_cast<double>(n));
        cum += static_cast<double>(r[n]);
    }
    // ideal counts grow linearly, so the tail of sum r(n)/n^2 is about
    // (mean of r) / B
    return sum + cum / static_cast<double>(B) / static_cast<double>(B);
}

}  // namespace

double dedekind_zeta2_numeric_serial(const QuadField& F, unsigned long terms) {
    std::vector<long> r(terms + 1, 0);
    for (unsigned long d = 1; d <= terms; ++d) {
        int chi = kronecker(F.disc, Integer(d));
        if (chi == 0) continue;
        for (unsigned long nd = d; nd <= terms; nd += d) r[nd] += chi;
    }
    return zeta2_from_counts(r, terms);
}

double dedekind_zeta2_numeric(const QuadField& F, unsigned long terms) {
#ifdef PADL_HAVE_OPENMP
    std::vector<long> r(terms + 1, 0);
#pragma omp parallel
    {
        std::vector<long> local(terms + 1, 0);
#pragma omp for schedule(dynamic, 64) nowait
        for (long d = 1; d <= static_cast<long>(terms); ++d) {
            int chi = kronecker(F.disc, Integer(d));
            if (chi == 0) continue;
            for (unsigned long nd = d; nd <= terms; nd += static_cast<unsigned long>(d)) local[nd] += chi;
        }
#pragma omp critical
        for (unsigned long n = 1; n <= terms; ++n) r[n] += local[n];
    }
    return zeta2_from_counts(r, terms);
#else
    return dedekind_zeta2_numeric_serial(F, terms);
#endif
}

}  // namespace padl
