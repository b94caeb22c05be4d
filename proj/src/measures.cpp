#include "padl/measures.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace padl {

namespace {

unsigned long smallest_primitive_root(unsigned long p) {
    for (unsigned long g = 2; g < p; ++g) {
        unsigned long x = g, ord = 1;
        while (x != 1) {
            x = x * g % p;
            ++ord;
        }
        if (ord == p - 1) return g;
    }
    throw std::logic_error("no primitive root");
}

unsigned long dlog_mod(unsigned long g, unsigned long a, unsigned long p) {
    unsigned long x = 1;
    for (unsigned long e = 0; e < p - 1; ++e) {
        if (x == a) return e;
        x = x * g % p;
    }
    throw std::invalid_argument("discrete log of a non-unit");
}

unsigned class_order(const RayClassData& G, unsigned cls) {
    unsigned ord = 1, cur = cls;
    while (cur != G.identity()) {
        cur = G.mul(cur, cls);
        ++ord;
    }
    return ord;
}

// per-class discrete logs of N(rep) mod p, shared by the omega helpers
std::vector<unsigned long> norm_dlogs(const RayClassData& G) {
    Integer p = residue_characteristic(G.prime_ideal());
    unsigned long pl = p.get_ui();
    unsigned long g0 = smallest_primitive_root(pl);
    std::vector<unsigned long> out;
    out.reserve(G.order());
    for (const auto& rep : G.reps()) {
        Integer n = rep.norm().get_num() % p;
        out.push_back(dlog_mod(g0, n.get_ui(), pl));
    }
    // The norm of a ray-trivial element is only congruent to 1 mod p when the
    // prime is inert or ramified (or the field is Q); when p splits the mod-p
    // norm residue depends on the representative and no Teichmuller character
    // exists on this group.  Check multiplicativity outright.
    for (unsigned a = 0; a < G.order(); ++a)
        for (unsigned b = 0; b < G.order(); ++b)
            if ((out[a] + out[b]) % (pl - 1) != out[G.mul(a, b)])
                throw std::domain_error(
                    "the norm residue mod p is not class-invariant; no Teichmuller decomposition");
    return out;
}

}  // namespace

Distribution build_lambda(const RayClassPtr& Gm, unsigned k) {
    if (Gm->level() == 0) throw std::invalid_argument("the distribution needs level >= 1");
    const QuadField& F = Gm->field();
    auto G0 = RayClassData::build(F, Gm->prime_ideal(), 0);
    const auto& res = Gm->ring().unit_residues();
    CycloElt inv_nu(Rational(1, static_cast<unsigned long>(Gm->eps_plus_order())));

    Distribution d{Gm, k, {}, Rational(0), {}};
    d.values.reserve(G0->order() * res.size());
    d.cell_class.reserve(G0->order() * res.size());
    for (unsigned j = 0; j < G0->order(); ++j) {
        CuspData cusp = cusp_for_class(*G0, j);
        auto tab = lambda_coefficient_table(Gm, cusp, k);
        unsigned bji = Gm->inv(Gm->class_of(cusp.b));
        for (size_t ai = 0; ai < res.size(); ++ai) {
            d.values.push_back(inv_nu * tab[ai].value);
            d.cell_class.push_back(Gm->mul(bji, Gm->class_of_residue(res[ai])));
        }
    }

    if (k % 2 == 0) {
        // Haar coefficient from the total-mass calibration; absent at odd k,
        // where the trivial character does not match the parity
        Rational N = Gm->prime_ideal().norm();
        Rational zk = dedekind_zeta_neg(F, k);
        long kl = static_cast<long>(k);
        Rational target = Rational(1) / ((Rational(1) - qpow(N, kl - 1)) * zk);
        Rational cusp_total = (Rational(1) - Rational(1) / N - qpow(N, -kl)) /
                              ((Rational(1) - qpow(N, -kl)) * zk);
        d.haar_cell = (target - cusp_total) / Rational(static_cast<unsigned long>(res.size()));
    }
    return d;
}

CycloElt integrate_character(const Distribution& d, const HeckeChar& chi, bool inverse) {
    if (chi.group_ptr().get() != d.group.get())
        throw std::invalid_argument("the character lives on a different group");
    CycloElt haar(d.haar_cell);
    CycloElt total;
    for (size_t i = 0; i < d.values.size(); ++i) {
        unsigned cls = d.cell_class[i];
        if (inverse) cls = d.group->inv(cls);
        total += chi.value(cls) * (d.values[i] + haar);
    }
    return total;
}

bool interpolation_applicable(const HeckeChar& chi, unsigned k) { return chi.parity_matches(k); }

CycloElt interpolation_target(const HeckeChar& chi, unsigned k) {
    if (!chi.parity_matches(k))
        throw std::domain_error("L(1-k) vanishes; character parity does not match k");
    const QuadField& F = chi.group().field();
    Rational hplus(narrow_class_number(F));
    if (chi.is_trivial()) {
        Rational N = chi.group().prime_ideal().norm();
        return CycloElt(hplus / ((Rational(1) - qpow(N, k - 1)) * dedekind_zeta_neg(F, k)));
    }
    if (conductor_exponent(chi) != chi.group().level())
        throw std::invalid_argument("the interpolation identity needs the character primitive or trivial");
    return CycloElt(hplus) * hecke_L_neg(chi, k).inverse();
}

CycloElt dr_moment(const HeckeChar& chi, unsigned k, const FracIdeal& c) {
    CycloElt twist = CycloElt(Rational(1)) - chi.value_ideal(c) * CycloElt(qpow(c.norm(), k));
    return twist * hecke_L_neg(chi, k);
}

std::vector<Rational> mu_class_values(const RayClassPtr& Gm, const FracIdeal& c) {
    unsigned n = Gm->order();
    std::vector<CycloElt> acc(n);
    for (const auto& chi : characters_of(Gm)) {
        CycloElt mom = dr_moment(chi, 1, c);
        if (mom == CycloElt()) continue;
        HeckeChar bar = chi.conjugate();
        for (unsigned C = 0; C < n; ++C) acc[C] += bar.value(C) * mom;
    }
    CycloElt scale(Rational(1, static_cast<unsigned long>(n)));
    std::vector<Rational> out;
    out.reserve(n);
    for (unsigned C = 0; C < n; ++C) {
        CycloElt v = scale * acc[C];
        if (!v.is_rational()) throw std::logic_error("measure mass is not rational");
        out.push_back(v.rational_value());
    }
    return out;
}

Distribution build_mu1c(const RayClassPtr& Gm, const FracIdeal& c) {
    std::vector<Rational> cls_vals = mu_class_values(Gm, c);
    const QuadField& F = Gm->field();
    auto G0 = RayClassData::build(F, Gm->prime_ideal(), 0);
    const auto& res = Gm->ring().unit_residues();
    Rational nu(static_cast<unsigned long>(Gm->eps_plus_order()));

    Distribution d{Gm, 1, {}, Rational(0), {}};
    d.values.reserve(G0->order() * res.size());
    d.cell_class.reserve(G0->order() * res.size());
    for (unsigned j = 0; j < G0->order(); ++j) {
        unsigned bji = Gm->inv(Gm->class_of(G0->reps()[j]));
        for (size_t ai = 0; ai < res.size(); ++ai) {
            unsigned cls = Gm->mul(bji, Gm->class_of_residue(res[ai]));
            d.cell_class.push_back(cls);
            d.values.push_back(CycloElt(cls_vals[cls] / nu));
        }
    }
    return d;
}

std::vector<CycloElt> class_masses(const Distribution& d) {
    std::vector<CycloElt> out(d.group->order());
    CycloElt haar(d.haar_cell);
    for (size_t i = 0; i < d.values.size(); ++i) out[d.cell_class[i]] += d.values[i] + haar;
    return out;
}

PadicInt dr_moment_riemann(const RayClassPtr& Gm, const FracIdeal& c, const HeckeChar& chi, unsigned k,
                           unsigned prec) {
    Integer p = residue_characteristic(Gm->prime_ideal());
    unsigned long pl = p.get_ui();
    std::vector<Rational> mu = mu_class_values(Gm, c);
    PadicInt total(pl, prec, Integer(0));
    for (unsigned C = 0; C < Gm->order(); ++C) {
        PadicInt term = embed_cyclo(chi.value(C), pl, prec);
        term *= pow(PadicInt::from_rational(Gm->reps()[C].norm(), pl, prec), k - 1);
        term *= PadicInt::from_rational(mu[C], pl, prec);
        total += term;
    }
    return total;
}

std::vector<CycloElt> omega_values(const RayClassPtr& Gm) {
    Integer p = residue_characteristic(Gm->prime_ideal());
    unsigned long order = p.get_ui() - 1;
    std::vector<CycloElt> out;
    out.reserve(Gm->order());
    for (unsigned long d : norm_dlogs(*Gm)) out.push_back(CycloElt::root_of_unity(order, static_cast<long>(d)));
    return out;
}

unsigned omega_order(const RayClassPtr& Gm) {
    Integer p = residue_characteristic(Gm->prime_ideal());
    unsigned long m = p.get_ui() - 1;
    unsigned long g = m;
    for (unsigned long d : norm_dlogs(*Gm)) g = std::gcd(g, d);
    return static_cast<unsigned>(m / g);
}

std::vector<unsigned> delta_component(const RayClassPtr& Gm) {
    unsigned n = Gm->order();
    Integer p = residue_characteristic(Gm->prime_ideal());
    unsigned long pl = p.get_ui();
    unsigned long q1 = n, ps = 1;
    while (q1 % pl == 0) {
        q1 /= pl;
        ps *= pl;
    }
    unsigned long e = 0;
    if (q1 > 1) {
        unsigned long inv = 0;
        for (unsigned long x = 1; x < q1; ++x)
            if (ps % q1 * x % q1 == 1) {
                inv = x;
                break;
            }
        e = ps * inv;
    }
    std::vector<unsigned> out(n);
    for (unsigned C = 0; C < n; ++C) {
        unsigned acc = Gm->identity();
        for (unsigned long t = 0; t < e; ++t) acc = Gm->mul(acc, C);
        out[C] = acc;
    }
    return out;
}

std::vector<CycloElt> omega_branch(const std::vector<CycloElt>& masses, const RayClassPtr& Gm, unsigned i) {
    if (masses.size() != Gm->order()) throw std::invalid_argument("one mass per class");
    std::vector<CycloElt> omg = omega_values(Gm);
    std::vector<unsigned> image = delta_component(Gm);
    std::set<unsigned> delta(image.begin(), image.end());
    std::vector<CycloElt> out(Gm->order());
    for (unsigned d : delta) {
        CycloElt w = pow(omg[d].conj(), static_cast<long>(i));  // omega(d)^{-i}
        for (unsigned C = 0; C < Gm->order(); ++C) out[C] += w * masses[Gm->mul(d, C)];
    }
    return out;
}

unsigned gamma_class_index(const RayClassPtr& Gm) {
    unsigned n = Gm->order();
    Integer p = residue_characteristic(Gm->prime_ideal());
    unsigned long pl = p.get_ui();
    unsigned long ps = 1;
    for (unsigned long q1 = n; q1 % pl == 0; q1 /= pl) ps *= pl;
    if (ps == 1) return Gm->identity();
    std::vector<CycloElt> omg = omega_values(Gm);
    CycloElt one(Rational(1));
    // conventional choice first: the class of (1+p), which generates the
    // norm-coordinate image of Gamma whenever it has full order
    unsigned cand =
        Gm->class_of(FracIdeal::principal(FieldElt(Gm->field(), Rational(1) + Rational(p))));
    if (omg[cand] == one && class_order(*Gm, cand) == ps) return cand;
    for (unsigned C = 0; C < n; ++C)
        if (omg[C] == one && class_order(*Gm, C) == ps) return C;
    throw std::logic_error("no generator with trivial Teichmuller part");
}

IwasawaSeries to_iwasawa_series(const std::vector<CycloElt>& branch, const RayClassPtr& Gm,
                                unsigned gamma_class, unsigned precision, unsigned truncation) {
    if (branch.size() != Gm->order()) throw std::invalid_argument("one mass per class");
    if (truncation == 0) throw std::invalid_argument("the truncation must be positive");
    Integer p = residue_characteristic(Gm->prime_ideal());
    unsigned long pl = p.get_ui();
    unsigned ps = class_order(*Gm, gamma_class);

    IwasawaSeries f{pl, precision, truncation,
                    std::vector<PadicInt>(truncation, PadicInt(pl, precision, Integer(0)))};
    unsigned cur = Gm->identity();
    for (unsigned n = 0; n < ps; ++n) {
        PadicInt mass = embed_cyclo(branch[cur], pl, precision);
        Integer binom = 1;
        for (unsigned j = 0; j < truncation && j <= n; ++j) {
            if (j > 0) binom = binom * Integer(n - j + 1) / Integer(j);
            f.coeffs[j] += mass * PadicInt(pl, precision, binom);
        }
        cur = Gm->mul(cur, gamma_class);
    }
    return f;
}

IwasawaSeries convolve(const IwasawaSeries& f, const IwasawaSeries& g) {
    if (f.p != g.p) throw std::invalid_argument("series over different primes");
    unsigned prec = std::min(f.precision, g.precision);
    unsigned M = std::min(f.truncation, g.truncation);
    IwasawaSeries h{f.p, prec, M, std::vector<PadicInt>(M, PadicInt(f.p, prec, Integer(0)))};
    for (unsigned i = 0; i < M; ++i)
        for (unsigned j = 0; i + j < M; ++j) h.coeffs[i + j] += f.coeffs[i] * g.coeffs[j];
    return h;
}

IwasawaSeries series_invert(const IwasawaSeries& f) {
    if (f.coeffs.empty() || !f.coeffs[0].is_unit())
        throw std::domain_error(
            "constant term is not a p-adic unit; the measure is not invertible in the Iwasawa algebra");
    PadicInt c0 = f.coeffs[0].inverse();
    IwasawaSeries g{f.p, f.precision, f.truncation,
                    std::vector<PadicInt>(f.truncation, PadicInt(f.p, f.precision, Integer(0)))};
    g.coeffs[0] = c0;
    for (unsigned n = 1; n < f.truncation; ++n) {
        PadicInt s(f.p, f.precision, Integer(0));
        for (unsigned j = 1; j <= n; ++j) s += f.coeffs[j] * g.coeffs[n - j];
        g.coeffs[n] = -(c0 * s);
    }
    return g;
}

std::vector<CycloElt> mu_inverse_classes(const RayClassPtr& Gm, const FracIdeal& c) {
    unsigned n = Gm->order();
    std::vector<CycloElt> acc(n);
    for (const auto& chi : characters_of(Gm)) {
        CycloElt mom = dr_moment(chi, 1, c);
        if (mom == CycloElt()) continue;
        CycloElt rec = mom.inverse();
        HeckeChar bar = chi.conjugate();
        for (unsigned C = 0; C < n; ++C) acc[C] += bar.value(C) * rec;
    }
    CycloElt scale(Rational(1, static_cast<unsigned long>(n)));
    for (unsigned C = 0; C < n; ++C) acc[C] = scale * acc[C];
    return acc;
}

std::vector<CycloElt> mu_star_classes(const RayClassPtr& Gm, const FracIdeal& c) {
    std::vector<CycloElt> inv = mu_inverse_classes(Gm, c);
    unsigned cinv = Gm->inv(Gm->class_of(c));
    CycloElt Nc(c.norm());
    std::vector<CycloElt> out(Gm->order());
    for (unsigned C = 0; C < Gm->order(); ++C) out[C] = inv[C] - Nc * inv[Gm->mul(cinv, C)];
    return out;
}

CycloElt mu_star_moment(const HeckeChar& chi, unsigned k, const FracIdeal& c) {
    CycloElt mom = dr_moment(chi, k, c);
    if (mom == CycloElt()) return CycloElt();
    CycloElt twist = CycloElt(Rational(1)) - chi.value_ideal(c) * CycloElt(qpow(c.norm(), k));
    return twist * mom.inverse();
}

}  // namespace padl
