#include "padl/rayclass.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace padl {

namespace {

Integer nonneg_mod(const Integer& x, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

// finite abelian group on indices 0..n-1 given by its multiplication table
struct SmallGroup {
    unsigned n = 0;
    unsigned e = 0;
    const std::vector<std::vector<unsigned>>* mul = nullptr;

    unsigned op(unsigned a, unsigned b) const { return (*mul)[a][b]; }
    unsigned pw(unsigned a, unsigned long k) const {
        unsigned r = e;
        for (unsigned long i = 0; i < k; ++i) r = op(r, a);
        return r;
    }
    unsigned order_of(unsigned a) const {
        unsigned r = a, c = 1;
        while (r != e) {
            r = op(r, a);
            ++c;
        }
        return c;
    }
};

// cyclic basis with orders descending under divisibility: take an element of
// maximal order (the exponent), recurse on the quotient, and adjust each
// lifted generator g by a power of the first one so that ord(g) equals its
// order in the quotient.  The division s/d below is exact because the first
// order is the group exponent.
std::vector<std::pair<unsigned, unsigned>> abelian_basis(const SmallGroup& G) {
    if (G.n <= 1) return {};
    unsigned g1 = G.e, d1 = 1;
    for (unsigned x = 0; x < G.n; ++x) {
        unsigned d = G.order_of(x);
        if (d > d1) {
            d1 = d;
            g1 = x;
        }
    }

    std::vector<unsigned> sub;
    {
        unsigned r = G.e;
        do {
            sub.push_back(r);
            r = G.op(r, g1);
        } while (r != G.e);
    }
    std::vector<unsigned> coset_id(G.n, UINT_MAX);
    std::vector<unsigned> coset_rep;
    for (unsigned x = 0; x < G.n; ++x) {
        if (coset_id[x] != UINT_MAX) continue;
        unsigned id = static_cast<unsigned>(coset_rep.size());
        coset_rep.push_back(x);
        for (unsigned h : sub) coset_id[G.op(x, h)] = id;
    }

    std::vector<std::vector<unsigned>> qmul(coset_rep.size(), std::vector<unsigned>(coset_rep.size()));
    for (unsigned i = 0; i < coset_rep.size(); ++i)
        for (unsigned j = 0; j < coset_rep.size(); ++j)
            qmul[i][j] = coset_id[G.op(coset_rep[i], coset_rep[j])];
    SmallGroup Q;
    Q.n = static_cast<unsigned>(coset_rep.size());
    Q.e = coset_id[G.e];
    Q.mul = &qmul;

    auto rest = abelian_basis(Q);
    std::vector<std::pair<unsigned, unsigned>> out{{g1, d1}};
    for (const auto& [c, d] : rest) {
        unsigned x = coset_rep[c];
        unsigned xd = G.pw(x, d);
        unsigned s = 0;
        {
            unsigned r = G.e;
            while (r != xd) {
                r = G.op(r, g1);
                ++s;
                if (s > d1) throw std::logic_error("abelian decomposition: power left the cyclic subgroup");
            }
        }
        if (s % d != 0) throw std::logic_error("abelian decomposition: non-exact adjustment exponent");
        unsigned adj = G.pw(g1, (d1 - (s / d) % d1) % d1);
        out.emplace_back(G.op(x, adj), d);
    }
    return out;
}

}  // namespace

RayClassData::RayClassData(const QuadField& F, const FracIdeal& prime, unsigned level)
    : F_(F), prime_(prime), level_(level), eps_plus_(fundamental_totally_positive_unit(F)) {
    if (!prime_.is_integral()) throw std::invalid_argument("modulus prime must be an integral ideal");
    Rational nrm = prime_.norm();
    Integer np = nrm.get_num();
    Integer p;
    if (is_prime(np)) {
        p = np;
    } else {
        Integer r;
        mpz_sqrt(r.get_mpz_t(), np.get_mpz_t());
        Integer rr = r * r;
        if (rr != np || !is_prime(r)) throw std::invalid_argument("modulus ideal is not prime");
        p = r;
    }
    bool found = false;
    for (const FracIdeal& P : primes_above(F_, p))
        if (P == prime_) found = true;
    if (!found) throw std::invalid_argument("modulus ideal is not prime");

    unsigned hplus = narrow_class_number(F_);
    unsigned phi = 1;
    if (level_ >= 1) {
        ring_ = std::make_unique<ResidueRing>(prime_, level_);
        Integer phi_z = ring_->unit_count();
        if (!mpz_fits_uint_p(phi_z.get_mpz_t())) throw std::invalid_argument("residue unit group too large");
        phi = static_cast<unsigned>(phi_z.get_ui());
        if (F_.degree == 2) {
            FieldElt one(F_, Rational(1));
            FieldElt acc = ring_->reduce_elt(eps_plus_);
            eps_order_ = 1;
            while (!ring_->congruent(acc, one)) {
                acc = ring_->reduce_elt(acc * eps_plus_);
                ++eps_order_;
                if (eps_order_ > phi) throw std::logic_error("unit order exceeds the unit group size");
            }
        }
    }
    expected_ = hplus * (phi / eps_order_);
    if (phi % eps_order_ != 0) throw std::logic_error("unit image order does not divide the residue unit count");

    {
        FracIdeal Pm = prime_.pow(static_cast<long>(level_));
        Rational sa = Pm.scale() * Rational(Pm.hnf_a());
        p_power_ = sa.get_num();
    }

    enumerate_classes();
    build_tables();
    decompose();
    find_sign_flips();
}

std::shared_ptr<const RayClassData> RayClassData::build(const QuadField& F, const FracIdeal& prime, unsigned level) {
    return std::shared_ptr<const RayClassData>(new RayClassData(F, prime, level));
}

const ResidueRing& RayClassData::ring() const {
    if (!ring_) throw std::logic_error("level-0 ray class group has no residue ring");
    return *ring_;
}

std::vector<FieldElt> RayClassData::unit_sweep(unsigned modulus_exponent) const {
    {
        std::lock_guard<std::mutex> lock(sweep_mutex_);
        auto it = sweep_cache_.find(modulus_exponent);
        if (it != sweep_cache_.end()) return it->second;
    }
    std::vector<FieldElt> out;
    FieldElt one(F_, Rational(1));
    if (F_.degree == 1) {
        out.push_back(one);
        out.push_back(-one);
    } else {
        FracIdeal PW = prime_.pow(static_cast<long>(modulus_exponent));
        FieldElt eps = fundamental_unit(F_);
        unsigned cyc = 1;
        FieldElt acc = eps;
        while (!PW.contains(acc - one)) {
            acc = acc * eps;
            ++cyc;
            if (cyc > 4000000) throw std::logic_error("unit cycle search exceeded bound");
        }
        // double cycle so every (residue, sign pattern) pair of a unit occurs
        FieldElt pw = one;
        for (unsigned t = 0; t < 2 * cyc; ++t) {
            out.push_back(pw);
            out.push_back(-pw);
            pw = pw * eps;
        }
    }
    std::lock_guard<std::mutex> lock(sweep_mutex_);
    auto [it, inserted] = sweep_cache_.emplace(modulus_exponent, out);
    (void)inserted;
    return it->second;
}

std::optional<std::vector<Rational>> RayClassData::cached_zeta_table(unsigned k) const {
    std::lock_guard<std::mutex> lock(zeta_mutex_);
    auto it = zeta_cache_.find(k);
    if (it == zeta_cache_.end()) return std::nullopt;
    return it->second;
}

const std::vector<Rational>& RayClassData::store_zeta_table(unsigned k, std::vector<Rational> table) const {
    std::lock_guard<std::mutex> lock(zeta_mutex_);
    auto [it, inserted] = zeta_cache_.emplace(k, std::move(table));
    (void)inserted;
    return it->second;
}

bool RayClassData::equivalent(const FracIdeal& I, const FracIdeal& J) const {
    if (!I.is_integral() || !J.is_integral())
        throw std::invalid_argument("equivalence test expects integral ideals");
    FracIdeal A = I * J.conj();
    Rational nj = J.norm();
    Integer NJ = nj.get_num();

    FracIdeal NJideal = FracIdeal::principal(FieldElt(F_, Rational(NJ)));
    unsigned w = 0;
    while (prime_.pow(static_cast<long>(w + 1)).divides(NJideal)) ++w;

    auto g0 = A.principal_generator();
    if (!g0) return false;

    FracIdeal PW = prime_.pow(static_cast<long>(level_ + w));
    FieldElt target(F_, Rational(NJ));
    for (const FieldElt& u : unit_sweep(level_ + w)) {
        FieldElt alpha = (*g0) * u;
        if (!alpha.is_totally_positive()) continue;
        FieldElt diff = alpha - target;
        if (diff.is_zero() || PW.contains(diff)) return true;
    }
    return false;
}

unsigned RayClassData::class_of_integral(const FracIdeal& I) const {
    if (F_.degree == 1) {
        Rational s = I.scale();
        Integer key = nonneg_mod(s.get_num(), p_power_);
        auto it = residue_class_.find(key);
        if (it == residue_class_.end()) throw std::logic_error("integral ideal residue not classified");
        return it->second;
    }
    for (unsigned j = 0; j < reps_.size(); ++j)
        if (equivalent(I, reps_[j])) return j;
    throw std::logic_error("integral ideal matched no ray class");
}

unsigned RayClassData::class_of(const FracIdeal& I) const {
    // separate the positive and negative parts of the factorization, each
    // integral and prime to P, then combine their classes
    Rational s = I.scale();
    Rational inv_s = Rational(1) / s;
    FracIdeal prim = I * FracIdeal::principal(FieldElt(F_, inv_s));

    std::vector<std::pair<FracIdeal, long>> vals;
    auto add = [&](const FracIdeal& P, long e) {
        for (auto& pr : vals)
            if (pr.first == P) {
                pr.second += e;
                return;
            }
        vals.emplace_back(P, e);
    };
    for (const auto& [P, e] : factor_ideal(prim)) add(P, static_cast<long>(e));
    auto add_rational = [&](const Integer& num, long sign) {
        for (const auto& [q, e] : factor(num)) {
            auto Ps = primes_above(F_, q);
            if (Ps.size() == 2) {
                add(Ps[0], sign * static_cast<long>(e));
                add(Ps[1], sign * static_cast<long>(e));
            } else {
                Rational n0 = Ps[0].norm();
                bool ramified = F_.degree == 2 && n0 == Rational(q);
                add(Ps[0], (ramified ? 2 : 1) * sign * static_cast<long>(e));
            }
        }
    };
    add_rational(s.get_num(), +1);
    add_rational(s.get_den(), -1);

    FracIdeal num = FracIdeal::unit_ideal(F_);
    FracIdeal den = FracIdeal::unit_ideal(F_);
    for (const auto& [P, e] : vals) {
        if (e == 0) continue;
        if (P == prime_ && level_ >= 1) throw std::invalid_argument("ideal is not prime to the modulus");
        if (e > 0)
            num = num * P.pow(e);
        else
            den = den * P.pow(-e);
    }
    unsigned cn = class_of_integral(num);
    unsigned cd = class_of_integral(den);
    return mul_[cn][inv_[cd]];
}

FieldElt RayClassData::totally_positive_lift(const FieldElt& x) const {
    FieldElt step(F_, Rational(p_power_));
    FieldElt alpha = x;
    unsigned guard = 0;
    while (!alpha.is_totally_positive()) {
        alpha += step;
        if (++guard > 1000000) throw std::logic_error("totally positive lift search exceeded bound");
    }
    return alpha;
}

unsigned RayClassData::class_of_residue(const FieldElt& x) const {
    if (level_ == 0) throw std::logic_error("residue classes need level >= 1");
    if (!ring_->is_invertible(x)) throw std::invalid_argument("residue is not a unit mod P^level");
    FieldElt alpha = totally_positive_lift(x);
    return class_of(FracIdeal::principal(alpha));
}

void RayClassData::enumerate_classes() {
    reps_.clear();
    residue_class_.clear();
    reps_.push_back(FracIdeal::unit_ideal(F_));
    if (F_.degree == 1) residue_class_.emplace(nonneg_mod(Integer(1), p_power_), 0u);

    Integer n = 1;
    while (reps_.size() < expected_) {
        n += 1;
        if (n > 200000) throw std::logic_error("ray class enumeration exceeded the norm bound");
        for (const FracIdeal& I : ideals_of_norm(F_, n)) {
            if (prime_.divides(I)) continue;
            if (F_.degree == 1) {
                Integer key = nonneg_mod(I.scale().get_num(), p_power_);
                if (residue_class_.count(key)) continue;
                residue_class_.emplace(key, static_cast<unsigned>(reps_.size()));
                reps_.push_back(I);
            } else {
                bool matched = false;
                for (const FracIdeal& r : reps_)
                    if (equivalent(I, r)) {
                        matched = true;
                        break;
                    }
                if (!matched) reps_.push_back(I);
            }
            if (reps_.size() == expected_) break;
        }
    }
}

void RayClassData::build_tables() {
    unsigned nc = order();
    mul_.assign(nc, std::vector<unsigned>(nc, 0));
    for (unsigned i = 0; i < nc; ++i) {
        mul_[i][0] = i;
        mul_[0][i] = i;
    }
    for (unsigned i = 1; i < nc; ++i)
        for (unsigned j = i; j < nc; ++j) {
            FracIdeal prod = reps_[i] * reps_[j];
            unsigned c = class_of_integral(prod);
            mul_[i][j] = c;
            mul_[j][i] = c;
        }
    inv_.assign(nc, 0);
    for (unsigned i = 0; i < nc; ++i) {
        bool found = false;
        for (unsigned j = 0; j < nc; ++j)
            if (mul_[i][j] == 0) {
                inv_[i] = j;
                found = true;
                break;
            }
        if (!found) throw std::logic_error("class without inverse in the multiplication table");
    }
}

void RayClassData::decompose() {
    SmallGroup G;
    G.n = order();
    G.e = 0;
    G.mul = &mul_;
    auto basis = abelian_basis(G);
    basis_class_.clear();
    basis_order_.clear();
    for (const auto& [g, d] : basis) {
        basis_class_.push_back(g);
        basis_order_.push_back(d);
    }

    unsigned long total = 1;
    for (unsigned d : basis_order_) total *= d;
    if (total != order()) throw std::logic_error("basis orders do not multiply to the group order");

    coords_.assign(order(), {});
    std::vector<char> seen(order(), 0);
    std::vector<unsigned> tuple(basis_order_.size(), 0);
    for (unsigned long idx = 0; idx < total; ++idx) {
        unsigned elt = 0;
        for (size_t i = 0; i < tuple.size(); ++i)
            elt = mul_[elt][G.pw(basis_class_[i], tuple[i])];
        if (seen[elt]) throw std::logic_error("basis tuples do not enumerate the group bijectively");
        seen[elt] = 1;
        coords_[elt] = tuple;
        for (size_t i = 0; i < tuple.size(); ++i) {
            if (++tuple[i] < basis_order_[i]) break;
            tuple[i] = 0;
        }
    }
    for (char s : seen)
        if (!s) throw std::logic_error("basis tuples miss a group element");
}

void RayClassData::find_sign_flips() {
    flip_elts_.clear();
    flip_classes_.clear();
    unsigned places = F_.degree == 2 ? 2 : 1;
    FieldElt one(F_, Rational(1));

    if (F_.degree == 1) {
        // 1 - k p^level < 0 with the first k that also avoids p (at level 0
        // the first candidate is 0 and gets skipped)
        Integer k = 1;
        while (true) {
            Rational v = Rational(1) - Rational(k) * Rational(p_power_);
            FieldElt alpha(F_, v);
            if (!alpha.is_zero() && alpha.sign_at(0) < 0 && !prime_.contains(alpha)) {
                flip_elts_.push_back(alpha);
                break;
            }
            k += 1;
        }
    } else {
        FracIdeal Pm = prime_.pow(static_cast<long>(level_));
        FieldElt B1 = Pm.basis1();
        FieldElt B2 = Pm.basis2();
        for (unsigned place = 0; place < places; ++place) {
            bool found = false;
            for (long R = 1; R <= 1000 && !found; ++R) {
                for (long i = -R; i <= R && !found; ++i)
                    for (long j = -R; j <= R && !found; ++j) {
                        if (std::max(std::abs(i), std::abs(j)) < R) continue;
                        FieldElt alpha = one + FieldElt(F_, Rational(i)) * B1 + FieldElt(F_, Rational(j)) * B2;
                        if (alpha.is_zero()) continue;
                        if (level_ == 0 && prime_.contains(alpha)) continue;
                        bool ok = true;
                        for (unsigned v = 0; v < places; ++v) {
                            int want = v == place ? -1 : +1;
                            if (alpha.sign_at(v) != want) ok = false;
                        }
                        if (ok) {
                            flip_elts_.push_back(alpha);
                            found = true;
                        }
                    }
            }
            if (!found) throw std::logic_error("no sign flip element found near 1");
        }
    }

    for (const FieldElt& alpha : flip_elts_) {
        unsigned c = class_of(FracIdeal::principal(alpha));
        if (mul_[c][c] != 0) throw std::logic_error("sign flip class does not square to the identity");
        flip_classes_.push_back(c);
    }
}

HeckeChar::HeckeChar(RayClassPtr G, std::vector<CycloElt> values, std::string name)
    : G_(std::move(G)), values_(std::move(values)), name_(std::move(name)) {
    if (values_.size() != G_->order()) throw std::invalid_argument("character value count differs from the group order");
    CycloElt one(Rational(1));
    unsigned ord = 1;
    for (const CycloElt& v : values_) {
        CycloElt acc = v;
        unsigned k = 1;
        while (!(acc == one)) {
            acc = acc * v;
            ++k;
            if (k > 4 * G_->order() + 4) throw std::invalid_argument("character value is not a root of unity");
        }
        ord = static_cast<unsigned>(std::lcm(ord, k));
    }
    order_ = ord;
}

HeckeChar HeckeChar::power(long e) const {
    std::vector<CycloElt> vals;
    vals.reserve(values_.size());
    for (const CycloElt& v : values_) vals.push_back(pow(v, e));
    return HeckeChar(G_, std::move(vals), name_ + "^" + std::to_string(e));
}

HeckeChar HeckeChar::conjugate() const {
    std::vector<CycloElt> vals;
    vals.reserve(values_.size());
    for (const CycloElt& v : values_) vals.push_back(v.conj());
    return HeckeChar(G_, std::move(vals), name_ + "~");
}

HeckeChar HeckeChar::operator*(const HeckeChar& o) const {
    if (G_.get() != o.G_.get()) throw std::invalid_argument("characters live on different groups");
    std::vector<CycloElt> vals;
    vals.reserve(values_.size());
    for (size_t i = 0; i < values_.size(); ++i) vals.push_back(values_[i] * o.values_[i]);
    return HeckeChar(G_, std::move(vals), name_ + "*" + o.name_);
}

int HeckeChar::infinity_sign(unsigned place) const {
    const CycloElt& v = values_.at(G_->sign_flip_class(place));
    if (v == CycloElt(Rational(1))) return +1;
    if (v == CycloElt(Rational(-1))) return -1;
    throw std::logic_error("character value at a sign flip class is not +-1");
}

bool HeckeChar::parity_matches(unsigned k) const {
    int want = k % 2 == 0 ? +1 : -1;
    unsigned places = G_->field().degree == 2 ? 2 : 1;
    for (unsigned v = 0; v < places; ++v)
        if (infinity_sign(v) != want) return false;
    return true;
}

std::vector<HeckeChar> characters_of(const RayClassPtr& G) {
    const auto& ord = G->basis_order();
    unsigned n = G->order();
    std::vector<HeckeChar> out;
    out.reserve(n);
    std::vector<unsigned> label(ord.size(), 0);
    for (unsigned idx = 0; idx < n; ++idx) {
        std::vector<CycloElt> vals;
        vals.reserve(n);
        for (unsigned j = 0; j < n; ++j) {
            const auto& co = G->coords(j);
            CycloElt v(Rational(1));
            for (size_t i = 0; i < ord.size(); ++i)
                if (label[i] != 0 && co[i] != 0)
                    v = v * CycloElt::root_of_unity(ord[i], static_cast<long>(label[i]) * co[i]);
            vals.push_back(v);
        }
        std::string name = "chi" + std::to_string(G->level()) + "_" + std::to_string(idx);
        out.emplace_back(G, std::move(vals), std::move(name));
        for (size_t i = 0; i < label.size(); ++i) {
            if (++label[i] < ord[i]) break;
            label[i] = 0;
        }
    }
    return out;
}

unsigned conductor_exponent(const HeckeChar& chi) {
    const RayClassData& G = chi.group();
    CycloElt one(Rational(1));
    for (unsigned mp = 0; mp < G.level(); ++mp) {
        auto H = RayClassData::build(G.field(), G.prime_ideal(), mp);
        bool factors = true;
        for (unsigned j = 0; j < G.order() && factors; ++j)
            if (H->class_of(G.reps()[j]) == H->identity() && !(chi.value(j) == one)) factors = false;
        if (factors) return mp;
    }
    return G.level();
}

HeckeChar primitive_avatar(const HeckeChar& chi) {
    const RayClassData& G = chi.group();
    unsigned mc = conductor_exponent(chi);
    if (mc == G.level()) return chi;
    auto H = RayClassData::build(G.field(), G.prime_ideal(), mc);
    std::vector<std::optional<CycloElt>> vals(H->order());
    for (unsigned j = 0; j < G.order(); ++j) {
        unsigned jp = H->class_of(G.reps()[j]);
        if (!vals[jp])
            vals[jp] = chi.value(j);
        else if (!(*vals[jp] == chi.value(j)))
            throw std::logic_error("character does not descend to its conductor level");
    }
    std::vector<CycloElt> flat;
    flat.reserve(vals.size());
    for (auto& v : vals) {
        if (!v) throw std::logic_error("level surjection missed a class");
        flat.push_back(*v);
    }
    return HeckeChar(H, std::move(flat), chi.name() + "@" + std::to_string(mc));
}

}  // namespace padl
