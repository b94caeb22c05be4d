#include "padl/field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace padl {

static int sgn(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

// ---- fields -----------------------------------------------------------------

QuadField QuadField::rationals() { return QuadField{}; }

QuadField QuadField::real_quadratic(long d) {
    if (d < 2) throw std::invalid_argument("real quadratic field needs d >= 2");
    for (const auto& [p, e] : factor(Integer(d)))
        if (e > 1) throw std::invalid_argument("d must be squarefree");
    QuadField F;
    F.degree = 2;
    F.d = d;
    if ((d - 1) % 4 == 0) {
        F.disc = d;
        F.t = 1;
        F.n = Integer(1 - d) / 4;
    } else {
        F.disc = 4 * Integer(d);
        F.t = 0;
        F.n = -d;
    }
    return F;
}

std::string QuadField::str() const {
    if (degree == 1) return "Q";
    return "Q(sqrt" + std::to_string(d) + ")";
}

// ---- field elements ----------------------------------------------------------

FieldElt::FieldElt(const QuadField& F, const Rational& a, const Rational& b) : F_(F), a_(a), b_(b) {
    if (F_.degree == 1 && b_ != 0) throw std::invalid_argument("degree 1 element with omega part");
    a_.canonicalize();
    b_.canonicalize();
}

bool FieldElt::is_integral() const { return a_.get_den() == 1 && b_.get_den() == 1; }

Rational FieldElt::norm() const {
    if (F_.degree == 1) return a_;
    Rational r = a_ * a_ + a_ * b_ * Rational(F_.t) + b_ * b_ * Rational(F_.n);
    r.canonicalize();
    return r;
}

Rational FieldElt::trace() const {
    if (F_.degree == 1) return a_;
    Rational r = 2 * a_ + b_ * Rational(F_.t);
    r.canonicalize();
    return r;
}

FieldElt FieldElt::conj() const {
    if (F_.degree == 1) return *this;
    return FieldElt(F_, a_ + b_ * Rational(F_.t), -b_);
}

FieldElt FieldElt::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (F_.degree == 1) return FieldElt(F_, 1 / a_);
    Rational N = norm();
    FieldElt c = conj();
    return FieldElt(F_, c.a() / N, c.b() / N);
}

int FieldElt::sign_at(unsigned place) const {
    if (place >= F_.degree) throw std::invalid_argument("no such real place");
    if (F_.degree == 1) return sgn(a_);
    // 2 * value = U + V sqrt(Delta) with U = 2a + bt, V = +-b, Delta = t^2 - 4n > 0
    Rational U = 2 * a_ + b_ * Rational(F_.t);
    Rational V = place == 0 ? b_ : Rational(-b_);
    if (V == 0) return sgn(U);
    if (U == 0) return sgn(V);
    int su = sgn(U), sv = sgn(V);
    if (su == sv) return su;
    Rational delta(F_.t * F_.t - 4 * F_.n);
    Rational diff = U * U - V * V * delta;
    int sd = sgn(diff);
    return sd == 0 ? 0 : (sd > 0 ? su : sv);
}

bool FieldElt::is_totally_positive() const {
    for (unsigned v = 0; v < F_.degree; ++v)
        if (sign_at(v) <= 0) return false;
    return true;
}

double FieldElt::approx_at(unsigned place) const {
    if (F_.degree == 1) return a_.get_d();
    double delta = Integer(F_.t * F_.t - 4 * F_.n).get_d();
    double w = (F_.t.get_d() + (place == 0 ? 1.0 : -1.0) * std::sqrt(delta)) / 2.0;
    return a_.get_d() + b_.get_d() * w;
}

FieldElt FieldElt::operator-() const { return FieldElt(F_, -a_, -b_); }

FieldElt& FieldElt::operator+=(const FieldElt& o) {
    if (!(F_ == o.F_)) throw std::invalid_argument("mixing elements of different fields");
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

FieldElt& FieldElt::operator-=(const FieldElt& o) {
    *this += -o;
    return *this;
}

FieldElt& FieldElt::operator*=(const FieldElt& o) {
    if (!(F_ == o.F_)) throw std::invalid_argument("mixing elements of different fields");
    // (a1 + b1 w)(a2 + b2 w) with w^2 = t w - n
    Rational a = a_ * o.a_ - b_ * o.b_ * Rational(F_.n);
    Rational b = a_ * o.b_ + b_ * o.a_ + b_ * o.b_ * Rational(F_.t);
    a.canonicalize();
    b.canonicalize();
    a_ = a;
    b_ = b;
    return *this;
}

FieldElt& FieldElt::operator/=(const FieldElt& o) {
    *this *= o.inverse();
    return *this;
}

std::string FieldElt::str() const {
    if (b_ == 0) return to_string(a_);
    std::string s;
    if (a_ != 0) s += to_string(a_);
    if (sgn(b_) > 0 && a_ != 0) s += "+";
    s += to_string(b_) + "w";
    return s;
}

FieldElt operator+(FieldElt a, const FieldElt& b) { a += b; return a; }
FieldElt operator-(FieldElt a, const FieldElt& b) { a -= b; return a; }
FieldElt operator*(FieldElt a, const FieldElt& b) { a *= b; return a; }
FieldElt operator/(FieldElt a, const FieldElt& b) { a /= b; return a; }

bool operator==(const FieldElt& a, const FieldElt& b) {
    return a.field() == b.field() && a.a() == b.a() && a.b() == b.b();
}
bool operator!=(const FieldElt& a, const FieldElt& b) { return !(a == b); }

FieldElt pow(const FieldElt& a, long e) {
    if (e < 0) return pow(a.inverse(), -e);
    FieldElt r(a.field(), 1);
    FieldElt base = a;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

// ---- fractional ideals --------------------------------------------------------

FracIdeal::FracIdeal(const QuadField& F, const Rational& s, const Integer& a, const Integer& b, const Integer& c)
    : F_(F), s_(s), a_(a), b_(b), c_(c) {}

FracIdeal FracIdeal::unit_ideal(const QuadField& F) { return FracIdeal(F, Rational(1), 1, 0, 1); }

FracIdeal FracIdeal::from_generators(const QuadField& F, const std::vector<FieldElt>& gens) {
    // rows are coordinates of g and g*omega over (1, omega); clearing
    // denominators first keeps the lattice reduction over Z
    std::vector<std::pair<Rational, Rational>> qrows;
    for (const auto& g : gens) {
        if (!(g.field() == F)) throw std::invalid_argument("generator from wrong field");
        if (g.is_zero()) continue;
        qrows.emplace_back(g.a(), g.b());
        if (F.degree == 2) {
            FieldElt gw = g * FieldElt(F, Rational(0), Rational(1));
            qrows.emplace_back(gw.a(), gw.b());
        }
    }
    if (qrows.empty()) throw std::invalid_argument("zero ideal");
    Integer L(1);
    for (const auto& [x, y] : qrows) {
        L = lcm(L, Integer(x.get_den()));
        L = lcm(L, Integer(y.get_den()));
    }
    if (F.degree == 1) {
        Integer g(0);
        for (const auto& [x, y] : qrows) {
            (void)y;
            Rational xs = x * Rational(L);
            g = gcd(g, Integer(xs.get_num()));
        }
        Rational s(abs(g), L);
        s.canonicalize();
        return FracIdeal(F, s, 1, 0, 1);
    }
    Integer A(0), B(0), C(0);
    for (const auto& [xq, yq] : qrows) {
        Rational xs = xq * Rational(L), ys = yq * Rational(L);
        Integer x(xs.get_num()), y(ys.get_num());
        if (y == 0) {
            A = gcd(A, x);
            continue;
        }
        if (C == 0) {
            if (y < 0) { x = -x; y = -y; }
            B = x;
            C = y;
            continue;
        }
        Integer g, u, v;
        mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), C.get_mpz_t(), y.get_mpz_t());
        Integer elim = (C * x - y * B) / g;
        A = gcd(A, elim);
        B = u * B + v * x;
        C = g;
    }
    if (A == 0 || C == 0) throw std::logic_error("ideal lattice is not full rank");
    A = abs(A);
    B %= A;
    if (B < 0) B += A;
    Integer content = gcd(gcd(A, B), C);
    A /= content;
    B /= content;
    C /= content;
    B %= A;
    Rational s = Rational(content, L);
    s.canonicalize();
    return FracIdeal(F, s, A, B, C);
}

FracIdeal FracIdeal::principal(const FieldElt& g) { return from_generators(g.field(), {g}); }

Rational FracIdeal::norm() const {
    if (F_.degree == 1) return s_;
    Rational r = s_ * s_ * Rational(a_ * c_);
    r.canonicalize();
    return r;
}

bool FracIdeal::is_integral() const { return s_.get_den() == 1; }

bool FracIdeal::contains(const FieldElt& x) const {
    if (!(x.field() == F_)) throw std::invalid_argument("element from wrong field");
    if (x.is_zero()) return true;
    Rational t1 = x.a() / s_, t2 = x.b() / s_;
    t1.canonicalize();
    t2.canonicalize();
    if (t1.get_den() != 1 || t2.get_den() != 1) return false;
    if (F_.degree == 1) return true;
    Integer X(t1.get_num()), Y(t2.get_num());
    if (Y % c_ != 0) return false;
    Integer k = Y / c_;
    return (X - k * b_) % a_ == 0;
}

bool FracIdeal::divides(const FracIdeal& J) const { return (J * inverse()).is_integral(); }

FieldElt FracIdeal::basis1() const { return FieldElt(F_, s_ * Rational(a_)); }

FieldElt FracIdeal::basis2() const {
    if (F_.degree == 1) return FieldElt(F_, Rational(0));
    return FieldElt(F_, s_ * Rational(b_), s_ * Rational(c_));
}

FracIdeal FracIdeal::operator*(const FracIdeal& J) const {
    if (!(F_ == J.F_)) throw std::invalid_argument("mixing ideals of different fields");
    if (F_.degree == 1) {
        Rational s = s_ * J.s_;
        s.canonicalize();
        return FracIdeal(F_, s, 1, 0, 1);
    }
    std::vector<FieldElt> gens;
    for (const FieldElt& x : {basis1(), basis2()})
        for (const FieldElt& y : {J.basis1(), J.basis2()}) gens.push_back(x * y);
    return from_generators(F_, gens);
}

FracIdeal FracIdeal::conj() const {
    if (F_.degree == 1) return *this;
    return from_generators(F_, {basis1().conj(), basis2().conj()});
}

FracIdeal FracIdeal::inverse() const {
    if (F_.degree == 1) {
        FracIdeal r = *this;
        r.s_ = Rational(1) / s_;
        r.s_.canonicalize();
        return r;
    }
    // I * conj(I) = N(I) * O in a quadratic field
    FracIdeal r = conj();
    r.s_ /= norm();
    r.s_.canonicalize();
    return r;
}

FracIdeal FracIdeal::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FracIdeal r = unit_ideal(F_);
    FracIdeal base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool FracIdeal::operator==(const FracIdeal& J) const {
    return F_ == J.F_ && s_ == J.s_ && a_ == J.a_ && b_ == J.b_ && c_ == J.c_;
}

std::optional<FieldElt> FracIdeal::principal_generator() const {
    if (F_.degree == 1) return FieldElt(F_, s_);
    // search the integral primitive part [a, b + c w] for alpha with
    // |N(alpha)| = a c; any generator can be unit-normalized into
    // sqrt(N) <= |alpha at place 0| < sqrt(N) eps+, so the box below is
    // exhaustive up to sign
    Integer NJ = a_ * c_;
    double sq = std::sqrt(NJ.get_d());
    double ep1 = fundamental_totally_positive_unit(F_).approx_at(0);
    double B1 = sq * ep1 * (1.0 + 1e-9) + 1e-9;
    double B2 = sq * (1.0 + 1e-9) + 1e-9;
    double w0 = FieldElt(F_, 0, 1).approx_at(0);
    double w1 = FieldElt(F_, 0, 1).approx_at(1);
    double sd = w0 - w1;  // sqrt(Delta)
    long ymax = static_cast<long>(std::floor((B1 + B2) / sd)) + 1;
    for (long y = -ymax; y <= ymax; ++y) {
        double lo = std::max(-B1 - y * w0, -B2 - y * w1);
        double hi = std::min(B1 - y * w0, B2 - y * w1);
        if (lo > hi) continue;
        for (long x = static_cast<long>(std::ceil(lo - 1e-9)); x <= static_cast<long>(std::floor(hi + 1e-9)); ++x) {
            Integer X(x), Y(y);
            if (Y % c_ != 0) continue;
            if ((X - (Y / c_) * b_) % a_ != 0) continue;
            Integer N = X * X + X * Y * F_.t + Y * Y * F_.n;
            if (N == NJ || N == -NJ) return FieldElt(F_, s_ * Rational(X), s_ * Rational(Y));
        }
    }
    return std::nullopt;
}

FieldElt FracIdeal::canonical_generator() const {
    auto g0 = principal_generator();
    if (!g0) throw std::domain_error("ideal is not principal");
    if (F_.degree == 1) {
        FieldElt g = *g0;
        return g.sign_at(0) < 0 ? -g : g;
    }
    FieldElt alpha = *g0;
    int s0 = alpha.sign_at(0), s1 = alpha.sign_at(1);
    if (s0 < 0 && s1 < 0) {
        alpha = -alpha;
    } else if (s0 * s1 < 0) {
        FieldElt eps = fundamental_unit(F_);
        if (eps.norm() != -1) throw std::domain_error("ideal has no totally positive generator");
        alpha *= eps;  // mixed times mixed is definite
        if (alpha.sign_at(0) < 0) alpha = -alpha;
    }
    FieldElt ep = fundamental_totally_positive_unit(F_);
    while (sgn(alpha.b()) < 0) alpha *= ep;
    while (true) {
        FieldElt prev = alpha / ep;
        if (sgn(prev.b()) >= 0)
            alpha = prev;
        else
            break;
    }
    return alpha;
}

std::string FracIdeal::str() const {
    std::ostringstream os;
    if (F_.degree == 1) {
        os << "(" << to_string(s_) << ")";
        return os.str();
    }
    os << "<" << to_string(s_) << "; " << a_.get_str() << ", " << b_.get_str() << "+" << c_.get_str() << "w>";
    return os.str();
}

// ---- prime decomposition -------------------------------------------------------

std::vector<FracIdeal> primes_above(const QuadField& F, const Integer& p) {
    if (!is_prime(p)) throw std::invalid_argument("primes_above needs a prime");
    if (F.degree == 1) return {FracIdeal::principal(FieldElt(F, Rational(p)))};
    // roots of x^2 - t x + n mod p decide the splitting: none = inert,
    // one = ramified, two = split
    std::vector<Integer> roots;
    for (Integer r = 0; r < p; ++r)
        if ((r * r - F.t * r + F.n) % p == 0) roots.push_back(r);
    if (roots.empty()) return {FracIdeal::principal(FieldElt(F, Rational(p)))};
    std::vector<FracIdeal> out;
    for (const Integer& r : roots)
        out.push_back(FracIdeal::from_generators(
            F, {FieldElt(F, Rational(p)), FieldElt(F, Rational(-r), Rational(1))}));
    std::sort(out.begin(), out.end(),
              [](const FracIdeal& A, const FracIdeal& B) { return A.hnf_b() < B.hnf_b(); });
    return out;
}

std::vector<std::pair<FracIdeal, unsigned>> factor_ideal(const FracIdeal& I) {
    if (!I.is_integral()) throw std::invalid_argument("factor_ideal needs an integral ideal");
    Rational Nq = I.norm();
    Integer N(Nq.get_num());
    std::vector<std::pair<FracIdeal, unsigned>> out;
    if (N == 1) return out;
    Rational check(1);
    for (const auto& [p, e] : factor(N)) {
        (void)e;
        for (const FracIdeal& P : primes_above(I.field(), p)) {
            unsigned v = 0;
            while (P.pow(v + 1).divides(I)) ++v;
            if (v) {
                out.emplace_back(P, v);
                check *= qpow(P.norm(), v);
            }
        }
    }
    if (check != Nq) throw std::logic_error("ideal factorization does not recover the norm");
    return out;
}

int mobius_ideal(const FracIdeal& I) {
    auto fac = factor_ideal(I);
    for (const auto& [P, e] : fac) {
        (void)P;
        if (e > 1) return 0;
    }
    return fac.size() % 2 == 0 ? 1 : -1;
}

std::vector<FracIdeal> ideals_of_norm(const QuadField& F, const Integer& n) {
    if (n <= 0) throw std::invalid_argument("ideal norm must be positive");
    if (F.degree == 1) return {FracIdeal::principal(FieldElt(F, Rational(n)))};
    std::vector<FracIdeal> list{FracIdeal::unit_ideal(F)};
    for (const auto& [p, e] : factor(n)) {
        auto primes = primes_above(F, p);
        std::vector<FracIdeal> options;
        if (primes.size() == 2) {
            for (unsigned i = 0; i <= e; ++i) options.push_back(primes[0].pow(i) * primes[1].pow(e - i));
        } else if (primes[0].norm() == Rational(p * p)) {
            if (e % 2 == 0) options.push_back(primes[0].pow(e / 2));
        } else {
            options.push_back(primes[0].pow(e));
        }
        if (options.empty()) return {};
        std::vector<FracIdeal> next;
        for (const auto& I : list)
            for (const auto& J : options) next.push_back(I * J);
        list = std::move(next);
    }
    return list;
}

std::vector<FracIdeal> ideals_up_to(const QuadField& F, const Integer& bound) {
    std::vector<FracIdeal> out;
    for (Integer n = 1; n <= bound; ++n)
        for (auto& I : ideals_of_norm(F, n)) out.push_back(std::move(I));
    return out;
}

FracIdeal different_ideal(const QuadField& F) {
    if (F.degree == 1) return FracIdeal::unit_ideal(F);
    return FracIdeal::principal(FieldElt(F, Rational(-F.t), Rational(2)));
}

// ---- units and class numbers ------------------------------------------------------

static FieldElt fundamental_unit_search(const QuadField& F) {
    Integer delta = F.t * F.t - 4 * F.n;
    for (Integer y = 1; y < 100000000; ++y) {
        // x^2 + t x y + n y^2 = sign has integer solutions iff
        // delta y^2 + 4 sign is a perfect square
        std::vector<FieldElt> found;
        for (int sign : {1, -1}) {
            Integer disc_x = delta * y * y + 4 * sign;
            if (disc_x < 0 || mpz_perfect_square_p(disc_x.get_mpz_t()) == 0) continue;
            Integer S;
            mpz_sqrt(S.get_mpz_t(), disc_x.get_mpz_t());
            for (int ssgn : {1, -1}) {
                Integer num = -F.t * y + ssgn * S;
                if (num % 2 != 0) continue;
                FieldElt u(F, Rational(num / 2), Rational(y));
                for (const FieldElt& cand : {u, -u}) {
                    FieldElt shifted = cand - FieldElt(F, 1);
                    if (cand.sign_at(0) > 0 && shifted.sign_at(0) > 0) found.push_back(cand);
                }
            }
        }
        if (!found.empty()) {
            FieldElt best = found[0];
            for (const FieldElt& cand : found)
                if ((best - cand).sign_at(0) > 0) best = cand;
            return best;
        }
    }
    throw std::logic_error("fundamental unit search exceeded its bound");
}

FieldElt fundamental_unit(const QuadField& F) {
    if (F.degree != 2) throw std::invalid_argument("fundamental unit needs a real quadratic field");
    static std::map<long, FieldElt> cache;
    static std::mutex guard;
    std::lock_guard<std::mutex> lock(guard);
    auto it = cache.find(F.d);
    if (it == cache.end()) it = cache.emplace(F.d, fundamental_unit_search(F)).first;
    return it->second;
}

FieldElt fundamental_totally_positive_unit(const QuadField& F) {
    if (F.degree == 1) return FieldElt(F, Rational(1));
    FieldElt eps = fundamental_unit(F);
    if (eps.norm() == -1) return eps * eps;
    return eps.is_totally_positive() ? eps : -eps;
}

unsigned class_number(const QuadField& F) {
    if (F.degree == 1) return 1;
    Integer M;
    mpz_sqrt(M.get_mpz_t(), F.disc.get_mpz_t());
    M /= 2;
    if (M < 1) M = 1;
    std::vector<FracIdeal> reps;
    for (const FracIdeal& I : ideals_up_to(F, M)) {
        bool known = false;
        for (const FracIdeal& R : reps)
            if ((I * R.inverse()).principal_generator()) {
                known = true;
                break;
            }
        if (!known) reps.push_back(I);
    }
    return static_cast<unsigned>(reps.size());
}

unsigned narrow_class_number(const QuadField& F) {
    if (F.degree == 1) return 1;
    unsigned h = class_number(F);
    return fundamental_unit(F).norm() == -1 ? h : 2 * h;
}

// ---- residue rings -------------------------------------------------------------

ResidueRing::ResidueRing(const FracIdeal& P, unsigned m) : P_(P), Pm_(P.pow(m)), m_(m) {
    if (m == 0) throw std::invalid_argument("residue ring level must be positive");
    if (!P.is_integral()) throw std::invalid_argument("prime ideal must be integral");
    Rational NP = P.norm();
    if (!is_prime(Integer(NP.get_num()))) {
        // inert primes have prime square norm
        Integer root;
        mpz_sqrt(root.get_mpz_t(), Integer(NP.get_num()).get_mpz_t());
        if (root * root != Integer(NP.get_num()) || !is_prime(root))
            throw std::invalid_argument("modulus is not a prime ideal");
    }
    size_ = Integer(Pm_.norm().get_num());
    units_ = size_ - size_ / Integer(NP.get_num());
}

std::pair<Integer, Integer> ResidueRing::reduce(const FieldElt& e) const {
    if (!e.is_integral()) throw std::invalid_argument("residue of a non-integral element");
    Integer X(e.a().get_num()), Y(e.b().get_num());
    Integer A(Integer(Pm_.scale().get_num()) * Pm_.hnf_a());
    if (field().degree == 1) {
        Integer x;
        mpz_fdiv_r(x.get_mpz_t(), X.get_mpz_t(), A.get_mpz_t());
        return {x, 0};
    }
    Integer B(Integer(Pm_.scale().get_num()) * Pm_.hnf_b());
    Integer C(Integer(Pm_.scale().get_num()) * Pm_.hnf_c());
    Integer y, k, x;
    mpz_fdiv_r(y.get_mpz_t(), Y.get_mpz_t(), C.get_mpz_t());
    k = (Y - y) / C;
    Integer xr = X - k * B;
    mpz_fdiv_r(x.get_mpz_t(), xr.get_mpz_t(), A.get_mpz_t());
    return {x, y};
}

FieldElt ResidueRing::reduce_elt(const FieldElt& e) const {
    auto [x, y] = reduce(e);
    return FieldElt(field(), Rational(x), Rational(y));
}

bool ResidueRing::congruent(const FieldElt& x, const FieldElt& y) const { return Pm_.contains(x - y); }

bool ResidueRing::is_invertible(const FieldElt& e) const { return !P_.contains(e); }

FieldElt ResidueRing::pow_mod(const FieldElt& e, const Integer& k) const {
    if (k < 0) throw std::invalid_argument("pow_mod needs a nonnegative exponent");
    FieldElt r(field(), Rational(1));
    FieldElt base = reduce_elt(e);
    Integer kk = k;
    while (kk > 0) {
        if (mpz_odd_p(kk.get_mpz_t())) r = reduce_elt(r * base);
        base = reduce_elt(base * base);
        kk >>= 1;
    }
    return r;
}

FieldElt ResidueRing::inverse_mod(const FieldElt& e) const {
    if (!is_invertible(e)) throw std::domain_error("residue is not invertible");
    FieldElt inv = pow_mod(e, units_ - 1);
    if (!congruent(inv * e, FieldElt(field(), Rational(1)))) throw std::logic_error("residue inverse failed");
    return inv;
}

std::vector<FieldElt> ResidueRing::all_residues() const {
    std::vector<FieldElt> out;
    Integer A(Integer(Pm_.scale().get_num()) * Pm_.hnf_a());
    Integer C = field().degree == 1 ? Integer(1) : Integer(Integer(Pm_.scale().get_num()) * Pm_.hnf_c());
    for (Integer x = 0; x < A; ++x)
        for (Integer y = 0; y < C; ++y)
            out.emplace_back(field(), Rational(x), field().degree == 1 ? Rational(0) : Rational(y));
    return out;
}

std::vector<FieldElt> ResidueRing::unit_residues() const {
    std::vector<FieldElt> out;
    for (const FieldElt& e : all_residues())
        if (is_invertible(e)) out.push_back(e);
    return out;
}

}  // namespace padl
