#include "padl/padic.hpp"

#include <sstream>
#include <stdexcept>

namespace padl {

Integer PadicInt::modulus() const { return zpow(Integer(p_), prec_); }

PadicInt::PadicInt(unsigned long p, unsigned prec, const Integer& value) : p_(p), prec_(prec), v_(value) {
    if (p < 2 || !is_prime(Integer(p))) throw std::invalid_argument("p-adic prime must be prime");
    if (prec == 0) throw std::invalid_argument("p-adic precision must be positive");
    Integer m = modulus();
    v_ %= m;
    if (v_ < 0) v_ += m;
}

PadicInt PadicInt::from_rational(const Rational& q, unsigned long p, unsigned prec) {
    Integer den(q.get_den());
    if (den % Integer(p) == 0) throw std::invalid_argument("rational is not p-integral");
    PadicInt r(p, prec, Integer(q.get_num()));
    Integer dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), r.modulus().get_mpz_t()) == 0)
        throw std::logic_error("denominator not invertible");
    r.v_ = (r.v_ * dinv) % r.modulus();
    return r;
}

PadicInt PadicInt::teichmuller(const Integer& a, unsigned long p, unsigned prec) {
    PadicInt r(p, prec, a);
    if (!r.is_unit()) return PadicInt(p, prec, 0);
    // x -> x^p gains one digit of agreement with the root of unity per step
    Integer m = r.modulus();
    for (unsigned i = 0; i < prec; ++i)
        mpz_powm_ui(r.v_.get_mpz_t(), r.v_.get_mpz_t(), p, m.get_mpz_t());
    return r;
}

unsigned PadicInt::valuation() const {
    if (v_ == 0) return prec_;
    unsigned v = static_cast<unsigned>(padl::valuation(v_, Integer(p_)));
    return v < prec_ ? v : prec_;
}

PadicInt PadicInt::inverse() const {
    if (!is_unit()) throw std::domain_error("p-adic inverse needs a unit");
    PadicInt r(p_, prec_, 0);
    Integer m = modulus();
    mpz_invert(r.v_.get_mpz_t(), v_.get_mpz_t(), m.get_mpz_t());
    return r;
}

void PadicInt::match(const PadicInt& o) {
    if (p_ != o.p_) throw std::invalid_argument("mixing different p-adic primes");
    if (o.prec_ < prec_) {
        prec_ = o.prec_;
        v_ %= modulus();
    }
}

PadicInt PadicInt::operator-() const {
    PadicInt r = *this;
    if (r.v_ != 0) r.v_ = r.modulus() - r.v_;
    return r;
}

PadicInt& PadicInt::operator+=(const PadicInt& o) {
    match(o);
    v_ = (v_ + o.v_) % modulus();
    return *this;
}

PadicInt& PadicInt::operator-=(const PadicInt& o) {
    match(o);
    v_ = (v_ - o.v_) % modulus();
    if (v_ < 0) v_ += modulus();
    return *this;
}

PadicInt& PadicInt::operator*=(const PadicInt& o) {
    match(o);
    v_ = (v_ * o.v_) % modulus();
    return *this;
}

std::string PadicInt::str() const {
    std::ostringstream os;
    os << v_.get_str() << " + O(" << p_ << "^" << prec_ << ")";
    return os.str();
}

PadicInt operator+(PadicInt a, const PadicInt& b) { a += b; return a; }
PadicInt operator-(PadicInt a, const PadicInt& b) { a -= b; return a; }
PadicInt operator*(PadicInt a, const PadicInt& b) { a *= b; return a; }

bool operator==(const PadicInt& a, const PadicInt& b) {
    if (a.prime() != b.prime()) return false;
    unsigned prec = std::min(a.precision(), b.precision());
    Integer m = zpow(Integer(a.prime()), prec);
    return a.lift() % m == b.lift() % m;
}

bool operator!=(const PadicInt& a, const PadicInt& b) { return !(a == b); }

PadicInt pow(const PadicInt& a, unsigned long e) {
    PadicInt r(a.prime(), a.precision(), 1);
    PadicInt base = a;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

PadicInt embed_cyclo(const CycloElt& x, unsigned long p, unsigned prec) {
    unsigned long target = p - 1;
    // the stored order is representation only; descend to the minimal one
    // before deciding whether the value has an unramified embedding
    CycloElt y = target % x.order() == 0 ? x : x.reduced();
    if (target % y.order() != 0)
        throw std::invalid_argument("cyclotomic order does not divide p-1, no unramified embedding");
    y = y.lifted_to(target);
    PadicInt w = PadicInt::teichmuller(Integer(primitive_root(p)), p, prec);
    PadicInt acc(p, prec, 0);
    PadicInt wpow(p, prec, 1);
    for (const auto& c : y.coeffs()) {
        if (c != 0) acc += PadicInt::from_rational(c, p, prec) * wpow;
        wpow *= w;
    }
    return acc;
}

}  // namespace padl
