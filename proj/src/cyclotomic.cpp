#include "padl/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace padl {

unsigned long euler_phi(unsigned long n) {
    if (n == 0) throw std::invalid_argument("euler_phi(0)");
    unsigned long r = 1;
    for (const auto& [p, e] : factor(Integer(n))) {
        unsigned long pu = p.get_ui();
        unsigned long q = 1;
        for (unsigned i = 1; i < e; ++i) q *= pu;
        r *= q * (pu - 1);
    }
    return r;
}

// ---- local polynomial helpers ----------------------------------------------

static void poly_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

static QPoly poly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    poly_trim(r);
    return r;
}

// quotient and remainder of a by b, b nonzero
static void poly_divmod(QPoly a, const QPoly& b, QPoly& quot, QPoly& rem) {
    poly_trim(a);
    quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    const Rational& lead = b.back();
    while (a.size() >= b.size()) {
        Rational c = a.back() / lead;
        size_t shift = a.size() - b.size();
        quot[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        poly_trim(a);
    }
    rem = std::move(a);
}

static QPoly poly_div_exact(const QPoly& a, const QPoly& b) {
    QPoly q, r;
    poly_divmod(a, b, q, r);
    if (!r.empty()) throw std::logic_error("inexact polynomial division");
    return q;
}

static const QPoly& cyclo_locked(unsigned long n, std::map<unsigned long, QPoly>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    QPoly p(n + 1, Rational(0));
    p[0] = -1;
    p[n] = 1;  // x^n - 1
    for (unsigned long d = 1; d < n; ++d)
        if (n % d == 0) p = poly_div_exact(p, cyclo_locked(d, cache));
    return cache.emplace(n, std::move(p)).first->second;
}

const QPoly& cyclotomic_poly(unsigned long n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_poly(0)");
    static std::map<unsigned long, QPoly> cache;
    static std::mutex guard;
    std::lock_guard<std::mutex> lock(guard);
    return cyclo_locked(n, cache);
}

// ---- CycloElt ---------------------------------------------------------------

void CycloElt::reduce(std::vector<Rational> raw) {
    const QPoly& phi = cyclotomic_poly(n_);
    size_t deg = phi.size() - 1;  // = euler_phi(n_)
    poly_trim(raw);
    while (raw.size() > deg) {
        Rational c = raw.back();
        size_t shift = raw.size() - phi.size();
        for (size_t i = 0; i < phi.size(); ++i) raw[shift + i] -= c * phi[i];
        poly_trim(raw);
    }
    raw.resize(deg, Rational(0));
    c_ = std::move(raw);
}

CycloElt::CycloElt() : n_(1), c_(1, Rational(0)) {}

CycloElt::CycloElt(const Rational& a) : n_(1), c_(1, a) {}

CycloElt::CycloElt(long a) : n_(1), c_(1, Rational(a)) {}

CycloElt::CycloElt(unsigned long order, std::vector<Rational> coeffs) : n_(order) {
    if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
    reduce(std::move(coeffs));
}

CycloElt CycloElt::root_of_unity(unsigned long n, long power) {
    if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
    long r = power % static_cast<long>(n);
    if (r < 0) r += static_cast<long>(n);
    std::vector<Rational> raw(static_cast<size_t>(r) + 1, Rational(0));
    raw.back() = 1;
    return CycloElt(n, std::move(raw));
}

bool CycloElt::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool CycloElt::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational CycloElt::rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic element is not rational");
    return c_[0];
}

CycloElt CycloElt::lifted_to(unsigned long m) const {
    if (m % n_ != 0) throw std::invalid_argument("lift target is not a multiple of the order");
    if (m == n_) return *this;
    unsigned long step = m / n_;
    std::vector<Rational> raw;
    raw.resize((c_.size() - 1) * step + 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) raw[i * step] = c_[i];
    return CycloElt(m, std::move(raw));
}

CycloElt CycloElt::operator-() const {
    CycloElt r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

CycloElt& CycloElt::operator+=(const CycloElt& o) {
    unsigned long L = std::lcm(n_, o.n_);
    if (L != n_) *this = lifted_to(L);
    if (L != o.n_) {
        CycloElt tmp = o.lifted_to(L);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += tmp.c_[i];
    } else {
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    }
    return *this;
}

CycloElt& CycloElt::operator-=(const CycloElt& o) {
    *this += -o;
    return *this;
}

CycloElt& CycloElt::operator*=(const CycloElt& o) {
    unsigned long L = std::lcm(n_, o.n_);
    const CycloElt& a = (L == n_) ? *this : lifted_to(L);
    QPoly prod;
    if (L == o.n_) {
        prod = poly_mul(a.c_, o.c_);
    } else {
        prod = poly_mul(a.c_, o.lifted_to(L).c_);
    }
    CycloElt r(L, std::move(prod));
    *this = std::move(r);
    return *this;
}

CycloElt& CycloElt::operator/=(const CycloElt& o) {
    *this *= o.inverse();
    return *this;
}

CycloElt CycloElt::galois(unsigned long c) const {
    if (std::gcd(c % n_, n_) != 1) throw std::invalid_argument("galois exponent not coprime to the order");
    std::vector<Rational> raw(n_, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        raw[(i * (c % n_)) % n_] += c_[i];
    }
    return CycloElt(n_, std::move(raw));
}

CycloElt CycloElt::conj() const {
    if (n_ <= 2) return *this;
    return galois(n_ - 1);
}

CycloElt CycloElt::reduced() const {
    if (is_rational()) return CycloElt(rational_value());
    for (unsigned long d = 2; d < n_; ++d) {
        if (n_ % d != 0) continue;
        // the value lies in Q(zeta_d) iff every sigma_c with c = 1 mod d fixes it
        bool fixed = true;
        for (unsigned long c = 1 + d; c < n_ && fixed; c += d)
            if (std::gcd(c, n_) == 1 && galois(c) != *this) fixed = false;
        if (!fixed) continue;
        // change of basis: solve sum_i a_i zeta_n^{i n/d} = this over Q
        size_t rows = c_.size(), cols = euler_phi(d);
        std::vector<std::vector<Rational>> A(rows, std::vector<Rational>(cols + 1, Rational(0)));
        for (size_t i = 0; i < cols; ++i) {
            CycloElt b = root_of_unity(n_, static_cast<long>(i * (n_ / d)));
            for (size_t r = 0; r < rows; ++r) A[r][i] = b.coeffs()[r];
        }
        for (size_t r = 0; r < rows; ++r) A[r][cols] = c_[r];
        size_t next = 0;
        std::vector<long> where(cols, -1);
        for (size_t col = 0; col < cols && next < rows; ++col) {
            size_t sel = next;
            while (sel < rows && A[sel][col] == 0) ++sel;
            if (sel == rows) continue;
            std::swap(A[sel], A[next]);
            Rational inv = Rational(1) / A[next][col];
            for (size_t j = col; j <= cols; ++j) A[next][j] = A[next][j] * inv;
            for (size_t r = 0; r < rows; ++r) {
                if (r == next || A[r][col] == 0) continue;
                Rational f = A[r][col];
                for (size_t j = col; j <= cols; ++j) A[r][j] = A[r][j] - f * A[next][j];
            }
            where[col] = static_cast<long>(next);
            ++next;
        }
        for (size_t r = next; r < rows; ++r)
            if (A[r][cols] != 0) throw std::logic_error("galois descent produced an inconsistent system");
        std::vector<Rational> sol(cols, Rational(0));
        for (size_t col = 0; col < cols; ++col)
            if (where[col] >= 0) sol[col] = A[where[col]][cols];
        return CycloElt(d, std::move(sol));
    }
    return *this;
}

CycloElt CycloElt::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (is_rational()) return CycloElt(Rational(1) / c_[0]).lifted_to(n_);
    // extended euclid against Phi_n: since Phi_n is irreducible and this
    // element is a nonzero residue, the gcd is a nonzero constant g with
    // t * this = g mod Phi_n, so the inverse is t / g.
    QPoly r0 = cyclotomic_poly(n_);
    QPoly r1 = c_;
    poly_trim(r1);
    QPoly t0, t1{Rational(1)};
    while (true) {
        QPoly q, r2;
        poly_divmod(r0, r1, q, r2);
        if (r2.empty()) break;
        // t2 = t0 - q * t1
        QPoly qt = poly_mul(q, t1);
        QPoly t2 = t0;
        if (t2.size() < qt.size()) t2.resize(qt.size(), Rational(0));
        for (size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
        poly_trim(t2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r1.size() != 1) throw std::logic_error("cyclotomic gcd is not constant");
    for (auto& c : t1) c /= r1[0];
    return CycloElt(n_, std::move(t1));
}

std::complex<double> CycloElt::complex_eval() const {
    std::complex<double> acc(0.0, 0.0);
    const double tau = 2.0 * std::acos(-1.0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        double arg = tau * static_cast<double>(i) / static_cast<double>(n_);
        acc += c_[i].get_d() * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return acc;
}

std::string CycloElt::str() const {
    if (is_rational()) return to_string(c_[0]);
    std::ostringstream os;
    os << "z" << n_ << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << to_string(c_[i]);
    }
    os << "]";
    return os.str();
}

CycloElt operator+(CycloElt a, const CycloElt& b) { a += b; return a; }
CycloElt operator-(CycloElt a, const CycloElt& b) { a -= b; return a; }
CycloElt operator*(CycloElt a, const CycloElt& b) { a *= b; return a; }
CycloElt operator/(CycloElt a, const CycloElt& b) { a /= b; return a; }

bool operator==(const CycloElt& a, const CycloElt& b) {
    unsigned long L = std::lcm(a.order(), b.order());
    return a.lifted_to(L).coeffs() == b.lifted_to(L).coeffs();
}

bool operator!=(const CycloElt& a, const CycloElt& b) { return !(a == b); }

CycloElt pow(const CycloElt& a, long e) {
    if (e < 0) return pow(a.inverse(), -e);
    CycloElt acc(Rational(1));
    CycloElt base = a;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

}  // namespace padl
