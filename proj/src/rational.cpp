#include "padl/rational.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

namespace padl {

Integer zpow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(const Integer& n, unsigned long k) {
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

long valuation(const Integer& n, const Integer& p) {
    if (n == 0) throw std::invalid_argument("valuation of zero");
    Integer rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const Rational& q, const Integer& p) {
    if (q == 0) throw std::invalid_argument("valuation of zero");
    return valuation(Integer(q.get_num()), p) - valuation(Integer(q.get_den()), p);
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<std::pair<Integer, unsigned>> factor(const Integer& n) {
    if (n == 0) throw std::invalid_argument("factor(0)");
    Integer m = abs(n);
    std::vector<std::pair<Integer, unsigned>> out;
    auto strip = [&](const Integer& p) {
        unsigned e = 0;
        while (m % p == 0) { m /= p; ++e; }
        if (e) out.emplace_back(p, e);
    };
    strip(2);
    for (Integer d = 3; d * d <= m; d += 2) strip(d);
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

int mobius(const Integer& n) {
    if (n <= 0) throw std::invalid_argument("mobius needs n >= 1");
    auto fac = factor(n);
    for (const auto& [p, e] : fac)
        if (e > 1) return 0;
    return fac.size() % 2 == 0 ? 1 : -1;
}

int kronecker(const Integer& a, const Integer& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

unsigned long powmod(unsigned long a, unsigned long e, unsigned long m) {
    Integer r;
    mpz_powm_ui(r.get_mpz_t(), Integer(a).get_mpz_t(), e, Integer(m).get_mpz_t());
    return r.get_ui();
}

unsigned long primitive_root(unsigned long p) {
    if (p < 3 || !is_prime(Integer(p))) throw std::invalid_argument("primitive_root needs an odd prime");
    auto fac = factor(Integer(p - 1));
    for (unsigned long g = 2; g < p; ++g) {
        bool ok = true;
        for (const auto& [q, e] : fac) {
            (void)e;
            if (powmod(g, (p - 1) / q.get_ui(), p) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

Rational qpow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0 && e < 0) throw std::invalid_argument("qpow: 0 to a negative power");
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational r(zpow(Integer(base.get_num()), a), zpow(Integer(base.get_den()), a));
    r.canonicalize();
    if (e < 0) r = 1 / r;
    return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_string(const std::string& s) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

const Rational& bernoulli(unsigned n) {
    static std::deque<Rational> cache{Rational(1)};
    static std::mutex guard;
    std::lock_guard<std::mutex> lock(guard);
    while (cache.size() <= n) {
        unsigned k = static_cast<unsigned>(cache.size());
        Rational acc(0);
        for (unsigned j = 0; j < k; ++j) acc += Rational(binomial(Integer(k + 1), j)) * cache[j];
        Rational b = -acc / Rational(k + 1);
        b.canonicalize();
        cache.push_back(b);
    }
    return cache[n];
}

Rational bernoulli_poly(unsigned k, const Rational& x) {
    Rational acc(0), xpow(1);
    // sum from j = k down to 0 so x powers grow with the loop: term j has x^{k-j}
    for (unsigned j = 0; j <= k; ++j) {
        unsigned bj = k - j;
        acc += Rational(binomial(Integer(k), bj)) * bernoulli(bj) * xpow;
        xpow *= x;
    }
    acc.canonicalize();
    return acc;
}

Rational riemann_zeta_neg(unsigned k) {
    if (k == 0) throw std::invalid_argument("riemann_zeta_neg needs k >= 1");
    Rational r = bernoulli(k) / Rational(k);
    if (k % 2 == 0) r = -r;
    r.canonicalize();
    return r;
}

}  // namespace padl
