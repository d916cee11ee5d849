#include "origami/rational.hpp"

#include <stdexcept>

namespace origami {

std::size_t hash_int(const Int& z) {
    const mpz_srcptr p = z.get_mpz_t();
    std::size_t h = static_cast<std::size_t>(mpz_sgn(p)) + 0x9e3779b9u;
    const std::size_t n = mpz_size(p);
    const mp_limb_t* limbs = mpz_limbs_read(p);
    for (std::size_t i = 0; i < n; ++i)
        h = hash_combine(h, static_cast<std::size_t>(limbs[i]));
    return h;
}

std::size_t hash_rational(const Rational& q) {
    return hash_combine(hash_int(q.get_num()), hash_int(q.get_den()));
}

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

namespace {

Int pollard_rho(const Int& n) {
    // n odd composite, not a prime power of interest; returns a nontrivial factor
    Int x = 2, y = 2, d = 1, c = 1;
    while (true) {
        x = 2;
        y = 2;
        d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Int diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
        c += 1;
    }
}

void factor_rec(Int n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Int f = pollard_rho(n);
    factor_rec(f, out);
    factor_rec(n / f, out);
}

}  // namespace

std::map<Int, unsigned> factorize(const Int& n) {
    if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
    Int m = abs(n);
    std::map<Int, unsigned> out;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++out[Int(p)];
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    // trial division by 6k±1 up to 2^20, then rho for what remains
    for (unsigned long p = 41; p < (1u << 20) && m > 1; p += 2) {
        if (Int(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++out[Int(p)];
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    if (m > 1) factor_rec(m, out);
    return out;
}

std::set<Int> primes_dividing(const Int& n) {
    std::set<Int> out;
    if (n == 0 || n == 1 || n == -1) return out;
    for (const auto& [p, e] : factorize(n)) out.insert(p);
    return out;
}

unsigned gcd_u(unsigned a, unsigned b) {
    while (b != 0) {
        unsigned t = a % b;
        a = b;
        b = t;
    }
    return a;
}

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

}  // namespace origami
