#pragma once

#include <cstddef>
#include <map>
#include <set>

#include <gmpxx.h>

namespace origami {

using Int = mpz_class;
using Rational = mpq_class;

std::size_t hash_int(const Int& z);
std::size_t hash_rational(const Rational& q);

inline std::size_t hash_combine(std::size_t seed, std::size_t h) {
    return seed ^ (h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

bool is_probable_prime(const Int& n);

/// Prime factorization of |n|, n != 0. Trial division plus Pollard rho.
std::map<Int, unsigned> factorize(const Int& n);

/// Primes dividing n (n >= 2 gives a nonempty set).
std::set<Int> primes_dividing(const Int& n);

unsigned euler_phi(unsigned n);
unsigned gcd_u(unsigned a, unsigned b);

}  // namespace origami
