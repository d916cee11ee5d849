#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "origami/geometry.hpp"

namespace origami {

/// Descriptor of the elementary monomial I_{u,v}(1,0), u != v.
struct MonomialFactor {
    Angle u;
    Angle v;
};

struct MonomialTerm {
    Int coeff;
    std::vector<MonomialFactor> factors;
};

/// Integer linear combination of products of elementary monomials; the
/// normal form every ring element reduces to.
struct MonomialExpr {
    unsigned order = 0;  // n
    std::vector<MonomialTerm> terms;
};

/// Exact value of I_{u,v}(1,0) = (1-u^2)/(1-(u/v)^2) in conductor 2n.
/// Agrees with intersect(u, v, 1, 0) identically.
CycNum elementary_monomial(Angle u, Angle v, const FieldPtr& field);

/// Exact value of a MonomialExpr in conductor 2n.
CycNum evaluate(const MonomialExpr& expr, const FieldPtr& field);

MonomialExpr expr_add(const MonomialExpr& a, const MonomialExpr& b);
MonomialExpr expr_mul(const MonomialExpr& a, const MonomialExpr& b);

/// JSON-shaped text form: {"n":..,"terms":[{"coeff":"..","factors":[{"u":..,"v":..}]}]}.
/// Round-trips exactly; coefficients travel as decimal strings.
std::string monomial_expr_to_json(const MonomialExpr& expr);
MonomialExpr monomial_expr_from_json(const std::string& text);

/// (1 - zeta_n^a)/(1 - zeta_n^b) for a, b nonzero mod n, in conductor 2n.
CycNum quotient_1mz(long a, long b, unsigned n);

/// Verifies n = prod_{k=1}^{n-1}(1 - zeta_n^k) exactly and returns the
/// product value.
CycNum check_eqn2(unsigned n);

/// For n = p*q with p, q distinct primes: evaluates
/// prod_{gcd(k,n)=1}(1 - zeta_n^k), asserts it equals 1, and certifies that
/// 1 - zeta_n is a unit by checking its inverse lies in Z[zeta_n].
CycNum coprime_unit_product(unsigned n);

/// Certificate that 1/p is a product of an element of Z[zeta_n] with
/// quotients (1-zeta^a)/(1-zeta^b); exact evaluation equals 1/p.
struct InversePrimeCert {
    unsigned n;
    unsigned p;
    CycNum multiplier;  // element of Z[zeta_n]
    std::vector<std::pair<unsigned, unsigned>> quotient_pairs;  // (a, b) exponents of zeta_n

    CycNum evaluate() const;
};

InversePrimeCert inverse_prime_product(unsigned n, unsigned p);

enum class Membership {
    integer_ring,    // in Z[zeta_n]
    localized_ring,  // in Z[1/n, zeta_n] only
    field_only,      // in Q(zeta_n) only
    outside_field,   // outside Q(zeta_n)
};

struct MembershipReport {
    Membership verdict;
    std::optional<std::vector<Rational>> coords;  // basis 1, zeta_n, ...
    std::set<Int> denominator_primes;
};

MembershipReport ring_membership(const CycNum& x, unsigned n);

std::string verdict_text(Membership verdict, unsigned n);

/// Rewrite x as an integer combination of products of elementary monomials:
/// powers of the -zeta_n monomial carry the subfield coordinates and 1/p
/// certificates supply denominator primes. Requires x in Z[zeta_n] or
/// Z[1/n, zeta_n].
MonomialExpr decompose(const CycNum& x, unsigned n);

/// Quotient of pairings <u,w>/<u,v> as a real number, with u = e^{i pi a},
/// v = e^{i pi b}, w = e^{i pi c}: sin(pi(a-c))/sin(pi(a-b)).
struct SineQuotient {
    Rational a;
    Rational b;
    Rational c;
};

double sine_quotient_value(const SineQuotient& sq, unsigned precision = 64);

}  // namespace origami
