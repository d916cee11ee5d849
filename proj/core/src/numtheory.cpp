#include "origami/numtheory.hpp"

#include <mpfr.h>

#include <json.hpp>

#include "origami/literal.hpp"

namespace origami {

namespace {

bool is_prime_u(unsigned n) {
    if (n < 2) return false;
    for (unsigned p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

/// zeta_n^e inside the conductor-2n field.
CycNum zeta_n_pow(const FieldPtr& field, long e) {
    return CycNum::zeta_pow(field, 2 * e);
}

CycNum one_minus_zeta_pow(const FieldPtr& field, long e) {
    return CycNum::one(field) - zeta_n_pow(field, e);
}

/// Factor descriptor whose elementary monomial equals
/// (1-zeta_n^a)/(1-zeta_n^b): u = a, v = a - b mod n, since then
/// (u/v)^2 = zeta_n^b.
MonomialFactor factor_for_quotient(long a, long b, unsigned n) {
    const long nn = n;
    long uk = ((a % nn) + nn) % nn;
    long vk = (((a - b) % nn) + nn) % nn;
    return {Angle(n, static_cast<unsigned>(uk)), Angle(n, static_cast<unsigned>(vk))};
}

/// Term list for an element of Z[zeta_n] given integer coordinates e_j:
/// e_j zeta^j = e_j (-1)^j ((1-zeta)/(1-zeta^{-1}))^j.
MonomialExpr expr_from_integer_coords(std::span<const Int> coords, unsigned n) {
    MonomialExpr expr;
    expr.order = n;
    const MonomialFactor neg_zeta = factor_for_quotient(1, -1, n);
    for (std::size_t j = 0; j < coords.size(); ++j) {
        if (coords[j] == 0) continue;
        MonomialTerm term;
        term.coeff = (j % 2 == 1) ? Int(-coords[j]) : coords[j];
        term.factors.assign(j, neg_zeta);
        expr.terms.push_back(std::move(term));
    }
    return expr;
}

}  // namespace

CycNum elementary_monomial(Angle u, Angle v, const FieldPtr& field) {
    if (u.order != v.order)
        throw std::invalid_argument("elementary_monomial: angle order mismatch");
    if (u.k == v.k)
        throw std::invalid_argument("elementary_monomial: angles must be distinct classes");
    if (field->conductor() != 2 * u.order)
        throw std::invalid_argument("elementary_monomial: field conductor must be 2n");
    const unsigned n = u.order;
    // (1 - u^2) / (1 - (u/v)^2) with u^2 = zeta_n^{u.k}
    const CycNum num = one_minus_zeta_pow(field, u.k);
    const CycNum den = one_minus_zeta_pow(field, (u.k + n - v.k) % n);
    return num / den;
}

CycNum evaluate(const MonomialExpr& expr, const FieldPtr& field) {
    CycNum acc = CycNum::zero(field);
    for (const MonomialTerm& term : expr.terms) {
        CycNum prod = CycNum::one(field);
        for (const MonomialFactor& f : term.factors) prod *= elementary_monomial(f.u, f.v, field);
        acc += prod.scaled(Rational(term.coeff));
    }
    return acc;
}

MonomialExpr expr_add(const MonomialExpr& a, const MonomialExpr& b) {
    if (a.order != b.order) throw std::invalid_argument("expr_add: order mismatch");
    MonomialExpr out = a;
    out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
    return out;
}

MonomialExpr expr_mul(const MonomialExpr& a, const MonomialExpr& b) {
    if (a.order != b.order) throw std::invalid_argument("expr_mul: order mismatch");
    MonomialExpr out;
    out.order = a.order;
    for (const MonomialTerm& ta : a.terms) {
        for (const MonomialTerm& tb : b.terms) {
            MonomialTerm t;
            t.coeff = ta.coeff * tb.coeff;
            t.factors = ta.factors;
            t.factors.insert(t.factors.end(), tb.factors.begin(), tb.factors.end());
            out.terms.push_back(std::move(t));
        }
    }
    return out;
}

std::string monomial_expr_to_json(const MonomialExpr& expr) {
    nlohmann::json j;
    j["n"] = expr.order;
    j["terms"] = nlohmann::json::array();
    for (const MonomialTerm& t : expr.terms) {
        nlohmann::json jt;
        jt["coeff"] = t.coeff.get_str();
        jt["factors"] = nlohmann::json::array();
        for (const MonomialFactor& f : t.factors)
            jt["factors"].push_back({{"u", f.u.k}, {"v", f.v.k}});
        j["terms"].push_back(std::move(jt));
    }
    return j.dump();
}

MonomialExpr monomial_expr_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    MonomialExpr expr;
    expr.order = j.at("n").get<unsigned>();
    for (const auto& jt : j.at("terms")) {
        MonomialTerm t;
        const auto& c = jt.at("coeff");
        t.coeff = c.is_string() ? Int(c.get<std::string>()) : Int(c.get<long>());
        for (const auto& jf : jt.at("factors"))
            t.factors.push_back({Angle(expr.order, jf.at("u").get<unsigned>()),
                                 Angle(expr.order, jf.at("v").get<unsigned>())});
        expr.terms.push_back(std::move(t));
    }
    return expr;
}

CycNum quotient_1mz(long a, long b, unsigned n) {
    const long nn = n;
    if (a % nn == 0 || b % nn == 0)
        throw std::invalid_argument("quotient_1mz: exponents must be nonzero mod n");
    FieldPtr field = Field::make(2 * n);
    return one_minus_zeta_pow(field, a) / one_minus_zeta_pow(field, b);
}

CycNum check_eqn2(unsigned n) {
    if (n < 2) throw std::invalid_argument("check_eqn2: requires n >= 2");
    FieldPtr field = Field::make(2 * n);
    CycNum prod = CycNum::one(field);
    for (unsigned k = 1; k < n; ++k) prod *= one_minus_zeta_pow(field, k);
    if (!(prod == CycNum::from_rational(field, Rational(n))))
        throw std::logic_error("check_eqn2: product does not equal n");
    return prod;
}

CycNum coprime_unit_product(unsigned n) {
    const auto factors = factorize(Int(n));
    if (factors.size() != 2 || factors.begin()->second != 1 || std::next(factors.begin())->second != 1)
        throw std::invalid_argument("coprime_unit_product: n must be a product of two distinct primes");
    FieldPtr field = Field::make(2 * n);
    CycNum prod = CycNum::one(field);
    CycNum cofactor = CycNum::one(field);  // the factors other than 1 - zeta
    for (unsigned k = 1; k < n; ++k) {
        if (gcd_u(k, n) != 1) continue;
        prod *= one_minus_zeta_pow(field, k);
        if (k != 1) cofactor *= one_minus_zeta_pow(field, k);
    }
    if (!(prod == CycNum::one(field)))
        throw std::logic_error("coprime_unit_product: product does not equal 1");
    // the cofactor is the exact inverse of 1 - zeta and lies in Z[zeta_n]
    if (!(cofactor * one_minus_zeta_pow(field, 1) == CycNum::one(field)))
        throw std::logic_error("coprime_unit_product: inverse certificate failed");
    auto coords = subfield_coords(cofactor, n);
    if (!coords || !integrality_profile(*coords).empty())
        throw std::logic_error("coprime_unit_product: inverse not an algebraic integer");
    return prod;
}

CycNum InversePrimeCert::evaluate() const {
    CycNum acc = multiplier;
    const FieldPtr& field = multiplier.field_ptr();
    for (const auto& [a, b] : quotient_pairs)
        acc *= one_minus_zeta_pow(field, a) / one_minus_zeta_pow(field, b);
    return acc;
}

InversePrimeCert inverse_prime_product(unsigned n, unsigned p) {
    if (is_prime_u(n) || n < 4) throw std::invalid_argument("inverse_prime_product: n must be composite");
    if (!is_prime_u(p) || n % p != 0)
        throw std::invalid_argument("inverse_prime_product: p must be a prime divisor of n");
    FieldPtr field = Field::make(2 * n);

    // reduce to a divisor d of n with d = p*q (q another prime) or d = p^2
    unsigned q = 0;
    for (unsigned c = 2; c <= n; ++c) {
        if (c != p && is_prime_u(c) && n % c == 0) {
            q = c;
            break;
        }
    }
    const unsigned d = q != 0 ? p * q : p * p;
    const unsigned lift = n / d;  // zeta_d = zeta_n^{n/d}

    InversePrimeCert cert{n, p, CycNum::one(field), {}};
    if (q != 0) {
        // n = pq route: u/p = prod_{k=1}^{p-1} (1-zeta_d)/(1-zeta_d^{qk})
        // with u = (1-zeta_d)^{p-1}; invert u through the coprime product
        for (unsigned k = 1; k < p; ++k)
            cert.quotient_pairs.emplace_back(lift, lift * ((q * k) % d));
        CycNum inv_1mz = CycNum::one(field);
        for (unsigned k = 2; k < d; ++k)
            if (gcd_u(k, d) == 1) inv_1mz *= one_minus_zeta_pow(field, lift * k);
        cert.multiplier = inv_1mz.pow(static_cast<long>(p) - 1);
    } else {
        // n = p^2 route: prod_{gcd(k,p)=1} (1-zeta_d^k)/(1-zeta_d^{pk}) equals
        // 1/p^{p-1}; multiplying by p^{p-2} leaves 1/p
        for (unsigned k = 1; k < d; ++k)
            if (k % p != 0) cert.quotient_pairs.emplace_back(lift * k, lift * ((p * k) % d));
        Int scale(1);
        for (unsigned i = 2; i < p; ++i) scale *= p;
        cert.multiplier = CycNum::from_rational(field, Rational(scale));
    }

    if (!(cert.evaluate() == CycNum::from_rational(field, Rational(1, p))))
        throw std::logic_error("inverse_prime_product: certificate does not evaluate to 1/p");
    return cert;
}

MembershipReport ring_membership(const CycNum& x, unsigned n) {
    if (x.conductor() != 2 * n)
        throw std::invalid_argument("ring_membership: conductor must be 2n");
    MembershipReport report{Membership::outside_field, subfield_coords(x, n), {}};
    if (!report.coords) return report;
    report.denominator_primes = integrality_profile(*report.coords);
    if (report.denominator_primes.empty()) {
        report.verdict = Membership::integer_ring;
        return report;
    }
    const std::set<Int> allowed = primes_dividing(Int(n));
    bool contained = true;
    for (const Int& p : report.denominator_primes)
        if (!allowed.contains(p)) contained = false;
    report.verdict = contained ? Membership::localized_ring : Membership::field_only;
    return report;
}

std::string verdict_text(Membership verdict, unsigned n) {
    const std::string ns = std::to_string(n);
    switch (verdict) {
        case Membership::integer_ring: return "in Z[zeta_" + ns + "]";
        case Membership::localized_ring: return "in Z[1/" + ns + ", zeta_" + ns + "] only";
        case Membership::field_only: return "in Q(zeta_" + ns + ") only";
        case Membership::outside_field: return "outside Q(zeta_" + ns + ")";
    }
    return "?";
}

namespace {

MonomialExpr cert_expr(const InversePrimeCert& cert, unsigned n) {
    // integer coordinates of the Z[zeta_n] multiplier
    auto coords = subfield_coords(cert.multiplier, n);
    if (!coords || !integrality_profile(*coords).empty())
        throw std::logic_error("decompose: certificate multiplier not in Z[zeta_n]");
    std::vector<Int> e;
    e.reserve(coords->size());
    for (const Rational& c : *coords) e.push_back(c.get_num());
    MonomialExpr mult = expr_from_integer_coords(e, n);

    MonomialExpr quots;
    quots.order = n;
    MonomialTerm t;
    t.coeff = 1;
    for (const auto& [a, b] : cert.quotient_pairs)
        t.factors.push_back(factor_for_quotient(a, b, n));
    quots.terms.push_back(std::move(t));
    return expr_mul(mult, quots);
}

}  // namespace

MonomialExpr decompose(const CycNum& x, unsigned n) {
    const MembershipReport report = ring_membership(x, n);
    if (report.verdict != Membership::integer_ring && report.verdict != Membership::localized_ring)
        throw std::invalid_argument("decompose: " + verdict_text(report.verdict, n) +
                                    " is not a constructible-ring membership");
    const std::vector<Rational>& coords = *report.coords;

    Int denom(1);
    for (const Rational& c : coords) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den().get_mpz_t());
    if (denom != 1 && is_prime_u(n))
        throw std::invalid_argument(
            "decompose: denominators are not constructible for prime n (the ring is Z[zeta_n])");

    std::vector<Int> scaled;
    scaled.reserve(coords.size());
    for (const Rational& c : coords) {
        Rational s = c * denom;
        s.canonicalize();
        scaled.push_back(s.get_num());
    }
    MonomialExpr expr = expr_from_integer_coords(scaled, n);

    for (const auto& [p, mult] : factorize(denom)) {
        const InversePrimeCert cert = inverse_prime_product(n, static_cast<unsigned>(p.get_ui()));
        const MonomialExpr ce = cert_expr(cert, n);
        for (unsigned i = 0; i < mult; ++i) expr = expr_mul(expr, ce);
    }

    if (!(evaluate(expr, x.field_ptr()) == x))
        throw std::logic_error("decompose: expression does not evaluate back to the input");
    return expr;
}

double sine_quotient_value(const SineQuotient& sq, unsigned precision) {
    if (precision < 53)
        throw std::invalid_argument("sine_quotient_value: precision must be >= 53 bits");
    Rational a = sq.a, b = sq.b, c = sq.c;
    a.canonicalize();
    b.canonicalize();
    c.canonicalize();
    Rational diff = a - b;
    diff.canonicalize();
    if (diff.get_den() == 1)
        throw std::invalid_argument("sine_quotient_value: sin(pi(a-b)) vanishes");

    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision) + 8;
    mpfr_t pi, arg, num, den;
    mpfr_inits2(prec, pi, arg, num, den, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi, MPFR_RNDN);
    Rational ac = a - c;
    ac.canonicalize();
    mpfr_mul_q(arg, pi, ac.get_mpq_t(), MPFR_RNDN);
    mpfr_sin(num, arg, MPFR_RNDN);
    mpfr_mul_q(arg, pi, diff.get_mpq_t(), MPFR_RNDN);
    mpfr_sin(den, arg, MPFR_RNDN);
    mpfr_div(num, num, den, MPFR_RNDN);
    const double out = mpfr_get_d(num, MPFR_RNDN);
    mpfr_clears(pi, arg, num, den, static_cast<mpfr_ptr>(nullptr));
    return out;
}

}  // namespace origami
