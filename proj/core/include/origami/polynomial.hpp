#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <span>
#include <tuple>
#include <vector>

#include "origami/rational.hpp"

namespace origami {

/// Dense polynomial over Q. Coefficient j is the coefficient of X^j; the
/// stored sequence never has a trailing zero (the zero polynomial is empty).
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs);
    static RationalPoly constant(Rational c);
    static RationalPoly monomial(std::size_t degree, Rational c = 1);
    /// X^m - 1
    static RationalPoly x_pow_minus_one(unsigned m);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::span<const Rational> coeffs() const { return c_; }
    const Rational& operator[](std::size_t j) const;
    const Rational& leading() const;

    RationalPoly operator+(const RationalPoly& o) const;
    RationalPoly operator-(const RationalPoly& o) const;
    RationalPoly operator*(const RationalPoly& o) const;
    RationalPoly operator-() const;
    RationalPoly scaled(const Rational& s) const;
    /// Multiply by X^k.
    RationalPoly shifted(std::size_t k) const;

    bool operator==(const RationalPoly& o) const { return c_ == o.c_; }

    /// All coefficients integral.
    bool has_integer_coeffs() const;

    friend std::ostream& operator<<(std::ostream&, const RationalPoly&);

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder of a by b, b nonzero; a = q*b + r, deg r < deg b.
std::pair<RationalPoly, RationalPoly> poly_divmod(const RationalPoly& a, const RationalPoly& b);

/// Division known to be exact; throws std::logic_error on a nonzero remainder.
RationalPoly poly_exact_div(const RationalPoly& a, const RationalPoly& b);

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g. g is some nonzero
/// gcd representative (not normalized to monic).
std::tuple<RationalPoly, RationalPoly, RationalPoly> poly_ext_gcd(const RationalPoly& a,
                                                                  const RationalPoly& b);

/// Session-local table of cyclotomic polynomials Phi_d, built on demand
/// from Phi_d = (X^d - 1) / prod_{e|d, e<d} Phi_e.
class CycPolyTable {
public:
    const RationalPoly& poly(unsigned d);

private:
    std::map<unsigned, RationalPoly> table_;
};

/// Phi_d via a fresh table.
RationalPoly cyclotomic_poly(unsigned d);

}  // namespace origami
