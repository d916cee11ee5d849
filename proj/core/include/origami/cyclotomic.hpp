#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "origami/polynomial.hpp"
#include "origami/rational.hpp"

namespace origami {

struct division_by_zero : std::domain_error {
    division_by_zero() : std::domain_error("division by zero in Q(zeta_N)") {}
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Immutable context for arithmetic in Q(zeta_N): the cyclotomic polynomial
/// Phi_N and reduced rows for every power zeta_N^k, k < N. Values sharing a
/// Field share it by pointer; no global state is involved.
class Field {
public:
    static FieldPtr make(unsigned conductor);

    unsigned conductor() const { return conductor_; }
    unsigned degree() const { return degree_; }
    const RationalPoly& modulus() const { return modulus_; }

    /// X^j mod Phi_N for 0 <= j < N.
    const RationalPoly& power_row(unsigned j) const { return power_rows_[j % conductor_]; }

    RationalPoly reduce(const RationalPoly& p) const;

private:
    explicit Field(unsigned conductor);
    unsigned conductor_;
    unsigned degree_;
    RationalPoly modulus_;
    std::vector<RationalPoly> power_rows_;
};

/// Exact element of Q(zeta_N) on the power basis 1, zeta, ..., zeta^{phi(N)-1}.
/// Canonical form: coefficients fully reduced mod Phi_N and in lowest terms,
/// so equality of coefficient sequences is equality of field elements.
class CycNum {
public:
    CycNum(FieldPtr field, RationalPoly coeffs);

    static CycNum zero(FieldPtr field);
    static CycNum one(FieldPtr field);
    static CycNum from_rational(FieldPtr field, Rational r);
    /// zeta_N^k, any integer k (reduced mod N).
    static CycNum zeta_pow(FieldPtr field, long k);

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    unsigned conductor() const { return field_->conductor(); }
    const RationalPoly& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.is_zero(); }
    bool is_rational() const { return coeffs_.degree() <= 0; }
    /// Value as a rational; requires is_rational().
    Rational rational_value() const;

    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator*(const CycNum& o) const;
    CycNum operator/(const CycNum& o) const;
    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

    /// Multiplicative inverse; throws division_by_zero on 0.
    CycNum inv() const;
    CycNum pow(long e) const;
    /// Image under zeta |-> zeta^{N-1} (complex conjugation).
    CycNum conj() const;
    bool is_real() const;

    CycNum scaled(const Rational& s) const;

    bool operator==(const CycNum& o) const;
    /// Total order on canonical forms (conductor, then coefficients).
    std::strong_ordering operator<=>(const CycNum& o) const;

    std::size_t hash() const;

    /// Numeric embedding zeta_N |-> exp(2*pi*i/N), evaluated internally at
    /// `precision` bits (>= 53) before rounding to double.
    std::complex<double> to_complex(unsigned precision = 64) const;

private:
    void check_same_field(const CycNum& o) const;
    FieldPtr field_;
    RationalPoly coeffs_;
};

struct CycNumHash {
    std::size_t operator()(const CycNum& a) const { return a.hash(); }
};

/// Coordinates of `a` on the basis 1, zeta_n, ..., zeta_n^{phi(n)-1} of the
/// subfield Q(zeta_n) of Q(zeta_2n), or absent when a lies outside it.
std::optional<std::vector<Rational>> subfield_coords(const CycNum& a, unsigned n);

/// Primes dividing any coordinate denominator; empty means the element lies
/// in Z[zeta_n].
std::set<Int> integrality_profile(std::span<const Rational> coords);

/// Precomputed basis-change solver for the Q(zeta_n) subfield of Q(zeta_2n);
/// use when many elements of one session are tested.
class SubfieldBasis {
public:
    SubfieldBasis(const FieldPtr& field, unsigned n);
    std::optional<std::vector<Rational>> coords(const CycNum& a) const;
    /// Rebuild the element from subfield coordinates.
    CycNum reconstruct(std::span<const Rational> coords) const;
    unsigned subfield_order() const { return n_; }

private:
    FieldPtr field_;
    unsigned n_;
    unsigned sub_degree_;
    // row-reduced transform T of the basis matrix B: T*B has unit pivot rows
    std::vector<std::vector<Rational>> transform_;
    std::vector<unsigned> pivot_rows_;
};

}  // namespace origami
