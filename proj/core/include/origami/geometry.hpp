#pragma once

#include <complex>
#include <compare>

#include "origami/cyclotomic.hpp"

namespace origami {

/// Element of the angle group U_n: the class of e^{i*pi*k/n} in T/{+-1},
/// stored as the residue k mod n.
struct Angle {
    unsigned order;  // n
    unsigned k;      // 0 <= k < n

    Angle(unsigned order, unsigned k) : order(order), k(k % order) {
        if (order == 0) throw std::invalid_argument("Angle: order must be positive");
    }

    bool operator==(const Angle& o) const = default;
    auto operator<=>(const Angle& o) const = default;

    /// Group law of U_n: class of the product of representatives.
    Angle operator*(const Angle& o) const {
        if (order != o.order) throw std::invalid_argument("Angle: order mismatch");
        return Angle(order, (k + o.k) % order);
    }

    /// zeta_{2n}^k in a field of conductor 2n.
    CycNum representative(const FieldPtr& field) const;
    /// e^{i*pi*k/n}
    std::complex<double> representative_float() const;
};

/// <x,y> = x*conj(y) - conj(x)*y; additive, antisymmetric, purely imaginary.
CycNum pairing(const CycNum& x, const CycNum& y);

/// The line {p + r*u : r real} through p with direction class u.
struct Line {
    CycNum anchor;
    Angle direction;
    /// q on the line iff <q - anchor, u> = 0.
    bool contains(const CycNum& q) const;
};

/// Unique intersection of L_u(p) and L_v(q) for distinct angle classes:
/// (<u,p>/<u,v>) v + (<v,q>/<v,u>) u. The result is checked against both
/// line-membership conditions before being returned.
CycNum intersect(Angle u, Angle v, const CycNum& p, const CycNum& q);

/// intersect(u, v, p, 0): projection of p onto {r*v} in the direction u.
CycNum project(Angle u, Angle v, const CycNum& p);

/// Floating-point mirror of intersect over complex angle representatives.
/// Near-parallel directions (|sin| of the angle difference below 1e-12) are
/// rejected; exact distinct U_n classes never trigger this.
std::complex<double> intersect_float(std::complex<double> u, std::complex<double> v,
                                     std::complex<double> p, std::complex<double> q);
std::complex<double> intersect_float(Angle u, Angle v, std::complex<double> p,
                                     std::complex<double> q);

/// Real-linear map p |-> a*p + b*conj(p).
struct RealLinearMap {
    CycNum a;
    CycNum b;
    CycNum operator()(const CycNum& p) const { return a * p + b * p.conj(); }
    /// Determinant of the induced real 2x2 matrix is |a|^2 - |b|^2; the map
    /// has rank <= 1 iff a*conj(a) == b*conj(b).
    bool is_rank_deficient() const { return a * a.conj() == b * b.conj(); }
};

/// Decomposition intersect(u,v,p,q) = A(p) + B(q) with A + B the identity.
struct LinearMapPair {
    RealLinearMap A;
    RealLinearMap B;
};

LinearMapPair convexity_maps(Angle u, Angle v, const FieldPtr& field);

}  // namespace origami
