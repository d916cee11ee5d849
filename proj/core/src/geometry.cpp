#include "origami/geometry.hpp"

#include <cmath>
#include <numbers>

namespace origami {

CycNum Angle::representative(const FieldPtr& field) const {
    if (field->conductor() != 2 * order)
        throw std::invalid_argument("Angle: field conductor must be 2n");
    return CycNum::zeta_pow(field, k);
}

std::complex<double> Angle::representative_float() const {
    const double theta = std::numbers::pi * k / order;
    return {std::cos(theta), std::sin(theta)};
}

CycNum pairing(const CycNum& x, const CycNum& y) {
    return x * y.conj() - x.conj() * y;
}

bool Line::contains(const CycNum& q) const {
    return pairing(q - anchor, direction.representative(anchor.field_ptr())).is_zero();
}

CycNum intersect(Angle u, Angle v, const CycNum& p, const CycNum& q) {
    if (u.order != v.order) throw std::invalid_argument("intersect: angle order mismatch");
    if (u.k == v.k) throw std::invalid_argument("intersect: angles must be distinct classes");
    const FieldPtr& field = p.field_ptr();
    const CycNum ur = u.representative(field);
    const CycNum vr = v.representative(field);
    const CycNum uv = pairing(ur, vr);  // nonzero for distinct classes
    const CycNum uv_inv = uv.inv();
    CycNum result = pairing(ur, p) * uv_inv * vr - pairing(vr, q) * uv_inv * ur;
    // both line-membership postconditions hold exactly
    if (!pairing(result - p, ur).is_zero() || !pairing(result - q, vr).is_zero())
        throw std::logic_error("intersect: postcondition violated");
    return result;
}

CycNum project(Angle u, Angle v, const CycNum& p) {
    CycNum result = intersect(u, v, p, CycNum::zero(p.field_ptr()));
    // result is a real multiple of v: divide by the unit v via conjugation
    if (!(result * v.representative(p.field_ptr()).conj()).is_real())
        throw std::logic_error("project: result not on the target line");
    return result;
}

namespace {

std::complex<double> pairing_float(std::complex<double> x, std::complex<double> y) {
    return x * std::conj(y) - std::conj(x) * y;
}

}  // namespace

std::complex<double> intersect_float(std::complex<double> u, std::complex<double> v,
                                     std::complex<double> p, std::complex<double> q) {
    const std::complex<double> uv = pairing_float(u, v);
    // |<u,v>| = 2 |u||v| |sin(angle difference)|
    if (std::abs(uv) < 2e-12 * std::abs(u) * std::abs(v))
        throw std::domain_error("intersect_float: near-parallel directions");
    return pairing_float(u, p) / uv * v - pairing_float(v, q) / uv * u;
}

std::complex<double> intersect_float(Angle u, Angle v, std::complex<double> p,
                                     std::complex<double> q) {
    if (u.order != v.order) throw std::invalid_argument("intersect_float: angle order mismatch");
    if (u.k == v.k) throw std::invalid_argument("intersect_float: angles must be distinct classes");
    return intersect_float(u.representative_float(), v.representative_float(), p, q);
}

LinearMapPair convexity_maps(Angle u, Angle v, const FieldPtr& field) {
    if (u.order != v.order) throw std::invalid_argument("convexity_maps: angle order mismatch");
    if (u.k == v.k) throw std::invalid_argument("convexity_maps: angles must be distinct classes");
    const CycNum ur = u.representative(field);
    const CycNum vr = v.representative(field);
    const CycNum uv_inv = pairing(ur, vr).inv();
    // from <u,p> v / <u,v>: coefficient of p is -conj(u) v, of conj(p) is u v
    RealLinearMap A{-(ur.conj() * vr * uv_inv), ur * vr * uv_inv};
    // from <v,q> u / <v,u>: coefficient of q is conj(v) u, of conj(q) is -v u
    RealLinearMap B{vr.conj() * ur * uv_inv, -(vr * ur * uv_inv)};
    return {A, B};
}

}  // namespace origami
