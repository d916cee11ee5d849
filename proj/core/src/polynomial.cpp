#include "origami/polynomial.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace origami {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    for (auto& q : c_) q.canonicalize();
    trim();
}

RationalPoly RationalPoly::constant(Rational c) {
    c.canonicalize();
    RationalPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

RationalPoly RationalPoly::monomial(std::size_t degree, Rational c) {
    c.canonicalize();
    RationalPoly p;
    if (c != 0) {
        p.c_.assign(degree + 1, Rational(0));
        p.c_.back() = std::move(c);
    }
    return p;
}

RationalPoly RationalPoly::x_pow_minus_one(unsigned m) {
    RationalPoly p;
    p.c_.assign(m + 1, Rational(0));
    p.c_[0] = -1;
    p.c_[m] = 1;
    return p;
}

const Rational& RationalPoly::operator[](std::size_t j) const {
    static const Rational zero(0);
    return j < c_.size() ? c_[j] : zero;
}

const Rational& RationalPoly::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

void RationalPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
    RationalPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const {
    RationalPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
    r.trim();
    return r;
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    RationalPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    r.trim();
    return r;
}

RationalPoly RationalPoly::operator-() const {
    RationalPoly r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

RationalPoly RationalPoly::scaled(const Rational& s) const {
    if (s == 0) return {};
    RationalPoly r = *this;
    for (auto& q : r.c_) q *= s;
    return r;
}

RationalPoly RationalPoly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    RationalPoly r;
    r.c_.assign(c_.size() + k, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

bool RationalPoly::has_integer_coeffs() const {
    for (const auto& q : c_)
        if (q.get_den() != 1) return false;
    return true;
}

std::ostream& operator<<(std::ostream& os, const RationalPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int j = p.degree(); j >= 0; --j) {
        const Rational& c = p[static_cast<std::size_t>(j)];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (j == 0)
            os << c;
        else if (c == 1)
            os << "X^" << j;
        else
            os << c << "*X^" << j;
    }
    return os;
}

std::pair<RationalPoly, RationalPoly> poly_divmod(const RationalPoly& a, const RationalPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
    const int db = b.degree();
    const Rational lead_inv = Rational(1) / b.leading();
    std::vector<Rational> quot;
    int dr = static_cast<int>(rem.size()) - 1;
    if (dr >= db) quot.assign(static_cast<std::size_t>(dr - db) + 1, Rational(0));
    while (dr >= db) {
        Rational f = rem[static_cast<std::size_t>(dr)] * lead_inv;
        if (f != 0) {
            quot[static_cast<std::size_t>(dr - db)] = f;
            for (int j = 0; j <= db; ++j)
                rem[static_cast<std::size_t>(dr - db + j)] -= f * b[static_cast<std::size_t>(j)];
        }
        --dr;
        while (dr >= 0 && rem[static_cast<std::size_t>(dr)] == 0) --dr;
        rem.resize(static_cast<std::size_t>(dr + 1));
    }
    return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly poly_exact_div(const RationalPoly& a, const RationalPoly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("poly_exact_div: nonzero remainder");
    return q;
}

std::tuple<RationalPoly, RationalPoly, RationalPoly> poly_ext_gcd(const RationalPoly& a,
                                                                  const RationalPoly& b) {
    RationalPoly r0 = a, r1 = b;
    RationalPoly s0 = RationalPoly::constant(1), s1;
    RationalPoly t0, t1 = RationalPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divmod(r0, r1);
        RationalPoly s2 = s0 - q * s1;
        RationalPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return {r0, s0, t0};
}

const RationalPoly& CycPolyTable::poly(unsigned d) {
    if (d == 0) throw std::invalid_argument("cyclotomic_poly: d must be >= 1");
    auto it = table_.find(d);
    if (it != table_.end()) return it->second;
    RationalPoly result;
    if (d == 1) {
        result = RationalPoly({Rational(-1), Rational(1)});
    } else {
        RationalPoly divisor = RationalPoly::constant(1);
        for (unsigned e = 1; e < d; ++e)
            if (d % e == 0) divisor = divisor * poly(e);
        result = poly_exact_div(RationalPoly::x_pow_minus_one(d), divisor);
    }
    return table_.emplace(d, std::move(result)).first->second;
}

RationalPoly cyclotomic_poly(unsigned d) {
    CycPolyTable table;
    return table.poly(d);
}

}  // namespace origami
