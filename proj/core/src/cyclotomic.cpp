#include "origami/cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <utility>

namespace origami {

Field::Field(unsigned conductor) : conductor_(conductor) {
    if (conductor == 0) throw std::invalid_argument("Field: conductor must be >= 1");
    CycPolyTable table;
    modulus_ = table.poly(conductor);
    degree_ = static_cast<unsigned>(modulus_.degree());
    power_rows_.reserve(conductor);
    RationalPoly row = RationalPoly::constant(1);
    for (unsigned j = 0; j < conductor; ++j) {
        power_rows_.push_back(row);
        row = reduce(row.shifted(1));
    }
}

FieldPtr Field::make(unsigned conductor) {
    return FieldPtr(new Field(conductor));
}

RationalPoly Field::reduce(const RationalPoly& p) const {
    if (p.degree() < static_cast<int>(degree_)) return p;
    return poly_divmod(p, modulus_).second;
}

CycNum::CycNum(FieldPtr field, RationalPoly coeffs) : field_(std::move(field)) {
    if (!field_) throw std::invalid_argument("CycNum: null field");
    coeffs_ = field_->reduce(coeffs);
}

CycNum CycNum::zero(FieldPtr field) {
    return CycNum(std::move(field), RationalPoly{});
}

CycNum CycNum::one(FieldPtr field) {
    return CycNum(std::move(field), RationalPoly::constant(1));
}

CycNum CycNum::from_rational(FieldPtr field, Rational r) {
    return CycNum(std::move(field), RationalPoly::constant(std::move(r)));
}

CycNum CycNum::zeta_pow(FieldPtr field, long k) {
    const long n = static_cast<long>(field->conductor());
    long j = k % n;
    if (j < 0) j += n;
    RationalPoly row = field->power_row(static_cast<unsigned>(j));
    return CycNum(std::move(field), std::move(row));
}

Rational CycNum::rational_value() const {
    if (!is_rational()) throw std::logic_error("rational_value: element is not rational");
    return coeffs_.is_zero() ? Rational(0) : coeffs_[0];
}

void CycNum::check_same_field(const CycNum& o) const {
    if (conductor() != o.conductor())
        throw std::invalid_argument("CycNum: conductor mismatch");
}

CycNum CycNum::operator+(const CycNum& o) const {
    check_same_field(o);
    return CycNum(field_, coeffs_ + o.coeffs_);
}

CycNum CycNum::operator-(const CycNum& o) const {
    check_same_field(o);
    return CycNum(field_, coeffs_ - o.coeffs_);
}

CycNum CycNum::operator*(const CycNum& o) const {
    check_same_field(o);
    return CycNum(field_, coeffs_ * o.coeffs_);
}

CycNum CycNum::operator/(const CycNum& o) const {
    return *this * o.inv();
}

CycNum CycNum::operator-() const {
    return CycNum(field_, -coeffs_);
}

CycNum CycNum::inv() const {
    if (is_zero()) throw division_by_zero();
    auto [g, s, t] = poly_ext_gcd(coeffs_, field_->modulus());
    // Phi_N is irreducible over Q, so g is a nonzero constant
    if (g.degree() != 0) throw std::logic_error("cyc_inv: gcd with Phi_N not constant");
    return CycNum(field_, s.scaled(Rational(1) / g[0]));
}

CycNum CycNum::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    CycNum acc = CycNum::one(field_);
    CycNum base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k != 0) {
        if (k & 1u) acc = acc * base;
        k >>= 1u;
        if (k != 0) base = base * base;
    }
    return acc;
}

CycNum CycNum::conj() const {
    const unsigned n = conductor();
    RationalPoly acc;
    for (int j = 0; j <= coeffs_.degree(); ++j) {
        const Rational& c = coeffs_[static_cast<std::size_t>(j)];
        if (c == 0) continue;
        acc = acc + field_->power_row((n - static_cast<unsigned>(j) % n) % n).scaled(c);
    }
    return CycNum(field_, std::move(acc));
}

bool CycNum::is_real() const {
    return conj() == *this;
}

CycNum CycNum::scaled(const Rational& s) const {
    return CycNum(field_, coeffs_.scaled(s));
}

bool CycNum::operator==(const CycNum& o) const {
    return conductor() == o.conductor() && coeffs_ == o.coeffs_;
}

std::strong_ordering CycNum::operator<=>(const CycNum& o) const {
    if (auto c = conductor() <=> o.conductor(); c != 0) return c;
    if (auto c = coeffs_.degree() <=> o.coeffs_.degree(); c != 0) return c;
    for (int j = 0; j <= coeffs_.degree(); ++j) {
        int c = cmp(coeffs_[static_cast<std::size_t>(j)], o.coeffs_[static_cast<std::size_t>(j)]);
        if (c != 0) return c <=> 0;
    }
    return std::strong_ordering::equal;
}

std::size_t CycNum::hash() const {
    std::size_t h = hash_combine(0x6f726967u, conductor());
    for (int j = 0; j <= coeffs_.degree(); ++j)
        h = hash_combine(h, hash_rational(coeffs_[static_cast<std::size_t>(j)]));
    return h;
}

std::complex<double> CycNum::to_complex(unsigned precision) const {
    if (precision < 53) throw std::invalid_argument("to_complex: precision must be >= 53 bits");
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision) + 8;
    mpfr_t pi, angle, c, s, re, im, term;
    mpfr_inits2(prec, pi, angle, c, s, re, im, term, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);
    for (int j = 0; j <= coeffs_.degree(); ++j) {
        const Rational& q = coeffs_[static_cast<std::size_t>(j)];
        if (q == 0) continue;
        // angle = 2*pi*j/N
        mpfr_mul_ui(angle, pi, 2u * static_cast<unsigned>(j), MPFR_RNDN);
        mpfr_div_ui(angle, angle, conductor(), MPFR_RNDN);
        mpfr_sin_cos(s, c, angle, MPFR_RNDN);
        mpfr_mul_q(term, c, q.get_mpq_t(), MPFR_RNDN);
        mpfr_add(re, re, term, MPFR_RNDN);
        mpfr_mul_q(term, s, q.get_mpq_t(), MPFR_RNDN);
        mpfr_add(im, im, term, MPFR_RNDN);
    }
    std::complex<double> out(mpfr_get_d(re, MPFR_RNDN), mpfr_get_d(im, MPFR_RNDN));
    mpfr_clears(pi, angle, c, s, re, im, term, static_cast<mpfr_ptr>(nullptr));
    return out;
}

SubfieldBasis::SubfieldBasis(const FieldPtr& field, unsigned n) : field_(field), n_(n) {
    if (field->conductor() != 2 * n)
        throw std::invalid_argument("SubfieldBasis: field conductor must be 2n");
    sub_degree_ = euler_phi(n);
    const unsigned dim = field->degree();

    // basis matrix B: column j = coefficients of zeta_{2n}^{2j}
    std::vector<std::vector<Rational>> m(dim);
    for (unsigned r = 0; r < dim; ++r) {
        m[r].assign(sub_degree_ + dim, Rational(0));
        m[r][sub_degree_ + r] = 1;  // augmented identity
    }
    for (unsigned j = 0; j < sub_degree_; ++j) {
        const RationalPoly& col = field->power_row((2 * j) % field->conductor());
        for (int r = 0; r <= col.degree(); ++r)
            m[static_cast<unsigned>(r)][j] = col[static_cast<std::size_t>(r)];
    }

    // Gauss-Jordan over the first sub_degree_ columns
    pivot_rows_.clear();
    unsigned row = 0;
    for (unsigned col = 0; col < sub_degree_; ++col) {
        unsigned piv = row;
        while (piv < dim && m[piv][col] == 0) ++piv;
        if (piv == dim) throw std::logic_error("SubfieldBasis: basis matrix not full rank");
        std::swap(m[piv], m[row]);
        Rational inv = Rational(1) / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (unsigned r = 0; r < dim; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (std::size_t k = 0; k < m[r].size(); ++k) m[r][k] -= f * m[row][k];
        }
        pivot_rows_.push_back(row);
        ++row;
    }

    transform_.assign(dim, {});
    for (unsigned r = 0; r < dim; ++r)
        transform_[r].assign(m[r].begin() + sub_degree_, m[r].end());
}

std::optional<std::vector<Rational>> SubfieldBasis::coords(const CycNum& a) const {
    if (a.conductor() != field_->conductor())
        throw std::invalid_argument("SubfieldBasis: conductor mismatch");
    const unsigned dim = field_->degree();
    const RationalPoly& p = a.coeffs();
    std::vector<Rational> y(dim, Rational(0));
    for (unsigned r = 0; r < dim; ++r) {
        Rational acc(0);
        for (int j = 0; j <= p.degree(); ++j) {
            const Rational& c = p[static_cast<std::size_t>(j)];
            if (c != 0) acc += transform_[r][static_cast<std::size_t>(j)] * c;
        }
        y[r] = std::move(acc);
    }
    // consistency on non-pivot rows
    std::vector<bool> is_pivot(dim, false);
    for (unsigned r : pivot_rows_) is_pivot[r] = true;
    for (unsigned r = 0; r < dim; ++r)
        if (!is_pivot[r] && y[r] != 0) return std::nullopt;
    std::vector<Rational> out(sub_degree_, Rational(0));
    for (unsigned j = 0; j < sub_degree_; ++j) out[j] = y[pivot_rows_[j]];
    return out;
}

CycNum SubfieldBasis::reconstruct(std::span<const Rational> coords) const {
    CycNum acc = CycNum::zero(field_);
    for (std::size_t j = 0; j < coords.size(); ++j) {
        if (coords[j] == 0) continue;
        acc += CycNum::zeta_pow(field_, static_cast<long>(2 * j)).scaled(coords[j]);
    }
    return acc;
}

std::optional<std::vector<Rational>> subfield_coords(const CycNum& a, unsigned n) {
    SubfieldBasis basis(a.field_ptr(), n);
    return basis.coords(a);
}

std::set<Int> integrality_profile(std::span<const Rational> coords) {
    std::set<Int> primes;
    for (const Rational& q : coords) {
        if (q.get_den() == 1) continue;
        for (const Int& p : primes_dividing(q.get_den())) primes.insert(p);
    }
    return primes;
}

}  // namespace origami
