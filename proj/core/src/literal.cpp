#include "origami/literal.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace origami {

namespace {

class Scanner {
public:
    Scanner(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::size_t pos() const { return pos_; }

    Int integer() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            digits.push_back(text_[pos_]);
            ++pos_;
        }
        if (digits.empty()) throw parse_error(start, "expected an integer");
        Int v(digits);
        return neg ? Int(-v) : v;
    }

    Rational rational() {
        Int num = integer();
        if (accept('/')) {
            std::size_t dpos = pos();
            Int den = integer();
            if (den == 0) throw parse_error(dpos, "zero denominator");
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

CycNum parse_exact_literal(std::string_view text, const FieldPtr& field) {
    Scanner sc(text);
    CycNum acc = CycNum::zero(field);
    bool first = true;
    while (true) {
        if (sc.eof()) {
            if (first) throw parse_error(sc.pos(), "empty literal");
            break;
        }
        Rational sign(1);
        if (!first) {
            if (sc.accept('+')) {
                // explicit separator; the term may still carry its own sign
            } else if (sc.accept('-')) {
                sign = -1;
            } else {
                throw parse_error(sc.pos(), "expected '+' or '-' between terms");
            }
        }
        Rational coeff(1);
        bool have_coeff = false;
        if (sc.peek() != 'z') {
            coeff = sc.rational();
            have_coeff = true;
        }
        long exponent = -1;  // -1: no z factor
        if (!have_coeff || sc.accept('*')) {
            std::size_t zpos = sc.pos();
            if (!sc.accept('z'))
                throw parse_error(zpos, "expected 'z'");
            if (sc.accept('^')) {
                Int e = sc.integer();
                // exponents reduce mod N; keep them in long range first
                Int n(field->conductor());
                Int r = ((e % n) + n) % n;
                exponent = r.get_si();
            } else {
                exponent = 1;
            }
        }
        CycNum term = exponent < 0 ? CycNum::from_rational(field, coeff)
                                   : CycNum::zeta_pow(field, exponent).scaled(coeff);
        acc += sign == 1 ? term : -term;
        first = false;
    }
    return acc;
}

std::string to_literal(const CycNum& a) {
    const RationalPoly& p = a.coeffs();
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j <= p.degree(); ++j) {
        const Rational& c = p[static_cast<std::size_t>(j)];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (j == 0)
            os << c;
        else
            os << c << "*z^" << j;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& a) {
    return os << to_literal(a);
}

}  // namespace origami
