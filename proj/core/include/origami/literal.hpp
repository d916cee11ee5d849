#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "origami/cyclotomic.hpp"

namespace origami {

struct parse_error : std::runtime_error {
    parse_error(std::size_t position, const std::string& what)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what),
          position(position) {}
    std::size_t position;
};

/// Parse the exact-literal format into an element of the given field.
/// Grammar: sum of terms, term = rational ["*" z-power] | z-power,
/// z-power = "z" ["^" integer], `z` denoting zeta_N. Whitespace-insensitive;
/// exponents of any size are reduced mod N.
CycNum parse_exact_literal(std::string_view text, const FieldPtr& field);

/// Canonical literal for a value; parse_exact_literal inverts it bit-exactly.
std::string to_literal(const CycNum& a);

std::ostream& operator<<(std::ostream& os, const CycNum& a);

}  // namespace origami
