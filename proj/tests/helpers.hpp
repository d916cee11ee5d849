#pragma once

#include <random>
#include <vector>

#include "origami/cyclotomic.hpp"
#include "origami/geometry.hpp"
#include "origami/synth.hpp"

namespace origami::testing {

inline Rational random_rational(std::mt19937_64& rng, long max_num = 9) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, 3);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline CycNum random_cyc(std::mt19937_64& rng, const FieldPtr& field, long max_num = 9) {
    std::vector<Rational> coeffs(field->degree());
    for (auto& c : coeffs) c = random_rational(rng, max_num);
    return CycNum(field, RationalPoly(std::move(coeffs)));
}

inline Angle random_angle(std::mt19937_64& rng, unsigned n) {
    std::uniform_int_distribution<unsigned> k(0, n - 1);
    return Angle(n, k(rng));
}

inline std::pair<Angle, Angle> random_distinct_angles(std::mt19937_64& rng, unsigned n) {
    Angle u = random_angle(rng, n);
    Angle v = random_angle(rng, n);
    while (v.k == u.k) v = random_angle(rng, n);
    return {u, v};
}

/// Random element of Z[zeta_n] (denominator_power = 0) or Z[1/n, zeta_n].
inline CycNum random_ring_element(std::mt19937_64& rng, const FieldPtr& field, unsigned n,
                                  unsigned denominator_power, long max_num = 5) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    Int den(1);
    for (unsigned i = 0; i < denominator_power; ++i) den *= n;
    CycNum acc = CycNum::zero(field);
    const unsigned degree = euler_phi(n);
    for (unsigned j = 0; j < degree; ++j) {
        Rational c(num(rng), den);
        c.canonicalize();
        if (c != 0) acc += CycNum::zeta_pow(field, 2 * j).scaled(c);
    }
    return acc;
}

/// Structurally valid random fold program of the given length.
inline FoldProgram random_program(std::mt19937_64& rng, unsigned n, unsigned length) {
    FoldProgram prog{n, {}};
    for (unsigned i = 0; i < length; ++i) {
        auto [u, v] = random_distinct_angles(rng, n);
        std::uniform_int_distribution<std::uint32_t> src(0, prog.register_count() - 1);
        prog.instructions.push_back({prog.register_count(), u, v, src(rng), src(rng)});
    }
    return prog;
}

}  // namespace origami::testing
