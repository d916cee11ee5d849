#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "helpers.hpp"
#include "origami/closure.hpp"
#include "origami/literal.hpp"
#include "origami/numtheory.hpp"

using namespace origami;

TEST_CASE("seeds and validation") {
    ClosureSet cs = ClosureSet::seeds(3);
    CHECK(cs.size() == 2);
    CHECK(cs.contains_point(CycNum::zero(cs.field())) == 0u);
    CHECK(cs.contains_point(CycNum::one(cs.field())) == 0u);
    CHECK_THROWS_AS(ClosureSet::seeds(2), std::invalid_argument);
    CHECK_THROWS_AS(ClosureSet::generate(2, 1), std::invalid_argument);
}

TEST_CASE("first round matches exhaustive enumeration") {
    // oracle: apply all operators to all ordered pairs of {0,1} directly
    FieldPtr f = Field::make(6);
    std::set<CycNum> oracle{CycNum::zero(f), CycNum::one(f)};
    std::vector<CycNum> seeds{CycNum::zero(f), CycNum::one(f)};
    for (unsigned uk = 0; uk < 3; ++uk)
        for (unsigned vk = 0; vk < 3; ++vk) {
            if (uk == vk) continue;
            for (const CycNum& p : seeds)
                for (const CycNum& q : seeds)
                    oracle.insert(intersect(Angle(3, uk), Angle(3, vk), p, q));
        }

    ClosureSet cs = ClosureSet::seeds(3);
    cs.expand();
    std::set<CycNum> got;
    for (const auto& e : cs.entries()) got.insert(e.value);
    CHECK(got == oracle);
    // zeta_6 = intersect(60deg, 120deg, 0, 1) is among the new points
    CHECK(cs.contains_point(CycNum::zeta_pow(f, 1)) == 1u);
}

TEST_CASE("monotone growth and determinism") {
    ClosureSet a = ClosureSet::generate(3, 3);
    ClosureSet b = ClosureSet::generate(3, 4);
    for (const auto& e : a.entries()) {
        auto depth = b.contains_point(e.value);
        REQUIRE(depth.has_value());
        CHECK(*depth == e.depth);
    }
    ClosureSet c = ClosureSet::generate(3, 4);
    REQUIRE(b.size() == c.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        CHECK(b.entries()[i].value == c.entries()[i].value);
        CHECK(b.entries()[i].depth == c.entries()[i].depth);
    }
}

TEST_CASE("witness tuples re-evaluate to their points") {
    for (unsigned n : {3u, 4u, 5u}) {
        ClosureSet cs = ClosureSet::generate(n, 2);
        for (const auto& e : cs.entries()) {
            if (!e.witness) {
                CHECK(e.depth == 0);
                continue;
            }
            const auto& w = *e.witness;
            CHECK(intersect(w.u, w.v, cs.entries()[w.p_index].value,
                            cs.entries()[w.q_index].value) == e.value);
            CHECK(cs.entries()[w.p_index].depth < e.depth);
            CHECK(cs.entries()[w.q_index].depth < e.depth);
        }
    }
}

TEST_CASE("known constructions appear at shallow depth") {
    ClosureSet cs = ClosureSet::generate(3, 3);
    FieldPtr f = cs.field();
    auto two = cs.contains_point(CycNum::from_rational(f, 2));
    REQUIRE(two.has_value());
    CHECK(*two <= 3);
    auto neg_one = cs.contains_point(CycNum::from_rational(f, -1));
    REQUIRE(neg_one.has_value());
    CHECK(*neg_one <= 3);
    CHECK(!cs.contains_point(CycNum::from_rational(f, Rational(1, 2))).has_value());
    CHECK_THROWS_AS(cs.contains_point(CycNum::one(Field::make(10))), std::invalid_argument);
}

TEST_CASE("ring membership of generated points") {
    // prime n: every point lies in Z[zeta_n]
    for (unsigned n : {3u, 5u}) {
        ClosureSet cs = ClosureSet::generate(n, n == 3 ? 4 : 2);
        SubfieldBasis basis(cs.field(), n);
        for (const auto& e : cs.entries()) {
            auto coords = basis.coords(e.value);
            REQUIRE(coords.has_value());
            CHECK(integrality_profile(*coords).empty());
        }
    }
    // composite n: denominator primes divide n
    for (unsigned n : {4u, 6u, 8u, 9u}) {
        ClosureSet cs = ClosureSet::generate(n, 2, 20000);
        SubfieldBasis basis(cs.field(), n);
        const std::set<Int> allowed = primes_dividing(Int(n));
        for (const auto& e : cs.entries()) {
            auto coords = basis.coords(e.value);
            REQUIRE(coords.has_value());
            for (const Int& p : integrality_profile(*coords)) CHECK(allowed.contains(p));
        }
    }
}

TEST_CASE("composite ring escapes the integer ring") {
    // n=4 at depth 3 witnesses Z[1/4, zeta_4] strictly containing Z[zeta_4]
    ClosureSet cs = ClosureSet::generate(4, 3);
    bool found = false;
    for (const auto& e : cs.entries()) {
        if (ring_membership(e.value, 4).verdict == Membership::localized_ring) found = true;
    }
    CHECK(found);
}

TEST_CASE("exact and float paths agree on generated points") {
    ClosureSet cs = ClosureSet::generate(3, 4);
    std::vector<std::complex<double>> floats(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const auto& e = cs.entries()[i];
        if (!e.witness) {
            floats[i] = e.value.to_complex();
            continue;
        }
        const auto& w = *e.witness;
        floats[i] = intersect_float(w.u, w.v, floats[w.p_index], floats[w.q_index]);
        CHECK(std::abs(e.value.to_complex() - floats[i]) < 1e-9);
    }
}

TEST_CASE("budget exhaustion is explicit") {
    ClosureSet cs = ClosureSet::generate(4, 3, 50);
    CHECK(cs.budget_exhausted());
    CHECK(cs.size() == 50);
    ClosureSet full = ClosureSet::generate(3, 2);
    CHECK(!full.budget_exhausted());
}

TEST_CASE("export and import round-trip the exact literals") {
    ClosureSet cs = ClosureSet::generate(4, 2);
    std::stringstream ss;
    cs.write_points(ss);
    PointSetFile file = read_points(ss);
    CHECK(file.n == 4);
    CHECK(file.rounds == 2);
    CHECK(file.complete);
    REQUIRE(file.points.size() == cs.size());
    for (const CycNum& p : file.points) CHECK(cs.contains_point(p).has_value());

    std::stringstream bad("no header\n");
    CHECK_THROWS_AS(read_points(bad), parse_error);
}

TEST_CASE("density probe") {
    CHECK_THROWS_AS(density_probe(3), std::invalid_argument);

    DensityProbe p4 = density_probe(4);
    CHECK(p4.value == CycNum::from_rational(p4.value.field_ptr(), Rational(1, 4)));
    CHECK(p4.modulus == doctest::Approx(0.25).epsilon(1e-12));

    // oracle: |1/(1+zeta_n)| = 1/(2 cos(pi/n)) for prime n
    DensityProbe p5 = density_probe(5);
    CHECK(std::abs(p5.modulus - 1.0 / (2.0 * std::cos(std::numbers::pi / 5))) < 1e-12);
    CHECK(std::abs(p5.modulus - 0.6180340) < 1e-6);

    DensityProbe p7 = density_probe(7);
    CHECK(std::abs(p7.modulus - 1.0 / (2.0 * std::cos(std::numbers::pi / 7))) < 1e-12);
    CHECK(std::abs(p7.modulus - 0.5549581) < 1e-6);

    // powers of the probe converge to zero numerically
    for (unsigned n : {5u, 7u}) {
        DensityProbe probe = density_probe(n);
        CHECK(std::abs(probe.value.pow(20).to_complex()) < 1e-4);
    }
}
