#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "origami/numtheory.hpp"

namespace origami {

struct program_error : std::runtime_error {
    program_error(std::size_t index, const std::string& what)
        : std::runtime_error("instruction " + std::to_string(index) + ": " + what),
          instruction_index(index) {}
    std::size_t instruction_index;
};

/// dest := intersect(u, v, value(src_p), value(src_q))
struct FoldInstruction {
    std::uint32_t dest;
    Angle u;
    Angle v;
    std::uint32_t src_p;
    std::uint32_t src_q;
};

/// Single-assignment sequence of intersection instructions over registers
/// seeded with the points 0 and 1. Instruction i assigns register i + 2;
/// sources always precede their destination.
struct FoldProgram {
    unsigned order = 0;  // n
    std::vector<FoldInstruction> instructions;

    std::uint32_t register_count() const {
        return static_cast<std::uint32_t>(instructions.size()) + 2;
    }
    /// Register holding the program's value: the last destination, or the
    /// seed register 1 for the empty program.
    std::uint32_t result_register() const {
        return instructions.empty() ? 1 : instructions.back().dest;
    }
};

struct Trace {
    std::vector<CycNum> registers;
    std::optional<CycNum> final;  // absent for the empty program
};

/// Exact evaluation; malformed programs are rejected with the first
/// offending instruction index. Every assigned value is checked against the
/// two line-membership conditions of its instruction.
Trace run(const FoldProgram& prog);

/// Floating mirror of run; returns all register values.
std::vector<std::complex<double>> run_float(const FoldProgram& prog);

/// Three-instruction construction of 2 from distinct nonzero angles
/// (smallest indices): p1 = I_{u,v}(0,1), p2 = I_{u,1}(1,p1), p3 = I_{1,v}(0,p2).
FoldProgram synth_two(unsigned n);

/// Three-instruction construction of -1: p1 = I_{u,v}(0,1),
/// p2' = I_{v,1}(0,p1), then I_{1,u}(0,p2').
FoldProgram synth_neg_one(unsigned n);

/// Appends `fragment` re-based onto (seed0, seed1), which must hold values
/// exactly one apart; the appended final register holds fragment's value
/// translated by seed0's value. Returns that register.
std::uint32_t replay_translated(FoldProgram& target, const FoldProgram& fragment,
                                std::uint32_t seed0, std::uint32_t seed1);

/// value(synth_add(P,Q)) = value(P) + value(Q): P, then a 2-construction,
/// then P replayed from (1,2), then Q replayed from (p, p+1).
FoldProgram synth_add(const FoldProgram& p, const FoldProgram& q);

/// value(synth_neg(P)) = -value(P): a -1-construction followed by a
/// homogeneous replay of P from (0,-1); the replayed trace is checked
/// pointwise against -1 times the original.
FoldProgram synth_neg(const FoldProgram& p);

/// One instruction per factor: with W the product of the v-classes so far,
/// factor (u',v') is applied as I_{Wu',Wv'}(current, 0). Runs to the exact
/// product of the elementary monomial values.
FoldProgram synth_monomial_product(std::span<const MonomialFactor> factors, unsigned n);

/// Program constructing the exact value of a MonomialExpr from {0, 1}.
FoldProgram synth_element(const MonomialExpr& expr);

struct VerifyResult {
    bool ok;
    std::string diagnostic;
};

/// Runs and exact-compares against `expected`; with an expectation trace
/// supplied, a mismatch names the first divergent register.
VerifyResult verify(const FoldProgram& prog, const CycNum& expected,
                    const std::vector<CycNum>* expected_trace = nullptr);

/// {"n":..,"instructions":[{"dest":..,"u":..,"v":..,"p":..,"q":..}]}
std::string program_to_json(const FoldProgram& prog);
FoldProgram program_from_json(const std::string& text);

}  // namespace origami
