#include "origami/synth.hpp"

#include <json.hpp>

#include "origami/literal.hpp"

namespace origami {

namespace {

void validate(const FoldProgram& prog) {
    if (prog.order < 3)
        throw program_error(0, "program order must be >= 3");
    for (std::size_t i = 0; i < prog.instructions.size(); ++i) {
        const FoldInstruction& ins = prog.instructions[i];
        if (ins.dest != i + 2) throw program_error(i, "destination register out of sequence");
        if (ins.u.order != prog.order || ins.v.order != prog.order)
            throw program_error(i, "angle order differs from program order");
        if (ins.u.k == ins.v.k) throw program_error(i, "angles must be distinct classes");
        if (ins.src_p >= ins.dest || ins.src_q >= ins.dest)
            throw program_error(i, "source register does not precede destination");
    }
}

}  // namespace

Trace run(const FoldProgram& prog) {
    validate(prog);
    FieldPtr field = Field::make(2 * prog.order);
    Trace trace;
    trace.registers.reserve(prog.register_count());
    trace.registers.push_back(CycNum::zero(field));
    trace.registers.push_back(CycNum::one(field));
    for (const FoldInstruction& ins : prog.instructions) {
        // intersect enforces both line-membership postconditions
        trace.registers.push_back(
            intersect(ins.u, ins.v, trace.registers[ins.src_p], trace.registers[ins.src_q]));
    }
    if (!prog.instructions.empty()) trace.final = trace.registers.back();
    return trace;
}

std::vector<std::complex<double>> run_float(const FoldProgram& prog) {
    validate(prog);
    std::vector<std::complex<double>> regs;
    regs.reserve(prog.register_count());
    regs.emplace_back(0.0, 0.0);
    regs.emplace_back(1.0, 0.0);
    for (const FoldInstruction& ins : prog.instructions)
        regs.push_back(intersect_float(ins.u, ins.v, regs[ins.src_p], regs[ins.src_q]));
    return regs;
}

FoldProgram synth_two(unsigned n) {
    if (n < 3) throw std::invalid_argument("synth_two: requires n >= 3");
    const Angle u(n, 1), v(n, 2), horizontal(n, 0);
    FoldProgram prog{n, {}};
    prog.instructions.push_back({2, u, v, 0, 1});           // p1 = I_{u,v}(0,1)
    prog.instructions.push_back({3, u, horizontal, 1, 2});  // p2 = I_{u,1}(1,p1)
    prog.instructions.push_back({4, horizontal, v, 0, 3});  // p3 = I_{1,v}(0,p2) = 2
    return prog;
}

FoldProgram synth_neg_one(unsigned n) {
    if (n < 3) throw std::invalid_argument("synth_neg_one: requires n >= 3");
    const Angle u(n, 1), v(n, 2), horizontal(n, 0);
    FoldProgram prog{n, {}};
    prog.instructions.push_back({2, u, v, 0, 1});           // p1 = I_{u,v}(0,1)
    prog.instructions.push_back({3, v, horizontal, 0, 2});  // p2' = I_{v,1}(0,p1)
    prog.instructions.push_back({4, horizontal, u, 0, 3});  // I_{1,u}(0,p2') = -1
    return prog;
}

namespace {

/// Appends fragment instructions with registers 0 and 1 mapped to the given
/// seeds and internal registers renumbered; returns the mapped result register.
std::uint32_t splice(FoldProgram& target, const FoldProgram& fragment, std::uint32_t seed0,
                     std::uint32_t seed1) {
    std::vector<std::uint32_t> map(fragment.register_count());
    map[0] = seed0;
    map[1] = seed1;
    for (const FoldInstruction& ins : fragment.instructions) {
        const std::uint32_t dest = target.register_count();
        target.instructions.push_back({dest, ins.u, ins.v, map[ins.src_p], map[ins.src_q]});
        map[ins.dest] = dest;
    }
    return map[fragment.result_register()];
}

}  // namespace

std::uint32_t replay_translated(FoldProgram& target, const FoldProgram& fragment,
                                std::uint32_t seed0, std::uint32_t seed1) {
    if (fragment.order != target.order)
        throw std::invalid_argument("replay_translated: program order mismatch");
    if (seed0 >= target.register_count() || seed1 >= target.register_count())
        throw std::invalid_argument("replay_translated: seed register out of range");
    const Trace trace = run(target);
    const CycNum spacing = trace.registers[seed1] - trace.registers[seed0];
    if (!(spacing == CycNum::one(trace.registers[seed0].field_ptr())))
        throw std::invalid_argument("replay_translated: seed values must differ by exactly 1");
    return splice(target, fragment, seed0, seed1);
}

FoldProgram synth_add(const FoldProgram& p, const FoldProgram& q) {
    if (p.order != q.order) throw std::invalid_argument("synth_add: order mismatch");
    FoldProgram out = p;
    const std::uint32_t fp = p.result_register();
    const std::uint32_t r2 = replay_translated(out, synth_two(p.order), 0, 1);
    const std::uint32_t fp1 = replay_translated(out, p, 1, r2);     // p + 1
    const std::uint32_t sum = replay_translated(out, q, fp, fp1);   // p + q
    (void)sum;
    return out;
}

FoldProgram synth_neg(const FoldProgram& p) {
    FoldProgram out = synth_neg_one(p.order);
    const std::uint32_t neg_one_reg = out.result_register();
    // homogeneous replay with r = -1: seeds (0, -1) scale every register
    const std::uint32_t result = splice(out, p, 0, neg_one_reg);
    (void)result;
    // the replayed trace must be -1 times the original, register by register
    const Trace original = run(p);
    const Trace replayed = run(out);
    const std::size_t offset = synth_neg_one(p.order).register_count();
    for (std::size_t i = 0; i < p.instructions.size(); ++i) {
        if (!(replayed.registers[offset + i] == -original.registers[p.instructions[i].dest]))
            throw std::logic_error("synth_neg: homogeneous replay diverged from -1 * trace");
    }
    return out;
}

FoldProgram synth_monomial_product(std::span<const MonomialFactor> factors, unsigned n) {
    if (n < 3) throw std::invalid_argument("synth_monomial_product: requires n >= 3");
    FoldProgram prog{n, {}};
    std::uint32_t current = 1;  // the point 1
    unsigned rotation = 0;      // index of the accumulated product of v-classes
    for (const MonomialFactor& f : factors) {
        if (f.u.order != n || f.v.order != n)
            throw std::invalid_argument("synth_monomial_product: factor order mismatch");
        if (f.u.k == f.v.k)
            throw std::invalid_argument("synth_monomial_product: factor angles must be distinct");
        const Angle wu(n, (rotation + f.u.k) % n);
        const Angle wv(n, (rotation + f.v.k) % n);
        const std::uint32_t dest = prog.register_count();
        prog.instructions.push_back({dest, wu, wv, current, 0});
        current = dest;
        rotation = (rotation + f.v.k) % n;
    }
    return prog;
}

namespace {

/// Incremental program builder: keeps exact register values so fragments can
/// be spliced without re-running the whole program each time.
class ProgramBuilder {
public:
    explicit ProgramBuilder(unsigned n) : field_(Field::make(2 * n)) {
        prog_.order = n;
        values_.push_back(CycNum::zero(field_));
        values_.push_back(CycNum::one(field_));
    }

    const FieldPtr& field() const { return field_; }
    FoldProgram take() && { return std::move(prog_); }
    const CycNum& value(std::uint32_t reg) const { return values_[reg]; }
    std::uint32_t last_register() const { return prog_.result_register(); }

    std::uint32_t splice_fragment(const FoldProgram& fragment, std::uint32_t seed0,
                                  std::uint32_t seed1) {
        std::vector<std::uint32_t> map(fragment.register_count());
        map[0] = seed0;
        map[1] = seed1;
        for (const FoldInstruction& ins : fragment.instructions) {
            const std::uint32_t dest = prog_.register_count();
            prog_.instructions.push_back({dest, ins.u, ins.v, map[ins.src_p], map[ins.src_q]});
            values_.push_back(
                intersect(ins.u, ins.v, values_[map[ins.src_p]], values_[map[ins.src_q]]));
            map[ins.dest] = dest;
        }
        return map[fragment.result_register()];
    }

    /// One instruction computing the value already held in `reg`
    /// (the p = q case of the intersection operator).
    std::uint32_t copy(std::uint32_t reg) {
        const Angle u(prog_.order, 0), v(prog_.order, 1);
        const std::uint32_t dest = prog_.register_count();
        prog_.instructions.push_back({dest, u, v, reg, reg});
        values_.push_back(values_[reg]);
        return dest;
    }

private:
    FieldPtr field_;
    FoldProgram prog_;
    std::vector<CycNum> values_;
};

}  // namespace

FoldProgram synth_element(const MonomialExpr& expr) {
    const unsigned n = expr.order;
    if (n < 3) throw std::invalid_argument("synth_element: requires n >= 3");
    ProgramBuilder builder(n);
    const FoldProgram two_frag = synth_two(n);
    const FoldProgram neg_one_frag = synth_neg_one(n);

    // invariant: acc holds the running sum A, acc1 holds A + 1
    std::uint32_t acc = 0, acc1 = 1;

    for (const MonomialTerm& term : expr.terms) {
        if (term.coeff == 0) continue;
        // relocatable fragment computing the term's monomial from seeds (0,1),
        // negated through a homogeneous replay when the coefficient is negative
        FoldProgram frag = synth_monomial_product(term.factors, n);
        if (term.coeff < 0) {
            FoldProgram negated = neg_one_frag;
            splice(negated, frag, 0, negated.result_register());
            frag = std::move(negated);
        }
        Int reps = abs(term.coeff);
        // A + B repeatedly: successor first via a fresh 2-construction,
        // then the sum itself so the result lands in the last register
        for (Int i = 0; i < reps; ++i) {
            const std::uint32_t a_plus_2 = builder.splice_fragment(two_frag, acc, acc1);
            const std::uint32_t next1 = builder.splice_fragment(frag, acc1, a_plus_2);
            const std::uint32_t next = builder.splice_fragment(frag, acc, acc1);
            acc = next;
            acc1 = next1;
        }
    }

    if (acc != builder.last_register()) builder.copy(acc);
    FoldProgram out = std::move(builder).take();

    // the program must reproduce the expression's exact value
    FieldPtr field = Field::make(2 * n);
    const CycNum expected = evaluate(expr, field);
    const Trace trace = run(out);
    const CycNum got = trace.final ? *trace.final : CycNum::one(field);
    if (!(got == expected)) throw std::logic_error("synth_element: program value mismatch");
    return out;
}

VerifyResult verify(const FoldProgram& prog, const CycNum& expected,
                    const std::vector<CycNum>* expected_trace) {
    Trace trace;
    try {
        trace = run(prog);
    } catch (const program_error& e) {
        return {false, std::string("malformed program: ") + e.what()};
    }
    const CycNum got = trace.registers[prog.result_register()];
    if (got == expected) return {true, "exact match"};

    std::string diag = "final register " + std::to_string(prog.result_register()) + " holds " +
                       to_literal(got) + ", expected " + to_literal(expected);
    if (expected_trace != nullptr) {
        const std::size_t limit = std::min(expected_trace->size(), trace.registers.size());
        for (std::size_t i = 0; i < limit; ++i) {
            if (!(trace.registers[i] == (*expected_trace)[i])) {
                diag += "; first divergence at register " + std::to_string(i) + ": " +
                        to_literal(trace.registers[i]) + " vs " + to_literal((*expected_trace)[i]);
                break;
            }
        }
    }
    return {false, diag};
}

std::string program_to_json(const FoldProgram& prog) {
    nlohmann::json j;
    j["n"] = prog.order;
    j["instructions"] = nlohmann::json::array();
    for (const FoldInstruction& ins : prog.instructions)
        j["instructions"].push_back({{"dest", ins.dest},
                                     {"u", ins.u.k},
                                     {"v", ins.v.k},
                                     {"p", ins.src_p},
                                     {"q", ins.src_q}});
    return j.dump();
}

FoldProgram program_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    FoldProgram prog;
    prog.order = j.at("n").get<unsigned>();
    if (prog.order == 0) throw std::invalid_argument("program_from_json: invalid order");
    for (const auto& ji : j.at("instructions")) {
        prog.instructions.push_back({ji.at("dest").get<std::uint32_t>(),
                                     Angle(prog.order, ji.at("u").get<unsigned>()),
                                     Angle(prog.order, ji.at("v").get<unsigned>()),
                                     ji.at("p").get<std::uint32_t>(),
                                     ji.at("q").get<std::uint32_t>()});
    }
    return prog;
}

}  // namespace origami
