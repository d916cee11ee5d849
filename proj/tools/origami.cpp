#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "origami/closure.hpp"
#include "origami/literal.hpp"
#include "origami/numtheory.hpp"
#include "origami/synth.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;  // verification / membership / budget failures
constexpr int kExitInput = 2;   // flag, parse and file errors

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string format_complex(std::complex<double> z) {
    return format_double(z.real()) + " " + format_double(z.imag());
}

void write_svg(std::ostream& os, const origami::ClosureSet& cs) {
    // window: bounding box of the points clamped to radius 6 about the origin
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    std::vector<std::complex<double>> pts;
    pts.reserve(cs.size());
    for (const auto& e : cs.entries()) {
        const std::complex<double> z = e.value.to_complex();
        pts.push_back(z);
        min_x = std::min(min_x, std::max(-6.0, z.real()));
        max_x = std::max(max_x, std::min(6.0, z.real()));
        min_y = std::min(min_y, std::max(-6.0, z.imag()));
        max_y = std::max(max_y, std::min(6.0, z.imag()));
    }
    const double pad = 0.5;
    const double w = (max_x - min_x) + 2 * pad, h = (max_y - min_y) + 2 * pad;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_double(min_x - pad)
       << " " << format_double(min_y - pad) << " " << format_double(w) << " " << format_double(h)
       << "\" width=\"800\" height=\"800\">\n";
    for (const auto& z : pts) {
        os << "  <circle cx=\"" << format_double(z.real()) << "\" cy=\"" << format_double(z.imag())
           << "\" r=\"0.06\" fill=\"black\"/>\n";
    }
    os << "</svg>\n";
}

int cmd_closure(unsigned n, unsigned depth, std::size_t budget, const std::string& out_path,
                const std::string& svg_path) {
    origami::ClosureSet cs = origami::ClosureSet::generate(n, depth, budget);
    {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot open " << out_path << " for writing\n";
            return kExitInput;
        }
        cs.write_points(out);
    }
    if (!svg_path.empty()) {
        std::ofstream svg(svg_path);
        if (!svg) {
            std::cerr << "error: cannot open " << svg_path << " for writing\n";
            return kExitInput;
        }
        write_svg(svg, cs);
    }
    std::cout << "n=" << n << " rounds=" << cs.rounds() << " points=" << cs.size();
    std::cout << " per-depth:";
    for (std::size_t c : cs.per_depth_counts()) std::cout << " " << c;
    std::cout << "\n";
    if (cs.budget_exhausted()) {
        std::cerr << "warning: point budget (" << budget
                  << ") exhausted; output is flagged incomplete\n";
        return kExitDomain;
    }
    return kExitOk;
}

int cmd_synth(unsigned n, const std::string& target, const std::string& builtin,
              const std::string& out_path) {
    using namespace origami;
    FoldProgram prog;
    if (!builtin.empty()) {
        if (builtin == "two") {
            prog = synth_two(n);
        } else if (builtin == "neg-one") {
            prog = synth_neg_one(n);
        } else {  // inv-n
            FieldPtr field = Field::make(2 * n);
            const CycNum inv_n = CycNum::from_rational(field, Rational(1, n));
            const MembershipReport report = ring_membership(inv_n, n);
            if (report.verdict != Membership::localized_ring &&
                report.verdict != Membership::integer_ring) {
                std::cerr << "error: 1/" << n << " is " << verdict_text(report.verdict, n) << "\n";
                return kExitDomain;
            }
            try {
                prog = synth_element(decompose(inv_n, n));
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << " -- not constructible\n";
                return kExitDomain;
            }
        }
    } else {
        FieldPtr field = Field::make(2 * n);
        const CycNum value = parse_exact_literal(target, field);
        const MembershipReport report = ring_membership(value, n);
        bool composite = false;
        for (unsigned p = 2; p * p <= n; ++p)
            if (n % p == 0) composite = true;
        // R(U_n) is Z[zeta_n] for prime n, Z[1/n, zeta_n] for composite n
        const bool constructible =
            report.verdict == Membership::integer_ring ||
            (report.verdict == Membership::localized_ring && composite);
        if (!constructible) {
            std::cerr << "error: target is " << verdict_text(report.verdict, n)
                      << " -- not constructible\n";
            return kExitDomain;
        }
        // canonical constructions for the two seed lemmas; everything else
        // goes through the monomial decomposition
        if (value == CycNum::from_rational(field, 2))
            prog = synth_two(n);
        else if (value == CycNum::from_rational(field, -1))
            prog = synth_neg_one(n);
        else
            prog = synth_element(decompose(value, n));
    }

    const Trace trace = run(prog);
    const CycNum value = trace.registers[prog.result_register()];
    const VerifyResult vr = verify(prog, value);
    if (!vr.ok) {
        std::cerr << "error: synthesized program failed verification: " << vr.diagnostic << "\n";
        return kExitDomain;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return kExitInput;
    }
    out << program_to_json(prog) << "\n";
    std::cout << "instructions=" << prog.instructions.size() << " value=" << to_literal(value)
              << " float=" << format_complex(value.to_complex()) << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& prog_path, const std::string& expect_literal) {
    using namespace origami;
    std::ifstream in(prog_path);
    if (!in) {
        std::cerr << "error: cannot open " << prog_path << "\n";
        return kExitInput;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    FoldProgram prog;
    try {
        prog = program_from_json(buffer.str());
    } catch (const std::exception& e) {
        std::cerr << "error: bad program file: " << e.what() << "\n";
        return kExitInput;
    }
    FieldPtr field = Field::make(2 * prog.order);
    const CycNum expected = parse_exact_literal(expect_literal, field);
    const VerifyResult vr = verify(prog, expected);
    if (vr.ok) {
        std::cout << "verified: program evaluates to " << to_literal(expected) << "\n";
        return kExitOk;
    }
    std::cout << "verification failed: " << vr.diagnostic << "\n";
    return kExitDomain;
}

int cmd_membership(unsigned n, const std::string& literal) {
    using namespace origami;
    FieldPtr field = Field::make(2 * n);
    const CycNum value = parse_exact_literal(literal, field);
    const MembershipReport report = ring_membership(value, n);
    std::cout << verdict_text(report.verdict, n) << "\n";
    if (report.coords) {
        std::cout << "coords:";
        for (const Rational& c : *report.coords) std::cout << " " << c;
        std::cout << "\n";
    }
    std::cout << "denominator-primes:";
    for (const Int& p : report.denominator_primes) std::cout << " " << p;
    std::cout << "\n";
    bool in_ring = report.verdict == Membership::integer_ring;
    if (report.verdict == Membership::localized_ring) {
        for (unsigned p = 2; p * p <= n; ++p)
            if (n % p == 0) in_ring = true;  // composite n: localized ring is R(U_n)
    }
    return in_ring ? kExitOk : kExitDomain;
}

int cmd_intersect(unsigned n, unsigned uk, unsigned vk, const std::string& p_lit,
                  const std::string& q_lit) {
    using namespace origami;
    if (uk % n == vk % n) {
        std::cerr << "error: angles must be distinct classes mod n\n";
        return kExitInput;
    }
    FieldPtr field = Field::make(2 * n);
    const CycNum p = parse_exact_literal(p_lit, field);
    const CycNum q = parse_exact_literal(q_lit, field);
    const CycNum z = intersect(Angle(n, uk), Angle(n, vk), p, q);
    std::cout << to_literal(z) << "\t" << format_complex(z.to_complex()) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact origami-ring toolkit: closure generation, fold-program synthesis and "
                 "verification, ring membership"};
    app.require_subcommand(1);

    unsigned n = 0, depth = 0, uk = 0, vk = 0;
    std::size_t budget = 200000;
    std::string out_path, svg_path, target, builtin, prog_path, expect_literal, value_literal;
    std::string p_lit, q_lit;

    auto* closure = app.add_subcommand("closure", "generate R(U_n) breadth-first from {0,1}");
    closure->add_option("--n", n, "angle group order (>= 3)")->required();
    closure->add_option("--depth", depth, "number of expansion rounds")->required();
    closure->add_option("--budget", budget, "point-count cap (default 200000)");
    closure->add_option("--out", out_path, "point-set output path")->required();
    closure->add_option("--svg", svg_path, "optional SVG lattice plot");

    auto* synth = app.add_subcommand("synth", "synthesize a fold program for a target value");
    synth->add_option("--n", n, "angle group order (>= 3)")->required();
    auto* opt_target = synth->add_option("--target", target, "exact literal in z = zeta_2n");
    auto* opt_builtin =
        synth->add_option("--builtin", builtin, "built-in target: two | neg-one | inv-n")
            ->check(CLI::IsMember({"two", "neg-one", "inv-n"}));
    opt_target->excludes(opt_builtin);
    synth->add_option("--out", out_path, "program output path (JSON)")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run a fold program and compare exactly");
    verify_cmd->add_option("--prog", prog_path, "program file (JSON)")->required();
    verify_cmd->add_option("--expect", expect_literal, "expected exact literal")->required();

    auto* membership = app.add_subcommand("membership", "ring membership verdict for a value");
    membership->add_option("--n", n, "angle group order")->required();
    membership->add_option("--value", value_literal, "exact literal in z = zeta_2n")->required();

    auto* intersect_cmd = app.add_subcommand("intersect", "one exact intersection I_{u,v}(p,q)");
    intersect_cmd->add_option("--n", n, "angle group order")->required();
    intersect_cmd->add_option("--u", uk, "first angle index k (class of e^{i pi k/n})")->required();
    intersect_cmd->add_option("--v", vk, "second angle index")->required();
    intersect_cmd->add_option("--p", p_lit, "anchor of the first line")->required();
    intersect_cmd->add_option("--q", q_lit, "anchor of the second line")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? kExitOk : kExitInput;
    }

    try {
        if (app.got_subcommand(closure)) return cmd_closure(n, depth, budget, out_path, svg_path);
        if (app.got_subcommand(synth)) {
            if (target.empty() && builtin.empty()) {
                std::cerr << "error: synth requires --target or --builtin\n";
                return kExitInput;
            }
            return cmd_synth(n, target, builtin, out_path);
        }
        if (app.got_subcommand(verify_cmd)) return cmd_verify(prog_path, expect_literal);
        if (app.got_subcommand(membership)) return cmd_membership(n, value_literal);
        if (app.got_subcommand(intersect_cmd)) return cmd_intersect(n, uk, vk, p_lit, q_lit);
    } catch (const origami::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitInput;
}
