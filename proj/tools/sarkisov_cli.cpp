// Command-line driver. Exit status: 0 when every check of the invoked ledger
// holds, 1 when some check fails, 2 on an error (reported as JSON on stdout).

#include "sarkisov/sarkisov.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <string>

#ifndef SARKISOV_DEFAULT_REF_TABLE
#define SARKISOV_DEFAULT_REF_TABLE "data/reference_table.tsv"
#endif

namespace {

using namespace sarkisov;
using serialize::json;

enum class Format { Json, Tsv, Text };

struct RunConfig
{
    int genus = 12;
    int cl_rank = 2;
    Format format = Format::Json;
    std::string ref_table = SARKISOV_DEFAULT_REF_TABLE;
    int modulus_bound = 720;
};

struct Outcome
{
    std::string body;
    bool pass = true;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string ledger_tsv(const Ledger& l)
{
    std::string out = "claim\tlhs\trelation\trhs\tholds\n";
    for (const auto& c : l.checks) {
        out += c.claim + "\t" + to_string(c.lhs) + "\t" + std::string(to_string(c.relation)) + "\t"
               + to_string(c.rhs) + "\t" + (c.holds() ? "true" : "false") + "\n";
    }
    return out;
}

// Reports whose TSV form is their ledger.
Outcome ledger_report(const RunConfig& cfg, const json& j, const Ledger& l, const std::string& text_head)
{
    switch (cfg.format) {
    case Format::Json: return {dump(j), l.all_hold()};
    case Format::Tsv: return {ledger_tsv(l), l.all_hold()};
    case Format::Text: return {text_head + serialize::to_text(l), l.all_hold()};
    }
    return {};
}

Outcome solution_report(const RunConfig& cfg, const linkeq::SolutionReport& r)
{
    const bool ok = linkeq::verify_certificate(r);
    switch (cfg.format) {
    case Format::Json: return {dump(serialize::to_json(r)), ok};
    case Format::Tsv: {
        std::string out = "status\tcertificate\tverified\n" + linkeq::to_string(r.status) + "\t"
                          + linkeq::to_string(r.certificate_kind) + "\t" + (ok ? "true" : "false") + "\n";
        out += "alpha\tbeta\n";
        for (const auto& [x, y] : r.solutions) {
            out += to_string(x) + "\t" + to_string(y) + "\n";
        }
        return {out, ok};
    }
    case Format::Text: return {serialize::to_text(r), ok};
    }
    return {};
}

linkeq::SolveOptions solve_options(const RunConfig& cfg)
{
    linkeq::SolveOptions o;
    o.modulus_bound = cfg.modulus_bound;
    return o;
}

}  // namespace

int main(int argc, char** argv)
{
    RunConfig cfg;
    std::function<Outcome()> action;

    CLI::App app{"Exact numerics of Sarkisov links from genus-12 Fano threefolds"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--genus", cfg.genus, "genus of the midpoint")->capture_default_str();
    app.add_option("--rank", cfg.cl_rank, "class-group rank")->capture_default_str();
    app.add_option("--format", cfg.format, "output format: json, tsv or text")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"json", Format::Json}, {"tsv", Format::Tsv}, {"text", Format::Text}}))
        ->option_text("FORMAT [json]");
    app.add_option("--ref-table", cfg.ref_table, "reference table TSV")->capture_default_str();
    app.add_option("--modulus-bound", cfg.modulus_bound, "largest modulus tried for obstructions")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    auto table = [&] { return load_reference_table(cfg.ref_table); };

    // links
    bool full_ledger = false;
    auto* links = app.add_subcommand("links", "enumerate links and print the realized table");
    links->add_flag("--ledger", full_ledger, "include every candidate pair with its verdict");
    links->callback([&] {
        action = [&] {
            enumerate::EnumerateOptions opts;
            opts.solve = solve_options(cfg);
            const auto ledger = enumerate::enumerate_links(cfg.genus, cfg.cl_rank, table(), opts);
            const bool ok = serialize::links_verified(ledger);
            switch (cfg.format) {
            case Format::Json: return Outcome{dump(serialize::links_json(ledger, full_ledger)), ok};
            case Format::Tsv: return Outcome{serialize::links_tsv(ledger, full_ledger), ok};
            case Format::Text: return Outcome{serialize::links_text(ledger, full_ledger), ok};
            }
            return Outcome{};
        };
    });

    // solve
    Rational kcube = 22;
    std::string kcube_text = "22";
    int delta = 0, deg_delta = 0, fiber = 1;
    std::optional<int> beta;
    auto* solve = app.add_subcommand("solve", "solve a link equation");
    solve->require_subcommand(1);
    solve->add_option("--kcube", kcube_text, "anticanonical degree of the midpoint")->capture_default_str();
    auto parse_kcube = [&] { kcube = parse_rational(kcube_text); };

    auto* e5 = solve->add_subcommand("e5", "one side of type e5");
    e5->add_option("--delta", delta, "1, 0, -1 for a c, d, e5 partner")->required();
    e5->add_option("--beta", beta, "pin beta");
    e5->callback([&] {
        action = [&] {
            parse_kcube();
            return solution_report(cfg, linkeq::solve_e5_pair(kcube, delta, beta, solve_options(cfg)));
        };
    });
    auto* cc = solve->add_subcommand("cc", "two conic bundles");
    cc->add_option("--deg-delta", deg_delta, "degree of the discriminant")->required();
    cc->add_option("--beta", beta, "pin beta");
    cc->callback([&] {
        action = [&] {
            parse_kcube();
            return solution_report(cfg, linkeq::solve_cc(kcube, deg_delta, beta, solve_options(cfg)));
        };
    });
    auto* cd = solve->add_subcommand("cd", "conic bundle against a del Pezzo fibration");
    cd->add_option("--deg-delta", deg_delta, "degree of the discriminant")->required();
    cd->callback([&] {
        action = [&] {
            parse_kcube();
            return solution_report(cfg, linkeq::solve_cd(kcube, deg_delta, solve_options(cfg)));
        };
    });
    auto* dd = solve->add_subcommand("dd", "two del Pezzo fibrations");
    dd->add_option("--fiber-degree", fiber, "K_F^2 of the left fibre")->required();
    dd->callback([&] {
        action = [&] {
            parse_kcube();
            return solution_report(cfg, linkeq::solve_dd(kcube, fiber, solve_options(cfg)));
        };
    });

    // bounds
    int surface_degree = 10;
    bool planes_allowed = false;
    auto* bounds_cmd = app.add_subcommand("bounds", "class-group rank certificates");
    bounds_cmd->require_subcommand(1);
    bounds_cmd->add_subcommand("prop24", "rank bound for degree-24 midpoints")->callback([&] {
        action = [&] {
            auto r = bounds::prop24_certify(table());
            return ledger_report(cfg, serialize::to_json(r), r.ledger, "bound: " + r.bound.str() + "\n");
        };
    });
    bounds_cmd->add_subcommand("le10", "r <= 10 for plane-free midpoints")->callback([&] {
        action = [&] {
            auto r = bounds::le10_certify(table());
            std::string head;
            for (const auto& s : r.narrative) {
                head += s + "\n";
            }
            return ledger_report(cfg, serialize::to_json(r), r.ledger, head + "bound: " + r.bound.str() + "\n");
        };
    });
    auto* orbit = bounds_cmd->add_subcommand("orbit", "orbit divisibility for a surface degree");
    orbit->add_option("--degree", surface_degree, "degree of the surface")->capture_default_str();
    orbit->callback([&] {
        action = [&] {
            auto v = bounds::orbit_divisibility(surface_degree);
            Ledger l = bounds::surface_degree_subledger();
            std::string head;
            for (const auto& s : v.log) {
                head += s + "\n";
            }
            json j = serialize::to_json(v);
            j["subledger"] = serialize::to_json(l);
            return ledger_report(cfg, j, l, head);
        };
    });
    auto* theorem = bounds_cmd->add_subcommand("theorem", "rank verdict for G-Fano midpoints");
    theorem->add_flag("--planes-allowed", planes_allowed, "drop the plane-free hypothesis");
    theorem->callback([&] {
        action = [&] {
            auto v = bounds::main_theorem_verdict(table(), cfg.genus, planes_allowed);
            std::string head;
            for (const auto& s : v.log) {
                head += s + "\n";
            }
            Outcome o = ledger_report(cfg, serialize::to_json(v), v.ledger, head);
            o.pass = o.pass && v.conclusive;
            return o;
        };
    });

    // dp
    int dp_degree = 3;
    std::string class_text, target = "P3", curve_text;
    auto* dp = app.add_subcommand("dp", "del Pezzo lattice computations");
    dp->require_subcommand(1);
    auto* lines = dp->add_subcommand("lines", "lines on a del Pezzo surface");
    lines->add_option("--degree", dp_degree, "K_S^2")->capture_default_str();
    lines->callback([&] {
        action = [&] {
            const auto ls = dplattice::exceptional_classes(dp_degree);
            switch (cfg.format) {
            case Format::Json:
                return Outcome{dump({{"degree", dp_degree}, {"count", ls.size()}, {"lines", serialize::classes_json(ls)}}),
                               true};
            case Format::Tsv:
            case Format::Text: {
                std::string out;
                for (const auto& c : ls) {
                    out += dplattice::to_string(c) + "\n";
                }
                return Outcome{out, true};
            }
            }
            return Outcome{};
        };
    });
    auto* nef = dp->add_subcommand("nef-check", "nefness of a class against lines and conics");
    nef->add_option("--degree", dp_degree, "K_S^2")->capture_default_str();
    nef->add_option("--class", class_text, "class such as 10h-3e1-4e2")->required();
    nef->callback([&] {
        action = [&] {
            dplattice::DPLattice lat(dp_degree);
            auto r = dplattice::nef_check(lat, lat.parse(class_text));
            std::string text = "D = " + dplattice::to_string(r.divisor) + ", D^2 = "
                               + std::to_string(r.self_intersection) + "\n";
            for (const auto& [c, v] : r.negative) {
                text += "D." + dplattice::to_string(c) + " = " + std::to_string(v) + "\n";
            }
            for (const auto& c : r.trivial_lines) {
                text += "trivial line: " + dplattice::to_string(c) + "\n";
            }
            text += std::string(r.nef ? "nef" : "not nef") + (r.big ? " and big" : "") + "\n";
            return Outcome{cfg.format == Format::Json ? dump(serialize::to_json(r)) : text, r.nef};
        };
    });
    auto* construction = dp->add_subcommand("construction", "lattice check of the inverse construction");
    construction->add_option("--target", target, "P3, Q or V5")->capture_default_str();
    construction->add_option("--curve", curve_text, "override the curve class");
    construction->callback([&] {
        action = [&] {
            std::optional<dplattice::LatticeClass> curve;
            if (!curve_text.empty()) {
                auto z = enumerate::ambient_of(dplattice::target_of(target));
                auto sdeg = (z.iota - 1) * z.hcube;
                curve = dplattice::DPLattice(num(sdeg).convert_to<int>()).parse(curve_text);
            }
            auto r = dplattice::construction_check(target, curve);
            std::string head = r.target + ": B = " + dplattice::to_string(r.curve)
                               + ", D = " + dplattice::to_string(r.restriction) + "\n";
            return ledger_report(cfg, serialize::to_json(r), r.ledger, head);
        };
    });

    // bundle
    auto* bundle = app.add_subcommand("bundle", "P(E) over P^2 with c1 = 0, c2 = 4");
    bundle->require_subcommand(1);
    bundle->add_subcommand("numerics", "ring, Riemann-Roch and sign checks")->callback([&] {
        action = [&] {
            auto r = dplattice::pe_numerics();
            return ledger_report(cfg, serialize::to_json(r), r.ledger, "");
        };
    });
    bundle->add_subcommand("quartic", "the del Pezzo section S in |M+F|")->callback([&] {
        action = [&] {
            auto r = dplattice::quartic_section_check();
            return ledger_report(cfg, serialize::to_json(r), r.ledger, "");
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << dump({{"error", "InvalidArgument"}, {"message", e.what()}});
        return 2;
    }

    try {
        Outcome o = action();
        std::cout << o.body;
        return o.pass ? 0 : 1;
    } catch (const Error& e) {
        std::cout << dump(serialize::error_json(e));
        return 2;
    }
}
