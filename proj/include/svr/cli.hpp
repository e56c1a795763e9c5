// Command-line front end. Subcommands:
//   ring check <spec> [--trials N] [--seed S]   structural analysis report
//   ring brspec <spec> --dot <out>              branching spectrum as DOT
//   realize <poset> -o <spec> [--dot <out>]     build a spec from a root,
//                                               round-trip checked
//   embed case1|case2 [--dim d] [--generators m] [--samples N] [--seed S]
//   boolprod [--points k] [--samples N] [--seed S]
//
// Exit codes: 0 all checks pass, 1 a check or precondition fails, 2 input
// cannot be parsed. Reports are byte-deterministic for fixed inputs and
// seed.
#pragma once

#include "svr/boolprod.hpp"
#include "svr/embed.hpp"
#include "svr/realize.hpp"
#include "svr/spec_files.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace svr {

namespace detail {

inline int run_ring_check(const std::string& path, int trials, uint64_t seed, std::ostream& out) {
    RingSpec s = load_ring_spec(path);
    AnalysisReport rep = analyze(s, trials, seed);
    out << "ring: " << path << "\n";
    out << "rank: " << rep.rank << "\n";
    if (rep.rank >= 2) {
        out << "branching: " << rep.branching_ids.size() << " (";
        for (size_t i = 0; i < rep.branching_ids.size(); ++i)
            out << (i ? ", " : "") << rep.branching_ids[i];
        out << ")\n";
        out << "type: " << ring_type_name(rep.type, rep.rank) << "\n";
        out << "max-ideal-branching: " << (rep.max_ideal_branching ? "yes" : "no") << "\n";
    }
    for (auto& [name, oc] : rep.log) {
        out << "check " << name << ": " << (oc.pass ? "pass" : "FAIL");
        if (!oc.detail.empty()) out << " (" << oc.detail << ")";
        out << "\n";
    }
    out << "result: " << (rep.ok() ? "ok" : "violations found") << "\n";
    return rep.ok() ? 0 : 1;
}

inline int run_ring_brspec(const std::string& path, const std::string& dot_path, std::ostream& out) {
    RingSpec s = load_ring_spec(path);
    RootPoset b = brspec(s);
    std::ofstream dot(dot_path);
    if (!dot) throw std::runtime_error("cannot write " + dot_path);
    dot << b.to_dot("brspec");
    out << "brspec: " << b.size() << " elements, rank " << b.rank() << ", written to " << dot_path
        << "\n";
    return 0;
}

inline int run_realize(const std::string& poset_path, const std::string& out_path,
                       const std::string& dot_path, int trials, uint64_t seed, std::ostream& out) {
    RootPoset p = load_poset(poset_path);
    auto rep = p.validate_root_system();
    if (!rep.ok) {
        out << "input is not a root system: " << rep.reason << " (" << rep.witness_a << " vs "
            << rep.witness_b << ")\n";
        return 1;
    }
    if (!p.top()) {
        out << "input root system has no top element\n";
        return 1;
    }
    RingSpec s = realize(p);
    auto sp = spec_poset(s);
    auto iso = poset_iso(sp.poset, p);
    if (!iso) {
        out << "round trip failed: realized spectrum is not isomorphic to the input\n";
        return 1;
    }
    Rng rng(seed);
    CheckOutcome phi{};
    if (s.leaf_count() >= 1) phi = phi_root_check(s, brspec(s), trials, rng);
    std::ofstream os(out_path);
    if (!os) throw std::runtime_error("cannot write " + out_path);
    os << serialize_ring_spec(s);
    if (!dot_path.empty()) {
        std::ofstream dot(dot_path);
        if (!dot) throw std::runtime_error("cannot write " + dot_path);
        dot << sp.poset.to_dot("spectrum");
    }
    out << "realized: " << s.describe() << "\n";
    out << "round trip: pass (" << sp.poset.size() << " primes)\n";
    out << "phi check: " << (phi.pass ? "pass" : "FAIL") << "\n";
    out << "written to " << out_path << "\n";
    return phi.pass ? 0 : 1;
}

inline int run_embed(const std::string& which, int dim, int generators, int samples, uint64_t seed,
                     std::ostream& out) {
    Rng rng(seed);
    ExtensionReport rep;
    if (which == "case1") {
        rep = fresh_value_extension_check(dim, samples, rng);
        out << "extension: fresh value coordinate, base dimension " << dim << "\n";
    } else {
        rep = gauss_extension_check(generators, dim, samples, rng);
        out << "extension: residue transcendental over " << generators
            << " generator(s), dimension " << dim << "\n";
    }
    out << "samples: " << rep.samples_checked << "\n";
    for (const auto& f : rep.failures) out << "failure: " << f << "\n";
    out << "valuation law: " << (rep.pass ? "pass" : "FAIL") << "\n";
    return rep.pass ? 0 : 1;
}

inline int run_boolprod(int points, int samples, uint64_t seed, std::ostream& out) {
    Rng rng(seed);
    int bad = 0;
    for (int t = 0; t < samples; ++t) {
        std::vector<ValElt> a, b;
        for (int x = 0; x < points; ++x) {
            int d = static_cast<int>(rng.range(1, 2));
            a.push_back(random_in_V(rng, d, 2));
            b.push_back(random_in_V(rng, d, 2));
        }
        auto w = sv_witness(a, b);
        if (!w.identity_holds) ++bad;
    }
    out << "points: " << points << ", samples: " << samples << "\n";
    out << "witness identity: " << (bad == 0 ? "pass" : "FAIL (" + std::to_string(bad) + ")") << "\n";
    return bad == 0 ? 0 : 1;
}

} // namespace detail

// Returns the process exit code; all output goes to out/err.
inline int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact finite-rank local SV-ring toolkit"};
    app.require_subcommand(1);

    // ring check / ring brspec
    auto* ring = app.add_subcommand("ring", "analyze a ring spec file");
    ring->require_subcommand(1);
    std::string check_path;
    int check_trials = 200;
    uint64_t check_seed = 0;
    auto* check = ring->add_subcommand("check", "run the structural checks");
    check->add_option("spec", check_path, "ring spec file")->required();
    check->add_option("--trials", check_trials, "sampling trials per check");
    check->add_option("--seed", check_seed, "random seed");
    std::string brspec_path, brspec_dot;
    auto* br = ring->add_subcommand("brspec", "emit the branching spectrum as DOT");
    br->add_option("spec", brspec_path, "ring spec file")->required();
    br->add_option("--dot", brspec_dot, "output DOT file")->required();

    // realize
    std::string rz_poset, rz_out, rz_dot;
    int rz_trials = 100;
    uint64_t rz_seed = 0;
    auto* rz = app.add_subcommand("realize", "build a ring spec from a finite root");
    rz->add_option("poset", rz_poset, "poset spec file")->required();
    rz->add_option("-o,--output", rz_out, "output ring spec file")->required();
    rz->add_option("--dot", rz_dot, "also write the full spectrum as DOT");
    rz->add_option("--trials", rz_trials, "sampling trials for the phi check");
    rz->add_option("--seed", rz_seed, "random seed");

    // embed
    std::string em_which;
    int em_dim = 1, em_gens = 0, em_samples = 200;
    uint64_t em_seed = 0;
    auto* em = app.add_subcommand("embed", "audit a valued-field extension step");
    em->add_option("case", em_which, "case1 (fresh value) or case2 (residue transcendental)")
        ->required()
        ->check(CLI::IsMember({"case1", "case2"}));
    em->add_option("--dim", em_dim, "base dimension d");
    em->add_option("--generators", em_gens, "scalar generators already present (case2)");
    em->add_option("--samples", em_samples, "sampled polynomials");
    em->add_option("--seed", em_seed, "random seed");

    // boolprod
    int bp_points = 3, bp_samples = 200;
    uint64_t bp_seed = 0;
    auto* bp = app.add_subcommand("boolprod", "finite Boolean-product witness check");
    bp->add_option("--points", bp_points, "number of points");
    bp->add_option("--samples", bp_samples, "sampled section pairs");
    bp->add_option("--seed", bp_seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (check->parsed()) return detail::run_ring_check(check_path, check_trials, check_seed, out);
        if (br->parsed()) return detail::run_ring_brspec(brspec_path, brspec_dot, out);
        if (rz->parsed()) return detail::run_realize(rz_poset, rz_out, rz_dot, rz_trials, rz_seed, out);
        if (em->parsed()) return detail::run_embed(em_which, em_dim, em_gens, em_samples, em_seed, out);
        if (bp->parsed()) return detail::run_boolprod(bp_points, bp_samples, bp_seed, out);
    } catch (const SpecFileError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 2;
}

} // namespace svr
