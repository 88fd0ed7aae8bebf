// Command-line surface for the singular-fiber complex library: catalog
// queries, complex checks, cohomology, claim verification, co-existence
// checking, and invariant evaluation on Morse traces.
//
// Exit status: 0 = success / all checks pass, 1 = verification failures,
// 2 = usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fibercx/catalog.hpp"
#include "fibercx/invariants.hpp"
#include "fibercx/morse.hpp"
#include "fibercx/universal.hpp"
#include "fibercx/verify.hpp"

using namespace fibercx;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open file: " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

ComplexVariant variant_from(const std::string& s) {
    if (s == "full") return ComplexVariant::Full32;
    if (s == "admissible") return ComplexVariant::Admissible32;
    if (s == "morse") return ComplexVariant::Morse21;
    throw CLI::ValidationError("--variant", "unknown variant '" + s + "'");
}

Cochain cochain_from_class_arg(const std::string& s) {
    if (s == "alpha") return named_class(NamedClassTag::Alpha);
    if (s == "beta") return named_class(NamedClassTag::Beta);
    if (s == "gamma") return named_class(NamedClassTag::Gamma);
    return parse_cochain(s, 1);
}

struct Options {
    bool porcelain = false;
};

int cmd_catalog_list(const std::string& dim, int codim, const std::string& variant,
                     bool refined, const Options& opt) {
    const Catalog& cat = catalog_for(dim == "2,1" ? ComplexVariant::Morse21
                                                  : ComplexVariant::Full32);
    Variant v = variant == "admissible" ? Variant::Admissible : Variant::Full;
    auto names = cat.list_classes(codim, v, refined);
    if (opt.porcelain) {
        for (const auto& n : names) std::cout << "class=" << print_class_name(n) << "\n";
        std::cout << "count=" << names.size() << "\n";
    } else {
        for (const auto& n : names) std::cout << print_class_name(n) << "\n";
        std::cout << "total: " << names.size() << "\n";
    }
    return 0;
}

int cmd_complex_check(const std::string& variant, const Options& opt) {
    std::string why;
    bool ok = get_complex(variant_from(variant)).check(&why);
    if (opt.porcelain)
        std::cout << "ok=" << (ok ? 1 : 0) << "\n";
    else
        std::cout << (ok ? "complex is well formed (delta.delta = 0)"
                         : "complex check FAILED: " + why)
                  << "\n";
    return ok ? 0 : 1;
}

int cmd_cohomology(const std::string& variant, int degree, const Options& opt) {
    const CochainComplexZ2& cx = get_complex(variant_from(variant));
    CohomologySummary h = cx.cohomology_basis(degree);
    if (opt.porcelain) {
        std::cout << "degree=" << h.degree << "\n";
        std::cout << "dimension=" << h.dimension << "\n";
        for (const auto& g : h.generators)
            std::cout << "generator=" << print_cochain(g) << "\n";
    } else {
        std::cout << "H^" << degree << " has dimension " << h.dimension << "\n";
        for (const auto& g : h.generators)
            std::cout << "  generator: " << print_cochain(g) << "\n";
    }
    return 0;
}

int cmd_verify_paper(const std::string& formulae_path, const std::string& disk_path,
                     std::uint64_t seed, int trials, const Options& opt) {
    VerifyOptions vo;
    vo.formulae = load_formulae(formulae_path);
    vo.disk_trace = parse_trace(read_file(disk_path));
    vo.seed = seed;
    vo.trials = trials;
    auto claims = run_verification(vo);
    bool all = true;
    for (const auto& c : claims) {
        all = all && c.pass;
        if (opt.porcelain) {
            std::cout << "claim=" << c.name << " pass=" << (c.pass ? 1 : 0) << "\n";
        } else {
            std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name << "\n";
            if (!c.pass && !c.detail.empty()) std::cout << "      " << c.detail << "\n";
        }
    }
    if (!opt.porcelain)
        std::cout << (all ? "all claims verified" : "VERIFICATION FAILURES PRESENT")
                  << "\n";
    return all ? 0 : 1;
}

int cmd_constraints_derive(const std::string& variant, const std::string& level,
                           const Options& opt) {
    const CochainComplexZ2& cx = get_complex(variant_from(variant));
    std::vector<ParityConstraint> cs;
    if (level == "refined") {
        cs = derive_constraints(cx, 1);
        auto c0 = derive_constraints(cx, 0);
        cs.insert(cs.begin(), c0.begin(), c0.end());
    } else {
        auto refined = derive_constraints(cx, 1);
        cs = coarsen_constraints(refined, cx.basis(2));
        if (level == "basis") cs = constraint_basis(cs, cx.basis(2));
    }
    for (const auto& c : cs) {
        if (opt.porcelain)
            std::cout << "constraint=" << print_constraint(c) << "\n";
        else
            std::cout << "even: " << print_constraint(c) << "\n";
    }
    return 0;
}

int cmd_coexist(const std::string& file, const std::string& level, const Options& opt) {
    CountVector counts = parse_counts(read_file(file));
    std::vector<ParityConstraint> cs;
    bool codim1 = !counts.empty() && counts.begin()->first.codim() == 1;
    if (codim1) {
        cs = morse_coexistence_constraints();
    } else {
        const CochainComplexZ2& full = get_complex(ComplexVariant::Full32);
        auto refined = derive_constraints(full, 1);
        if (level == "refined") {
            cs = refined;
        } else {
            cs = coarsen_constraints(refined, full.basis(2));
            if (level == "basis") cs = constraint_basis(cs, full.basis(2));
        }
    }
    CoexistenceReport rep = check_coexistence(counts, cs);
    for (const auto& r : rep.results) {
        if (opt.porcelain)
            std::cout << "constraint=" << print_constraint(r.constraint)
                      << " total=" << r.total << " even=" << (r.even ? 1 : 0) << "\n";
        else
            std::cout << (r.even ? "even  " : "ODD   ") << print_constraint(r.constraint)
                      << "  (total " << r.total << ")\n";
    }
    if (!opt.porcelain)
        std::cout << (rep.all_even() ? "all parity laws satisfied"
                                     : "PARITY VIOLATIONS PRESENT")
                  << "\n";
    return rep.all_even() ? 0 : 1;
}

int cmd_morse_validate(const std::string& file, const Options& opt) {
    MorseTrace t = parse_trace(read_file(file));
    ValidationReport rep = validate_trace(t);
    if (opt.porcelain) {
        std::cout << "valid=" << (rep.valid() ? 1 : 0) << "\n";
        for (const auto& v : rep.violations) std::cout << "violation=" << v << "\n";
    } else if (rep.valid()) {
        std::cout << "trace is valid (" << t.events.size() << " events)\n";
    } else {
        std::cout << "trace is INVALID:\n" << rep.to_string();
    }
    return rep.valid() ? 0 : 1;
}

int cmd_morse_counts(const std::string& file, const Options& opt) {
    MorseTrace t = parse_trace(read_file(file));
    CountVector counts = count_fibers(t);
    for (const auto& [n, c] : counts) {
        if (opt.porcelain)
            std::cout << "count." << print_class_name(n) << "=" << c << "\n";
        else
            std::cout << print_class_name(n) << " = " << c << "\n";
    }
    return 0;
}

int cmd_morse_invariant(const std::string& file, const std::string& cls,
                        const std::string& variant, const Options& opt) {
    MorseTrace t = parse_trace(read_file(file));
    Cochain c = cochain_from_class_arg(cls);
    InvariantValue v = evaluate(c, variant_from(variant), t);
    if (opt.porcelain)
        std::cout << "value=" << v.value << "\n";
    else
        std::cout << v.value << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"universal complex of singular fibers for stable maps of "
                 "3-manifolds with boundary, and Morse-trace invariants"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--porcelain", opt.porcelain, "machine-readable key=value output");

    // catalog list
    auto* catalog = app.add_subcommand("catalog", "catalog queries");
    auto* cat_list = catalog->add_subcommand("list", "list fiber classes");
    std::string dim = "3,2", cat_variant = "full";
    int codim = 1;
    bool refined = false;
    cat_list->add_option("--dim", dim, "dimension pair: 3,2 or 2,1");
    cat_list->add_option("--codim", codim, "codimension 0, 1 or 2");
    cat_list->add_option("--variant", cat_variant, "full or admissible");
    cat_list->add_flag("--refined", refined, "list parity refinements");

    // complex check
    auto* complex = app.add_subcommand("complex", "complex operations");
    auto* cx_check = complex->add_subcommand("check", "verify delta.delta = 0");
    std::string cx_variant = "full";
    cx_check->add_option("--variant", cx_variant, "full, admissible or morse");

    // cohomology
    auto* coh = app.add_subcommand("cohomology", "cohomology of a variant");
    std::string coh_variant = "full";
    int degree = 1;
    coh->add_option("--variant", coh_variant, "full, admissible or morse");
    coh->add_option("--degree", degree, "degree 0, 1 or 2");

    // verify-paper
    auto* verify = app.add_subcommand("verify-paper", "verify every numerical claim");
    std::string formulae_path = "data/expected_formulae.txt";
    std::string disk_path = "data/disk.trace";
    std::uint64_t seed = 0;
    int trials = 1000;
    verify->add_option("--formulae", formulae_path, "shipped formula transcription");
    verify->add_option("--disk-trace", disk_path, "nontriviality witness trace");
    verify->add_option("--seed", seed, "first seed of the property sweep");
    verify->add_option("--trials", trials, "number of random traces");

    // constraints derive
    auto* constraints = app.add_subcommand("constraints", "co-existence laws");
    auto* derive = constraints->add_subcommand("derive", "derive parity laws");
    std::string cn_variant = "full", level = "refined";
    derive->add_option("--variant", cn_variant, "full, admissible or morse");
    derive->add_option("--level", level, "refined, coarse or basis");

    // coexist FILE
    auto* coexist = app.add_subcommand("coexist", "check a count vector file");
    std::string counts_file, coexist_level = "refined";
    coexist->add_option("file", counts_file, "count vector file")->required();
    coexist->add_option("--level", coexist_level, "refined, coarse or basis");

    // morse validate|counts|invariant FILE
    auto* morse = app.add_subcommand("morse", "Morse trace operations");
    auto* mv = morse->add_subcommand("validate", "validate a trace file");
    auto* mc = morse->add_subcommand("counts", "count singular fibers");
    auto* mi = morse->add_subcommand("invariant", "evaluate a cobordism invariant");
    std::string mv_file, mc_file, mi_file;
    std::string inv_class = "alpha", inv_variant = "admissible";
    mv->add_option("file", mv_file, "trace file")->required();
    mc->add_option("file", mc_file, "trace file")->required();
    mi->add_option("file", mi_file, "trace file")->required();
    mi->add_option("--class", inv_class, "alpha, beta, gamma or a cochain expression");
    mi->add_option("--variant", inv_variant, "full or admissible");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (cat_list->parsed()) return cmd_catalog_list(dim, codim, cat_variant, refined, opt);
        if (cx_check->parsed()) return cmd_complex_check(cx_variant, opt);
        if (coh->parsed()) return cmd_cohomology(coh_variant, degree, opt);
        if (verify->parsed())
            return cmd_verify_paper(formulae_path, disk_path, seed, trials, opt);
        if (derive->parsed()) return cmd_constraints_derive(cn_variant, level, opt);
        if (coexist->parsed()) return cmd_coexist(counts_file, coexist_level, opt);
        if (mv->parsed()) return cmd_morse_validate(mv_file, opt);
        if (mc->parsed()) return cmd_morse_counts(mc_file, opt);
        if (mi->parsed()) return cmd_morse_invariant(mi_file, inv_class, inv_variant, opt);
        std::cerr << "no subcommand given\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidTrace& e) {
        std::cerr << e.what();
        return 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
