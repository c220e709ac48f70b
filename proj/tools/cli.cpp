#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "catcoh/catfile.hpp"
#include "catcoh/cohomology.hpp"
#include "catcoh/fixtures.hpp"
#include "catcoh/report.hpp"
#include "catcoh/verify.hpp"

namespace catcoh::cli {

namespace {

constexpr int kOk = 0;
constexpr int kTheoremFailed = 1;
constexpr int kInputError = 2;
constexpr int kCapExceeded = 3;

std::string extension(const std::string& path) {
    auto dot = path.rfind('.');
    return dot == std::string::npos ? "" : path.substr(dot);
}

/// Re-reads a parse failure with the file name in front.
[[noreturn]] void rethrow_with_path(const std::string& path) {
    try {
        throw;
    } catch (const ParseError& e) {
        throw InputError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.message());
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

CategoryPtr load_category(const std::string& path) {
    try {
        return parse_category(read_text_file(path));
    } catch (const InputError&) {
        rethrow_with_path(path);
    }
}

FunctorFile load_functor_file(const std::string& path) {
    try {
        return parse_functor_file(read_text_file(path));
    } catch (const InputError&) {
        rethrow_with_path(path);
    }
}

ModuleFile load_module_file(const std::string& path) {
    try {
        return parse_module_file(read_text_file(path));
    } catch (const InputError&) {
        rethrow_with_path(path);
    }
}

Module build_checked(const ModuleFile& file, const CategoryPtr& base, const std::optional<Ring>& ring,
                     const std::string& path) {
    Module M;
    try {
        M = build_module(file, base);
    } catch (const InputError&) {
        rethrow_with_path(path);
    }
    if (ring) {
        if (M.ring.kind == RingKind::Rational && !ring->is_field())
            throw InputError(path + ": rational module data cannot be read over " + ring->to_string());
        M.ring = *ring;
        for (auto& m : M.maps) m = m.normalized(M.ring);
    }
    auto report = check_functoriality(M);
    if (!report.ok()) throw InputError(path + ": module is not functorial:\n" + report.summary());
    return M;
}

/// Coefficient system on X from an .fmod file (its "over" line selects the construction),
/// or the constant system when no file is given.
CoefficientSystemPtr load_system(const std::string& path, const NervePtr& X, const std::optional<Ring>& ring) {
    if (path.empty()) return constant_system(X, ring.value_or(Ring::integers()));
    ModuleFile file = load_module_file(path);
    const auto& C = X->category();
    switch (file.over) {
        case ModuleBase::Category:
            return system_from_covariant(X, build_checked(file, C, ring, path));
        case ModuleBase::Opposite:
            return system_from_contravariant(X, build_checked(file, opposite(*C), ring, path));
        case ModuleBase::Factorization: {
            auto FC = std::make_shared<FactorizationCategory>(factorization_category(C));
            return system_from_natural(X, FC, build_checked(file, FC->category, ring, path));
        }
    }
    throw std::logic_error("unreachable");
}

Functor load_functor(const std::string& file, const std::string& fixture) {
    if (!file.empty() && !fixture.empty()) throw InputError("give either --functor or --functor-fixture, not both");
    if (!fixture.empty()) return fixtures::functor(fixture);
    if (file.empty()) throw InputError("a functor is required (--functor FILE or --functor-fixture NAME)");
    FunctorFile f = load_functor_file(file);
    if (f.kind != FunctorFile::Kind::Functor) throw InputError(file + ": expected a functor, found a diagram");
    try {
        return build_functor(f);
    } catch (const InputError&) {
        rethrow_with_path(file);
    }
}

FunctorToCatPtr load_diagram(const std::string& file, const std::string& fixture) {
    if (!file.empty() && !fixture.empty()) throw InputError("give either --diagram or --diagram-fixture, not both");
    if (!fixture.empty()) return fixtures::diagram(fixture);
    if (file.empty()) throw InputError("a diagram is required (--diagram FILE or --diagram-fixture NAME)");
    FunctorFile f = load_functor_file(file);
    if (f.kind != FunctorFile::Kind::Diagram) throw InputError(file + ": expected a diagram, found a functor");
    try {
        return build_diagram(f);
    } catch (const InputError&) {
        rethrow_with_path(file);
    }
}

std::optional<Ring> parse_ring(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return Ring::parse(text);
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw InputError("cannot write " + path);
    f << text << "\n";
}

// ------------------------------------------------------------ subcommands

struct Options {
    std::string file;
    std::string flavor = "thomason";
    std::string cat, coeff, ring, output;
    int max_degree = 3;
    bool text = false;

    std::string verify_name;
    std::string functor, functor_fixture, diagram, diagram_fixture;
    std::uint64_t seed = 20240601;
    int sweep = 0;
    long cap = 0;
    bool no_timing = false;
    bool pretty = false;
};

int cmd_validate(const Options& o, std::ostream& out) {
    const std::string ext = extension(o.file);
    if (ext == ".fcat") {
        auto C = load_category(o.file);
        out << "ok: category with " << C->object_count() << " objects and " << C->morphism_count() << " morphisms\n";
    } else if (ext == ".ffun") {
        FunctorFile f = load_functor_file(o.file);
        try {
            if (f.kind == FunctorFile::Kind::Functor) {
                build_functor(f);
                out << "ok: functor\n";
            } else {
                auto F = build_diagram(f);
                out << "ok: diagram over " << F->base->object_count() << " objects\n";
            }
        } catch (const InputError&) {
            rethrow_with_path(o.file);
        }
    } else if (ext == ".fmod") {
        if (o.cat.empty()) throw InputError("validating a module needs --cat");
        auto C = load_category(o.cat);
        ModuleFile file = load_module_file(o.file);
        CategoryPtr base = C;
        if (file.over == ModuleBase::Opposite) base = opposite(*C);
        if (file.over == ModuleBase::Factorization) base = factorization_category(C).category;
        Module M = build_checked(file, base, std::nullopt, o.file);
        out << "ok: module over " << base->object_count() << " objects, ring " << M.ring.to_string() << "\n";
    } else {
        throw InputError(o.file + ": unknown file type (expected .fcat, .fmod or .ffun)");
    }
    return kOk;
}

int cmd_cohomology(const Options& o, std::ostream& out) {
    if (o.max_degree < 0) throw InputError("--max-degree must be >= 0");
    auto C = load_category(o.cat);
    auto ring = parse_ring(o.ring);
    const int N = o.max_degree;
    CochainComplex K;
    if (o.flavor == "thomason") {
        auto X = std::make_shared<Nerve>(C);
        K = thomason_complex(*load_system(o.coeff, X, ring), N);
    } else {
        if (o.coeff.empty()) throw InputError("--flavor " + o.flavor + " needs --coeff");
        ModuleFile file = load_module_file(o.coeff);
        if (o.flavor == "quillen") {
            if (file.over == ModuleBase::Factorization) throw InputError("quillen cohomology takes a module over C or C^op");
            // a contravariant module is a covariant one over C^op
            CategoryPtr base = file.over == ModuleBase::Opposite ? opposite(*C) : C;
            K = quillen_complex(std::make_shared<Nerve>(base), build_checked(file, base, ring, o.coeff), N);
        } else {
            auto FC = factorization_category(C);
            Module M;
            if (file.over == ModuleBase::Factorization)
                M = build_checked(file, FC.category, ring, o.coeff);
            else if (file.over == ModuleBase::Category)
                M = natural_from_covariant(FC, build_checked(file, C, ring, o.coeff));
            else
                M = natural_from_contravariant(FC, build_checked(file, opposite(*C), ring, o.coeff));
            K = bw_complex(std::make_shared<Nerve>(C), FC, M, N);
        }
    }
    auto h = cohomology(K, N);
    if (o.text) {
        write_output(h.to_string(), o.output, out);
    } else {
        Json j;
        j["flavor"] = o.flavor;
        j["ring"] = h.ring.to_string();
        j["window"] = N;
        j["summary"] = h.to_string();
        j["invariants"] = invariants_json(h);
        write_output(j.dump(), o.output, out);
    }
    return kOk;
}

int cmd_grothendieck(const Options& o, std::ostream& out) {
    auto F = load_diagram(o.functor, "");
    auto G = grothendieck(F);
    write_output(serialize_category(*G.category), o.output, out);
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const int N = o.max_degree;
    if (N < 0) throw InputError("--max-degree must be >= 0");
    auto ring = parse_ring(o.ring);
    const std::string& name = o.verify_name;
    TheoremReport R;
    if (name == "husainov") {
        R = verify_husainov();
    } else if ((name == "theorem1" || name == "theorem2") && o.sweep > 0) {
        R = name == "theorem1" ? sweep_theorem1(o.seed, o.sweep, N, ring.value_or(Ring::integers()))
                               : sweep_theorem2(o.seed, o.sweep, N, ring.value_or(Ring::integers()));
    } else if (name == "theorem1" || name == "theorem1-rev" || name == "theorem2") {
        Functor phi = load_functor(o.functor, o.functor_fixture);
        auto carrier = name == "theorem2" ? phi.target : phi.source;
        auto X = std::make_shared<Nerve>(carrier);
        auto M = load_system(o.coeff, X, ring);
        R = name == "theorem2" ? verify_theorem2(phi, M, N) : verify_theorem1(phi, M, N, name == "theorem1-rev");
    } else if (name == "dold-puppe") {
        auto F = load_diagram(o.diagram, o.diagram_fixture);
        auto X = std::make_shared<SimplicialReplacement>(F);
        R = verify_dold_puppe(X, ring.value_or(Ring::integers()), N);
    } else {
        auto F = load_diagram(o.diagram, o.diagram_fixture);
        auto G = grothendieck_hocolim(F);
        const Ring default_ring = name == "theorem3" ? Ring::prime_field(2) : Ring::integers();
        auto M = load_system(o.coeff, G.commas.category_nerve, ring ? ring : std::optional<Ring>(default_ring));
        if (name == "theorem3") {
            R = verify_theorem3(G, M, N);
        } else if (name == "lambda2") {
            R = verify_lambda2(G, M, N);
        } else {
            auto ext = extend_horizontally(G.constant, M);
            R = verify_prop_diag(pullback(lambda2_prime(G), ext), N);
        }
    }
    write_output(serialize_report(R, !o.no_timing, o.pretty ? 2 : -1), o.output, out);
    return R.ok() ? kOk : kTheoremFailed;
}

int cmd_fixtures(std::ostream& out) {
    out << "categories:";
    for (const auto& n : fixtures::category_names()) out << " " << n;
    out << "\nfunctors:";
    for (const auto& n : fixtures::functor_names()) out << " " << n;
    out << "\ndiagrams:";
    for (const auto& n : fixtures::diagram_names()) out << " " << n;
    out << "\nfiles:";
    for (const char* f : {"z2.fcat", "z3.fcat", "interval.fcat", "trivialZ.fmod", "trivialZ3.fmod", "husainov.fmod", "face0.ffun",
                          "z2-swap.ffun", "broken.fcat"})
        out << " " << f;
    out << "\n";
    return kOk;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cohomology of finite categories: Quillen, Baues-Wirsching and Thomason complexes"};
    app.require_subcommand(1);
    Options o;

    auto* validate = app.add_subcommand("validate", "Parse and check a .fcat, .fmod or .ffun file");
    validate->add_option("file", o.file, "Input file")->required();
    validate->add_option("--cat", o.cat, "Category of a module file");

    auto* coh = app.add_subcommand("cohomology", "Cohomology of a category with coefficients");
    coh->add_option("--flavor", o.flavor, "quillen, bw or thomason")
        ->check(CLI::IsMember({"quillen", "bw", "thomason"}));
    coh->add_option("--cat", o.cat, "Category file (.fcat)")->required();
    coh->add_option("--coeff", o.coeff, "Module file (.fmod); thomason defaults to constant coefficients");
    coh->add_option("--ring", o.ring, "int, rat or fp:<p> (default: the module's ring)");
    coh->add_option("--max-degree", o.max_degree, "Highest degree N reported");
    coh->add_option("--output", o.output, "Write the result to a file");
    coh->add_flag("--text", o.text, "Print (H^0, ..., H^N) instead of JSON");

    auto* groth = app.add_subcommand("grothendieck", "Print the Grothendieck construction of a diagram as .fcat");
    groth->add_option("--functor", o.functor, "Diagram file (.ffun)")->required();
    groth->add_option("--output", o.output, "Write the result to a file");

    auto* verify = app.add_subcommand("verify", "Run a theorem-level check and print its report");
    verify->add_option("name", o.verify_name, "Check to run")
        ->required()
        ->check(CLI::IsMember(
            {"theorem1", "theorem1-rev", "theorem2", "theorem3", "diag", "dold-puppe", "lambda2", "husainov"}));
    verify->add_option("--functor", o.functor, "Functor file (.ffun)");
    verify->add_option("--functor-fixture", o.functor_fixture, "Named functor (see fixtures list)");
    verify->add_option("--diagram", o.diagram, "Diagram file (.ffun)");
    verify->add_option("--diagram-fixture", o.diagram_fixture, "Named diagram (see fixtures list)");
    verify->add_option("--coeff", o.coeff, "Module file (.fmod); constant coefficients when omitted");
    verify->add_option("--ring", o.ring, "int, rat or fp:<p>");
    verify->add_option("--max-degree", o.max_degree, "Trusted degree window N");
    verify->add_option("--seed", o.seed, "Seed for --sweep");
    verify->add_option("--sweep", o.sweep, "Randomized sweep of this many instances (theorem1, theorem2)");
    verify->add_option("--cap", o.cap, "Simplex cap (overrides CATCOH_SIMPLEX_CAP)")->check(CLI::PositiveNumber);
    verify->add_option("--output", o.output, "Write the report to a file");
    verify->add_flag("--no-timing", o.no_timing, "Omit the wall time field");
    verify->add_flag("--pretty", o.pretty, "Indent the report");

    auto* fx = app.add_subcommand("fixtures", "Built-in fixtures");
    fx->add_subcommand("list", "List named fixtures")->required(false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    if (o.cap > 0) setenv("CATCOH_SIMPLEX_CAP", std::to_string(o.cap).c_str(), 1);
    try {
        if (*validate) return cmd_validate(o, out);
        if (*coh) return cmd_cohomology(o, out);
        if (*groth) return cmd_grothendieck(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*fx) return cmd_fixtures(out);
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace catcoh::cli
