#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "catcoh/catfile.hpp"
#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "catcoh");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    int code = catcoh::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(CATCOH_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("validate") {
    auto ok = run({"validate", fixture("z2.fcat")});
    CHECK(ok.code == 0);
    CHECK(ok.out == "ok: category with 1 objects and 2 morphisms\n");

    auto bad = run({"validate", fixture("broken.fcat")});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("broken.fcat:6:1: missing composite for the pair (g, f)") != std::string::npos);

    CHECK(run({"validate", fixture("trivialZ.fmod"), "--cat", fixture("z2.fcat")}).code == 0);
    CHECK(run({"validate", fixture("husainov.fmod"), "--cat", fixture("interval.fcat")}).code == 0);
    CHECK(run({"validate", fixture("trivialZ.fmod")}).code == 2);
    CHECK(run({"validate", fixture("face0.ffun")}).out == "ok: functor\n");
    CHECK(run({"validate", fixture("z2-swap.ffun")}).code == 0);
    CHECK(run({"validate", fixture("does-not-exist.fcat")}).code == 2);
    CHECK(run({"validate", fixture("oracles/group_cohomology.txt")}).code == 2);
}

TEST_CASE("cohomology subcommand") {
    auto q = run({"cohomology", "--flavor", "quillen", "--cat", fixture("z2.fcat"), "--coeff", fixture("trivialZ.fmod"),
                  "--max-degree", "4", "--text"});
    CHECK(q.code == 0);
    CHECK(q.out == "(Z, 0, Z/2, 0, Z/2)\n");

    auto z3 = run({"cohomology", "--flavor", "quillen", "--cat", fixture("z3.fcat"), "--coeff", fixture("trivialZ3.fmod"),
                   "--max-degree", "4", "--text"});
    CHECK(z3.out == "(Z, 0, Z/3, 0, Z/3)\n");

    auto th = run({"cohomology", "--cat", fixture("z2.fcat"), "--max-degree", "4", "--text"});
    CHECK(th.out == q.out);

    auto bw = run({"cohomology", "--flavor", "bw", "--cat", fixture("interval.fcat"), "--coeff", fixture("husainov.fmod"),
                   "--max-degree", "2", "--text"});
    CHECK(bw.out == "(0, Z, 0)\n");

    // a module over the opposite category through all three flavors
    const auto op = std::filesystem::temp_directory_path() / "catcoh_cli_op.fmod";
    {
        std::ofstream f(op);
        f << "fmod 1\nring int\nover opposite\nrank 0 1\nrank 1 1\nmap a : 1\n";
    }
    for (const char* flavor : {"quillen", "bw", "thomason"}) {
        auto r = run({"cohomology", "--flavor", flavor, "--cat", fixture("interval.fcat"), "--coeff", op.string(),
                      "--max-degree", "2", "--text"});
        CHECK_MESSAGE(r.out == "(Z, 0, 0)\n", flavor << ": " << r.err);
    }
    std::filesystem::remove(op);

    auto js = run({"cohomology", "--cat", fixture("z2.fcat"), "--max-degree", "2"});
    CHECK(js.code == 0);
    CHECK(js.out.find(R"("H2":{"rank":0,"torsion":[2]})") != std::string::npos);
    CHECK(js.out.find(R"("flavor":"thomason")") != std::string::npos);

    CHECK(run({"cohomology", "--flavor", "quillen", "--cat", fixture("z2.fcat")}).code == 2);
    CHECK(run({"cohomology", "--flavor", "nope", "--cat", fixture("z2.fcat")}).code == 2);
    CHECK(run({"cohomology", "--cat", fixture("z2.fcat"), "--ring", "fp:4"}).code == 2);
}

TEST_CASE("grothendieck subcommand") {
    auto r = run({"grothendieck", "--functor", fixture("z2-swap.ffun")});
    CHECK(r.code == 0);
    auto G = catcoh::parse_category(r.out);
    CHECK(G->object_count() == 2);
    CHECK(G->morphism_count() == 4);
    CHECK(run({"grothendieck", "--functor", fixture("face0.ffun")}).code == 2);
}

TEST_CASE("verify subcommand exit codes and determinism") {
    auto h = run({"verify", "husainov", "--no-timing"});
    CHECK(h.code == 0);
    CHECK(h.out.find(R"("verdict":"pass")") != std::string::npos);
    CHECK(h.out == run({"verify", "husainov", "--no-timing"}).out);
    CHECK(h.out.find("wall_ms") == std::string::npos);

    auto t1 = run({"verify", "theorem1", "--functor", fixture("face0.ffun"), "--max-degree", "2", "--no-timing"});
    CHECK(t1.code == 0);
    auto t2 = run({"verify", "theorem2", "--functor-fixture", "pt-[1]@0", "--max-degree", "2"});
    CHECK(t2.code == 0);
    auto sweep = run({"verify", "theorem2", "--sweep", "5", "--seed", "9", "--max-degree", "2", "--no-timing"});
    CHECK(sweep.code == 0);
    CHECK(sweep.out == run({"verify", "theorem2", "--sweep", "5", "--seed", "9", "--max-degree", "2", "--no-timing"}).out);

    auto t3 = run({"verify", "theorem3", "--diagram", fixture("z2-swap.ffun"), "--max-degree", "2", "--no-timing"});
    CHECK(t3.code == 0);
    CHECK(run({"verify", "dold-puppe", "--diagram-fixture", "z2-pt", "--max-degree", "2"}).code == 0);
    CHECK(run({"verify", "diag", "--diagram-fixture", "[1]-mixed", "--max-degree", "2"}).code == 0);
    CHECK(run({"verify", "lambda2", "--diagram-fixture", "pt-[1]", "--max-degree", "2"}).code == 0);

    CHECK(run({"verify", "theorem1", "--functor-fixture", "nope"}).code == 2);
    CHECK(run({"verify", "theorem1"}).code == 2);
    CHECK(run({"verify", "frobnicate"}).code == 2);
    CHECK(run({"verify", "theorem3", "--diagram-fixture", "z2-pt", "--ring", "int", "--max-degree", "2"}).code == 2);
}

TEST_CASE("simplex cap") {
    auto r = run({"verify", "theorem1", "--functor-fixture", "id-z2", "--max-degree", "3", "--cap", "20"});
    CHECK(r.code == 3);
    CHECK(r.err.find("cap exceeded") != std::string::npos);
    unsetenv("CATCOH_SIMPLEX_CAP");
    CHECK(run({"verify", "theorem1", "--functor-fixture", "id-z2", "--max-degree", "2"}).code == 0);
}

TEST_CASE("output files and fixture listing") {
    const auto path = std::filesystem::temp_directory_path() / "catcoh_cli_test.json";
    auto r = run({"verify", "husainov", "--no-timing", "--output", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(catcoh::read_text_file(path.string()) == run({"verify", "husainov", "--no-timing"}).out);
    std::filesystem::remove(path);

    auto l = run({"fixtures", "list"});
    CHECK(l.code == 0);
    CHECK(l.out.find("diagrams: z2-pt z2-swap [1]-mixed pt-[1]") != std::string::npos);
    CHECK(l.out.find("broken.fcat") != std::string::npos);
    CHECK(run({}).code == 2);
}
