#include <doctest.h>

#include <filesystem>
#include <random>

#include "catcoh/catfile.hpp"
#include "catcoh/coeff.hpp"
#include "catcoh/fixtures.hpp"
#include "catcoh/report.hpp"

using namespace catcoh;
namespace fs = std::filesystem;

namespace {

std::string fixture_path(const std::string& name) { return std::string(CATCOH_FIXTURE_DIR) + "/" + name; }

ParseError parse_error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a ParseError");
    return ParseError(0, 0, "");
}

// Equal up to renumbering: same object names in order, same morphisms by name and same
// composition table by name. Parsing numbers identities first, builders may interleave them.
bool same_by_names(const FiniteCategory& a, const FiniteCategory& b) {
    if (a.object_count() != b.object_count() || a.morphism_count() != b.morphism_count()) return false;
    for (ObjId o = 0; o < a.object_count(); ++o)
        if (a.object_name(o) != b.object_name(o)) return false;
    auto to_b = [&](MorId f) { return b.find_morphism(a.morphism_name(f)); };
    for (MorId f = 0; f < a.morphism_count(); ++f) {
        auto g = to_b(f);
        if (!g || a.object_name(a.src(f)) != b.object_name(b.src(*g)) || a.object_name(a.dst(f)) != b.object_name(b.dst(*g)))
            return false;
    }
    for (MorId f = 0; f < a.morphism_count(); ++f)
        for (MorId g = 0; g < a.morphism_count(); ++g)
            if (a.dst(f) == a.src(g) && b.compose(*to_b(g), *to_b(f)) != *to_b(a.compose(g, f))) return false;
    return true;
}

}  // namespace

TEST_CASE("parse minimal categories") {
    auto pt = parse_category("fcat 1\nobject *\n");
    CHECK(pt->object_count() == 1);
    CHECK(pt->morphism_count() == 1);

    auto c2 = parse_category("fcat 1\nposet\nelement 0\nelement 1\nelement 2\nleq 0 1\nleq 1 2\nleq 0 2\n");
    CHECK(c2->morphism_count() == 6);
    CHECK(*c2 == *chain_category(2));

    auto z2 = parse_category(read_text_file(fixture_path("z2.fcat")));
    CHECK(z2->morphism_count() == 2);
}

TEST_CASE("diagnostics carry positions") {
    auto e = parse_error_of([] { parse_category("fcat 1\nobject x\nobject y\nobject z\nmorphism f x y\nmorphism g y z\n"); });
    CHECK(e.line() == 6);
    CHECK(e.column() == 1);
    CHECK(e.message().find("(g, f)") != std::string::npos);

    e = parse_error_of([] { parse_category("fcat 2\nobject x\n"); });
    CHECK(e.line() == 1);
    CHECK(e.column() == 6);

    e = parse_error_of([] { parse_category("fcat 1\nobject x\n  morphism f x q\n"); });
    CHECK(e.line() == 3);
    CHECK(e.column() == 16);

    e = parse_error_of([] { parse_category("fcat 1\nobject x\nfrobnicate\n"); });
    CHECK(e.line() == 3);
}

TEST_CASE("parse modules") {
    auto c1 = chain_category(1);
    auto M = parse_module("fmod 1\nring int\nrank 0 1\nrank 1 1\nmap 0<1 : 1\n", c1);
    CHECK(M.ranks == std::vector<int>{1, 1});
    for (const auto& m : M.maps) CHECK(m == Matrix::identity(1));
    CHECK(check_functoriality(M).ok());

    auto interval = parse_category(read_text_file(fixture_path("interval.fcat")));
    auto FC = factorization_category(interval);
    ModuleFile hf = parse_module_file(read_text_file(fixture_path("husainov.fmod")));
    CHECK(hf.over == ModuleBase::Factorization);
    auto H = build_module(hf, FC.category);
    CHECK(H.rank(*FC.category->find_object("id_0")) == 0);
    CHECK(H.rank(*FC.category->find_object("id_1")) == 0);
    CHECK(H.rank(*FC.category->find_object("a")) == 1);
    CHECK(check_functoriality(H).ok());

    CHECK_THROWS_AS(parse_module("fmod 1\nring int\nrank 0 1\nrank 1 2\nmap 0<1 : 1\n", c1), ParseError);
    auto e = parse_error_of([&] { parse_module("fmod 1\nring int\nrank 0 1\nrank 1 2\nmap 0<1 : 1\n", c1); });
    CHECK(e.line() == 5);
    CHECK_THROWS_AS(parse_module("fmod 1\nring int\nrank 0 1\nrank 1 1\nmap nope : 1\n", c1), InputError);
    CHECK_THROWS_AS(parse_module_file("fmod 1\nring fp 2\nrank 0 1\nmap x : 3\n"), ParseError);
    CHECK_THROWS_AS(parse_module_file("fmod 1\nring fp 4\n"), ParseError);
}

TEST_CASE("fixture files round-trip exactly") {
    int seen = 0;
    for (const auto& entry : fs::directory_iterator(CATCOH_FIXTURE_DIR)) {
        const auto path = entry.path();
        if (path.stem() == "broken") continue;
        const std::string text = read_text_file(path.string());
        if (path.extension() == ".fcat") {
            CHECK_MESSAGE(serialize_category_file(parse_category_file(text)) == text, path.string());
            ++seen;
        } else if (path.extension() == ".fmod") {
            CHECK_MESSAGE(serialize_module_file(parse_module_file(text)) == text, path.string());
            ++seen;
        } else if (path.extension() == ".ffun") {
            CHECK_MESSAGE(serialize_functor_file(parse_functor_file(text)) == text, path.string());
            ++seen;
        }
    }
    CHECK(seen >= 8);
}

TEST_CASE("category serialization round-trips through built categories") {
    for (const auto& name : fixtures::category_names()) {
        auto C = fixtures::category(name);
        CHECK(same_by_names(*parse_category(serialize_category(*C)), *C));
    }
    auto G = grothendieck(fixtures::diagram("[1]-mixed"));
    CHECK(same_by_names(*parse_category(serialize_category(*G.category)), *G.category));
    auto FC = factorization_category(chain_category(2));
    CHECK(same_by_names(*parse_category(serialize_category(*FC.category)), *FC.category));
}

TEST_CASE("module serialization round-trips") {
    auto FC = factorization_category(chain_category(1));
    Module H = fixtures::husainov_module(FC);
    auto text = serialize_module_file(module_to_file(H, ModuleBase::Factorization));
    Module back = parse_module(text, FC.category);
    CHECK(back.ranks == H.ranks);
    for (MorId m = 0; m < FC.category->morphism_count(); ++m) CHECK(back.map(m) == H.map(m));

    Module q{chain_category(1), Ring::rationals(), {1, 1}, {}};
    q.maps = {Matrix::identity(1), Matrix::identity(1), Matrix::identity(1)};
    q.maps[*q.base->find_morphism("0<1")](0, 0) = mpq_class(-3, 4);
    auto qtext = serialize_module_file(module_to_file(q));
    CHECK(qtext.find("-3/4") != std::string::npos);
    CHECK(parse_module(qtext, q.base).map(*q.base->find_morphism("0<1")) == q.maps[*q.base->find_morphism("0<1")]);
}

TEST_CASE("functor files") {
    auto f = parse_functor_file(read_text_file(fixture_path("face0.ffun")));
    auto phi = build_functor(f);
    CHECK(same_maps(phi, fixtures::functor("face0")));
    auto F = build_diagram(parse_functor_file(read_text_file(fixture_path("z2-swap.ffun"))));
    CHECK(validate_functor_to_cat(*F).ok());
    CHECK(find_isomorphism(grothendieck(F).category, indiscrete_category(2)).has_value());
}

TEST_CASE("fuzzed inputs never crash the parsers") {
    std::vector<std::string> seeds;
    for (const auto& entry : fs::directory_iterator(CATCOH_FIXTURE_DIR))
        if (entry.is_regular_file()) seeds.push_back(read_text_file(entry.path().string()));
    std::mt19937_64 rng(99);
    const std::string alphabet = "abxyz01<:;# \n\t-/*()@_";
    int parse_errors = 0;
    for (int round = 0; round < 3000; ++round) {
        std::string s = seeds[rng() % seeds.size()];
        const int edits = 1 + static_cast<int>(rng() % 4);
        for (int e = 0; e < edits && !s.empty(); ++e) {
            const std::size_t pos = rng() % s.size();
            switch (rng() % 3) {
                case 0: s.erase(pos, 1 + rng() % 5); break;
                case 1: s.insert(pos, 1, alphabet[rng() % alphabet.size()]); break;
                default: s[pos] = alphabet[rng() % alphabet.size()]; break;
            }
        }
        for (int which = 0; which < 3; ++which) {
            try {
                if (which == 0) parse_category(s);
                if (which == 1) build_diagram(parse_functor_file(s));
                if (which == 2) parse_module(s, chain_category(1));
            } catch (const ParseError& e) {
                CHECK(e.line() >= 1);
                CHECK(e.column() >= 1);
                ++parse_errors;
            } catch (const InputError&) {
            }
        }
    }
    CHECK(parse_errors > 0);
}

TEST_CASE("report serialization schema") {
    auto g = make_invariants(Ring::integers(), {{1, {}}, {0, {}}, {0, {mpz_class(2)}}});
    CHECK(serialize_invariants(g) ==
          R"({"H0":{"rank":1,"torsion":[]},"H1":{"rank":0,"torsion":[]},"H2":{"rank":0,"torsion":[2]}})");
    CHECK(serialize_report(TheoremReport{}) == "{}");

    TheoremReport R;
    R.theorem = "theorem1";
    R.verdict = "pass";
    R.window = 2;
    R.sides = {{"left", g}, {"right", g}};
    R.checks = {{"graded iso", true, ""}};
    auto text = serialize_report(R, false);
    CHECK(text.find("\"verdict\":\"pass\"") != std::string::npos);
    CHECK(text.find("\"left\":{\"H0\"") != std::string::npos);
    CHECK(text.find("\"right\":{\"H0\"") != std::string::npos);
    CHECK(text.find("wall_ms") == std::string::npos);
    CHECK(text == serialize_report(R, false));
}
