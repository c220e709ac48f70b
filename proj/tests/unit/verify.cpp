#include <doctest.h>

#include "catcoh/fixtures.hpp"
#include "catcoh/random_fixtures.hpp"
#include "catcoh/report.hpp"
#include "catcoh/verify.hpp"

using namespace catcoh;
namespace fx = catcoh::fixtures;
namespace rf = catcoh::random_fixtures;

namespace {

NervePtr nerve_of(const CategoryPtr& C) { return std::make_shared<Nerve>(C); }

const GradedInvariants& side(const TheoremReport& R, const std::string& name) {
    for (const auto& [n, g] : R.sides)
        if (n == name) return g;
    FAIL("no side named " << name);
    static GradedInvariants none;
    return none;
}

bool check_passed(const TheoremReport& R, const std::string& name) {
    for (const auto& c : R.checks)
        if (c.name == name) return c.passed;
    FAIL("no check named " << name);
    return false;
}

}  // namespace

TEST_CASE("theorem1 on small functors") {
    auto id = fx::functor("id-pt");
    auto R = verify_theorem1(id, constant_system(nerve_of(id.source), Ring::integers()), 2);
    CHECK(R.verdict == "pass");
    CHECK(side(R, "H_Th(C;M)").to_string() == "(Z, 0, 0)");
    CHECK(R.window == 2);

    auto face = fx::functor("face1");
    auto R2 = verify_theorem1(face, constant_system(nerve_of(face.source), Ring::integers()), 3);
    CHECK(R2.verdict == "pass");
    CHECK(R2.all_checks_pass());

    auto at0 = fx::functor("pt-[1]@0");
    auto R3 = verify_theorem1(at0, constant_system(nerve_of(at0.source), Ring::prime_field(2)), 3);
    CHECK(R3.verdict == "pass");

    auto under = verify_theorem1(fx::functor("pt-[1]@1"), constant_system(nerve_of(at0.source), Ring::integers()), 3, true);
    CHECK(under.theorem == "theorem1-rev");
    CHECK(under.verdict == "pass");

    // chi-pullback of a random natural system on [1]
    auto id1 = fx::functor("id-[1]");
    auto X = nerve_of(id1.source);
    auto FC = std::make_shared<FactorizationCategory>(factorization_category(id1.source));
    rf::Rng rng(17);
    auto M = system_from_natural(X, FC, rf::random_natural_system(rng, *FC, Ring::integers()));
    CHECK(verify_theorem1(id1, M, 3).verdict == "pass");
}

TEST_CASE("theorem1 rejects a system on the wrong nerve") {
    auto face = fx::functor("face0");
    auto wrong = constant_system(nerve_of(face.target), Ring::integers());
    CHECK_THROWS(verify_theorem1(face, wrong, 2));
}

TEST_CASE("theorem2 verdicts") {
    auto id = fx::functor("id-[1]");
    auto R = verify_theorem2(id, constant_system(nerve_of(id.target), Ring::integers()), 2);
    CHECK(R.verdict == "pass");
    CHECK(R.hypotheses.size() == 2);

    auto at0 = fx::functor("pt-[1]@0");
    auto C = verify_theorem2(at0, constant_system(nerve_of(at0.target), Ring::integers()), 2);
    CHECK(C.verdict == "pass");

    auto H = fx::husainov();
    auto sys = system_from_natural(nerve_of(H.D), H.FD, H.M);
    auto T = verify_theorem2(H.phi, sys, 2);
    CHECK(T.verdict == "hypothesis-fails");
    CHECK(T.ok());
    CHECK_FALSE(check_passed(T, "conclusion"));
    // the hypothesis fails over the object 1 only
    CHECK(T.note.find("d = 1") != std::string::npos);
    for (const auto& [d, S] : T.hypotheses) CHECK((S.verdict == "pass") == (d == "0"));
}

TEST_CASE("theorem3 over fields") {
    for (const Ring& ring : {Ring::prime_field(2), Ring::rationals()}) {
        for (const auto& name : fx::diagram_names()) {
            auto G = grothendieck_hocolim(fx::diagram(name));
            auto R = verify_theorem3(G, constant_system(G.commas.category_nerve, ring), 3);
            CHECK_MESSAGE(R.verdict == "pass", name << " over " << ring.to_string());
            REQUIRE(R.tables.size() == 3);
            CHECK(R.tables[0].second == R.tables[1].second);
        }
    }
    auto G = grothendieck_hocolim(fx::diagram("z2-pt"));
    auto R = verify_theorem3(G, constant_system(G.commas.category_nerve, Ring::prime_field(2)), 3);
    for (int n = 0; n <= 3; ++n) CHECK(side(R, "H_Th(total;M)").at(n).rank == 1);
    auto Q = verify_theorem3(G, constant_system(G.commas.category_nerve, Ring::rationals()), 3);
    CHECK(side(Q, "H_Th(total;M)").to_string() == "(Q, 0, 0, 0)");
    CHECK_THROWS_AS(verify_theorem3(G, constant_system(G.commas.category_nerve, Ring::integers()), 2), InputError);
}

TEST_CASE("diagonal, Dold-Puppe and lambda2 checks") {
    auto P = nerve_of(terminal_category());
    auto Yb = std::make_shared<HorizontallyConstant>(P);
    auto R = verify_prop_diag(extend_horizontally(Yb, constant_system(P, Ring::integers())), 3);
    CHECK(R.verdict == "pass");

    auto id1 = fx::functor("id-[1]");
    auto H = comma_hocolim(id1, false, nerve_of(id1.source));
    auto sys = bi_function_system(
        H.replacement, Ring::integers(), [](int, int, const Simplex&) { return 1; },
        [](const MonotoneMap&, const MonotoneMap&, const Simplex&) { return Matrix::identity(1); });
    CHECK(verify_prop_diag(sys, 3).verdict == "pass");

    for (const Ring& ring : {Ring::integers(), Ring::prime_field(2)})
        for (const auto& name : fx::diagram_names()) {
            auto F = fx::diagram(name);
            CHECK_MESSAGE(verify_dold_puppe(std::make_shared<SimplicialReplacement>(F), ring, 3).verdict == "pass", name);
            auto G = grothendieck_hocolim(F);
            CHECK_MESSAGE(verify_lambda2(G, constant_system(G.commas.category_nerve, ring), 3).verdict == "pass", name);
        }

    // the homology of the classifying space of Z/2, not its cohomology
    auto DP = verify_dold_puppe(std::make_shared<SimplicialReplacement>(fx::diagram("z2-pt")), Ring::integers(), 3);
    CHECK(side(DP, "H(diag)").to_string() == "(Z, Z/2, 0, Z/2)");
    CHECK(side(DP, "H(Tot)").to_string() == "(Z, Z/2, 0, Z/2)");

    auto G = grothendieck_hocolim(fx::diagram("z2-pt"));
    auto L = verify_lambda2(G, constant_system(G.commas.category_nerve, Ring::integers()), 3);
    CHECK(side(L, "H_Th(total;M)").to_string() == "(Z, 0, Z/2, 0)");
}

TEST_CASE("the worked counterexample end to end") {
    auto R = verify_husainov();
    CHECK(R.verdict == "pass");
    CHECK(R.all_checks_pass());
    CHECK(side(R, "H_BW(D;M)").at(1) == DegreeInvariants{1, {}});
    CHECK(side(R, "H_BW(C;phi^*M)").at(1) == DegreeInvariants{0, {}});
    REQUIRE(R.hypotheses.size() == 1);
    CHECK(R.hypotheses[0].second.verdict == "hypothesis-fails");
}

TEST_CASE("sweeps never contradict") {
    for (const Ring& ring : {Ring::integers(), Ring::prime_field(2)}) {
        auto S2 = sweep_theorem2(7, 12, 2, ring);
        CHECK(S2.verdict != "fail");
        CHECK(S2.hypotheses.size() == 12);
        for (const auto& [label, T] : S2.hypotheses) CHECK_MESSAGE(T.verdict != "fail", label);
        auto S1 = sweep_theorem1(7, 8, 2, ring);
        CHECK(S1.verdict == "pass");
    }
}

TEST_CASE("sweep instances are reproducible") {
    rf::Rng a(123), b(123);
    for (int i = 0; i < 10; ++i) {
        auto x = rf::random_sweep_instance(a, Ring::integers());
        auto y = rf::random_sweep_instance(b, Ring::integers());
        CHECK(x.label == y.label);
        CHECK(same_maps(x.phi, y.phi));
    }
}

TEST_CASE("report serialization is deterministic") {
    auto a = serialize_report(verify_husainov(), false);
    auto b = serialize_report(verify_husainov(), false);
    CHECK(a == b);
    CHECK(a.find("wall_ms") == std::string::npos);
    CHECK(serialize_report(verify_husainov(), true).find("wall_ms") != std::string::npos);
    auto s1 = serialize_report(sweep_theorem2(3, 5, 2, Ring::integers()), false);
    auto s2 = serialize_report(sweep_theorem2(3, 5, 2, Ring::integers()), false);
    CHECK(s1 == s2);
}
