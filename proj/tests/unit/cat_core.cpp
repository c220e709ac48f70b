#include <doctest.h>

#include <set>

#include "catcoh/category.hpp"
#include "catcoh/fixtures.hpp"
#include "catcoh/random_fixtures.hpp"

using namespace catcoh;
namespace fx = catcoh::fixtures;

namespace {

// Brute force: pairs (u, v) with u o alpha o v = beta.
int count_factorizations(const FiniteCategory& C, MorId alpha, MorId beta) {
    int n = 0;
    for (MorId u = 0; u < C.morphism_count(); ++u) {
        if (C.src(u) != C.dst(alpha) || C.dst(u) != C.dst(beta)) continue;
        for (MorId v = 0; v < C.morphism_count(); ++v) {
            if (C.dst(v) != C.src(alpha) || C.src(v) != C.src(beta)) continue;
            if (C.compose(C.compose(u, alpha), v) == beta) ++n;
        }
    }
    return n;
}

bool has_terminal_object(const FiniteCategory& C) {
    for (ObjId t = 0; t < C.object_count(); ++t) {
        bool ok = true;
        for (ObjId x = 0; x < C.object_count() && ok; ++x) ok = C.hom(x, t).size() == 1;
        if (ok) return true;
    }
    return false;
}

std::vector<CategoryPtr> sample_categories() {
    std::vector<CategoryPtr> out;
    for (const auto& n : fx::category_names()) out.push_back(fx::category(n));
    out.push_back(indiscrete_category(3));
    out.push_back(discrete_category(2));
    out.push_back(cyclic_group_category(4));
    random_fixtures::Rng rng(7);
    for (int i = 0; i < 10; ++i) out.push_back(random_fixtures::random_poset(rng, 4));
    return out;
}

}  // namespace

TEST_CASE("validate_category on builders") {
    CHECK(validate_category(*terminal_category()).ok());
    auto c2 = chain_category(2);
    CHECK(validate_category(*c2).ok());
    CHECK(c2->object_count() == 3);
    CHECK(c2->morphism_count() == 6);
    for (const auto& C : sample_categories()) CHECK(validate_category(*C).ok());
}

TEST_CASE("associativity violation is reported") {
    auto c2 = chain_category(2);
    const MorId a = *c2->find_morphism("0<1");
    const MorId b = *c2->find_morphism("1<2");
    std::vector<MorId> table;
    const int m = c2->morphism_count();
    for (MorId g = 0; g < m; ++g)
        for (MorId f = 0; f < m; ++f) table.push_back(c2->compose_entry(g, f));
    table[static_cast<std::size_t>(b) * m + a] = c2->identity(0);
    FiniteCategory broken(c2->object_names(), c2->morphisms(), c2->identities(), table);
    auto report = validate_category(broken);
    REQUIRE_FALSE(report.ok());
    bool mentions = false;
    for (const auto& v : report.violations) mentions |= v.find("1<2") != std::string::npos;
    CHECK(mentions);
}

TEST_CASE("opposite") {
    auto pt = terminal_category();
    CHECK(*opposite(*pt) == *pt);
    auto c1 = chain_category(1);
    auto op = opposite(*c1);
    const MorId a = *op->find_morphism("0<1");
    CHECK(op->src(a) == 1);
    CHECK(op->dst(a) == 0);
    auto z2 = cyclic_group_category(2);
    CHECK(find_isomorphism(opposite(*z2), z2).has_value());
    for (const auto& C : sample_categories()) {
        auto oo = opposite(*opposite(*C));
        CHECK(validate_category(*opposite(*C)).ok());
        CHECK(*oo == *C);
    }
}

TEST_CASE("comma_over examples") {
    auto id1 = fx::functor("id-[1]");
    auto c = comma_over(id1, 1);
    CHECK(c.category->object_count() == 2);
    CHECK(find_isomorphism(c.category, chain_category(1)).has_value());
    CHECK(c.find(0, *id1.target->find_morphism("0<1")).has_value());
    CHECK(c.find(1, id1.target->identity(1)).has_value());

    auto at0 = comma_over(fx::functor("pt-[1]@0"), 0);
    CHECK(at0.category->object_count() == 1);
    CHECK(at0.category->morphism_count() == 1);

    auto at1 = comma_over(fx::functor("pt-[1]@1"), 0);
    CHECK(at1.category->object_count() == 0);
}

TEST_CASE("comma_under examples") {
    CHECK(find_isomorphism(comma_under(0, fx::functor("id-[1]")).category, chain_category(1)).has_value());
    CHECK(comma_under(0, fx::functor("pt-[1]@1")).category->object_count() == 1);
    CHECK(comma_under(1, fx::functor("pt-[1]@1")).category->object_count() == 1);
}

TEST_CASE("comma_over(id, d) has a terminal object") {
    for (const auto& C : sample_categories()) {
        auto id = identity_functor(C);
        for (ObjId d = 0; d < C->object_count(); ++d) {
            auto c = comma_over(id, d);
            CHECK(validate_category(*c.category).ok());
            CHECK(validate_functor(c.projection).ok());
            CHECK(has_terminal_object(*c.category));
        }
    }
}

TEST_CASE("factorization category examples") {
    auto Fpt = factorization_category(terminal_category());
    CHECK(Fpt.category->object_count() == 1);
    CHECK(Fpt.category->morphism_count() == 1);

    auto c1 = chain_category(1);
    auto F1 = factorization_category(c1);
    CHECK(F1.category->object_count() == 3);
    const MorId alpha = *c1->find_morphism("0<1");
    CHECK(F1.category->hom(c1->identity(0), alpha).size() == 1);
    CHECK(F1.morphism(alpha, c1->identity(0), c1->identity(0)) != kNoMorphism);

    auto Fz2 = factorization_category(cyclic_group_category(2));
    CHECK(Fz2.category->object_count() == 2);
    CHECK(Fz2.category->hom(0, 0).size() == 2);
    CHECK(validate_functor(Fz2.S).ok());
    CHECK(validate_functor(Fz2.T).ok());
}

TEST_CASE("factorization hom sizes match brute force") {
    for (const auto& C : sample_categories()) {
        if (C->morphism_count() > 30) continue;
        auto FC = factorization_category(C);
        REQUIRE(validate_category(*FC.category).ok());
        for (MorId a = 0; a < C->morphism_count(); ++a)
            for (MorId b = 0; b < C->morphism_count(); ++b)
                CHECK(static_cast<int>(FC.category->hom(a, b).size()) == count_factorizations(*C, a, b));
    }
}

TEST_CASE("grothendieck examples") {
    auto swap = grothendieck(fx::diagram("z2-swap"));
    CHECK(validate_category(*swap.category).ok());
    CHECK(find_isomorphism(swap.category, indiscrete_category(2)).has_value());

    auto over_z2 = grothendieck(fx::diagram("z2-pt"));
    CHECK(find_isomorphism(over_z2.category, cyclic_group_category(2)).has_value());

    auto fiber = grothendieck(fx::diagram("pt-[1]"));
    CHECK(find_isomorphism(fiber.category, chain_category(1)).has_value());
    CHECK(validate_functor(fiber.projection).ok());

    auto mixed = grothendieck(fx::diagram("[1]-mixed"));
    CHECK(validate_category(*mixed.category).ok());
    CHECK(mixed.category->object_count() == 4);
}

TEST_CASE("grothendieck composition rule") {
    auto G = grothendieck(fx::diagram("z2-swap"));
    const auto& T = *G.category;
    for (MorId g = 0; g < T.morphism_count(); ++g)
        for (MorId f = 0; f < T.morphism_count(); ++f) {
            if (T.dst(f) != T.src(g)) continue;
            auto [a, x] = G.morphisms[f];
            auto [a2, x2] = G.morphisms[g];
            const auto& D = *G.diagram->base;
            auto [b, y] = G.morphisms[T.compose(g, f)];
            CHECK(b == D.compose(a2, a));
            const auto& fib = G.diagram->fiber(0);
            CHECK(y == fib.compose(x2, G.diagram->act(a2).mor(x)));
        }
}

TEST_CASE("builders reject bad input") {
    CHECK_THROWS_AS(poset_category({"a", "b", "c"}, {{0, 1}, {1, 2}}), InputError);
    CHECK_THROWS_AS(poset_category({"a", "b"}, {{0, 1}, {1, 0}}), InputError);
    auto z2 = group_category({"e", "s"}, {{0, 1}, {1, 0}});
    CHECK(z2->object_count() == 1);
    CHECK(z2->morphism_count() == 2);
    // row of b is not a permutation
    CHECK_THROWS_AS(group_category({"e", "a", "b"}, {{0, 1, 2}, {1, 2, 0}, {2, 1, 2}}), InputError);
}

TEST_CASE("functor and natural transformation validation") {
    for (const auto& n : fx::functor_names()) CHECK(validate_functor(fx::functor(n)).ok());
    auto face = fx::functor("face1");
    Functor bad = face;
    bad.on_morphisms[*face.source->find_morphism("0<1")] = face.target->identity(0);
    CHECK_FALSE(validate_functor(bad).ok());

    auto phi = fx::functor("pt-[1]@0");
    auto fam = comma_over_family(phi);
    auto idfam = comma_over_family(identity_functor(phi.target));
    CHECK(validate_nat_trans(comma_comparison(fam, idfam)).ok());
    for (const auto& n : fx::diagram_names()) CHECK(validate_functor_to_cat(*fx::diagram(n)).ok());
}
