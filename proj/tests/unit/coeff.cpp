#include <doctest.h>

#include "catcoh/coeff.hpp"
#include "catcoh/fixtures.hpp"
#include "catcoh/random_fixtures.hpp"

using namespace catcoh;
namespace fx = catcoh::fixtures;
namespace rf = catcoh::random_fixtures;

namespace {

NervePtr nerve_of(const CategoryPtr& C) { return std::make_shared<Nerve>(C); }

// Every rank and induced map agrees on simplices of degree <= bound.
void check_same_system(const CoefficientSystem& a, const CoefficientSystem& b, int bound) {
    const auto& X = *a.carrier();
    for (int n = 0; n <= bound; ++n)
        for (std::size_t k = 0; k < X.count(n); ++k) {
            Simplex x = X.simplices(n).at(k);
            REQUIRE(a.rank(n, x) == b.rank(n, x));
            for (int m = 0; m <= n; ++m)
                for (const auto& f : MonotoneMap::all(m, n)) CHECK(a.induced(f, x).equals(b.induced(f, x), a.ring()));
        }
}

}  // namespace

TEST_CASE("module functoriality") {
    auto c2 = chain_category(2);
    CHECK(check_functoriality(constant_module(c2, Ring::integers())).ok());
    auto H = fx::husainov();
    CHECK(check_functoriality(H.M).ok());
    CHECK(check_functoriality(H.pulled).ok());

    Module bad = constant_module(c2, Ring::integers());
    bad.maps[*c2->find_morphism("0<2")] = Matrix::from_rows({{2}});
    auto report = check_functoriality(bad);
    REQUIRE_FALSE(report.ok());
    bool named = false;
    for (const auto& v : report.violations) named |= v.find("1<2 o 0<1") != std::string::npos;
    CHECK(named);
}

TEST_CASE("chi on simplices and maps") {
    auto c2 = chain_category(2);
    auto X = nerve_of(c2);
    CHECK(chi(*X, 0, {1}) == c2->identity(1));
    const MorId a1 = *c2->find_morphism("0<1");
    const MorId a2 = *c2->find_morphism("1<2");
    CHECK(chi(*X, 2, {a1, a2}) == *c2->find_morphism("0<2"));
    auto [u, v] = chi_mor(*X, MonotoneMap::coface(2, 0), {a1, a2});
    CHECK(u == c2->identity(2));
    CHECK(v == a1);
}

TEST_CASE("chi respects composition") {
    for (auto C : {chain_category(2), cyclic_group_category(2)}) {
        auto X = nerve_of(C);
        auto FC = factorization_category(C);
        const auto& F = *FC.category;
        for (int n = 0; n <= 3; ++n)
            for (std::size_t k = 0; k < X->count(n); ++k) {
                Simplex x = X->simplices(n).at(k);
                for (int m = 0; m <= n; ++m)
                    for (const auto& f : MonotoneMap::all(m, n)) {
                        Simplex y = X->apply(f, x);
                        const MorId cf = chi_morphism(*X, FC, f, x);
                        CHECK(F.src(cf) == chi(*X, m, y));
                        CHECK(F.dst(cf) == chi(*X, n, x));
                        for (int l = 0; l <= m; ++l)
                            for (const auto& g : MonotoneMap::all(l, m)) {
                                const MorId cg = chi_morphism(*X, FC, g, y);
                                CHECK(chi_morphism(*X, FC, compose(f, g), x) == F.compose(cf, cg));
                            }
                    }
            }
    }
}

TEST_CASE("natural systems through chi") {
    auto c2 = chain_category(2);
    auto X = nerve_of(c2);
    auto FC = std::make_shared<FactorizationCategory>(factorization_category(c2));
    auto nat = system_from_natural(X, FC, constant_module(FC->category, Ring::integers()));
    check_same_system(*nat, *constant_system(X, Ring::integers()), 3);
    CHECK(check_functoriality(*nat, 3).ok());

    auto H = fx::husainov();
    auto I = nerve_of(H.D);
    auto hs = system_from_natural(I, H.FD, H.M);
    const MorId alpha = *H.D->find_morphism("0<1");
    CHECK(hs->rank(1, {alpha}) == 1);
    CHECK(hs->rank(0, {0}) == 0);
    CHECK(check_functoriality(*hs, 3).ok());

    rf::Rng rng(5);
    for (int i = 0; i < 5; ++i) {
        auto M = rf::random_natural_system(rng, *FC, Ring::integers());
        CHECK(check_functoriality(M).ok());
        CHECK(check_functoriality(*system_from_natural(X, FC, M), 3).ok());
    }
}

TEST_CASE("first and last vertex systems") {
    auto c1 = chain_category(1);
    auto X = nerve_of(c1);
    Module M{c1, Ring::integers(), {1, 0}, {}};
    for (MorId m = 0; m < c1->morphism_count(); ++m)
        M.maps.push_back(c1->is_identity(m) ? Matrix::identity(M.rank(c1->src(m))) : Matrix::zero(0, 1));
    REQUIRE(check_functoriality(M).ok());
    const MorId alpha = *c1->find_morphism("0<1");
    auto last = system_from_covariant(X, M);
    CHECK(last->rank(1, {alpha}) == 0);
    CHECK(check_functoriality(*last, 3).ok());

    auto op = opposite(*c1);
    Module N = on_opposite(M, op);
    N.maps[alpha] = Matrix::zero(1, 0);
    REQUIRE(check_functoriality(N).ok());
    auto first = system_from_contravariant(X, N);
    CHECK(first->rank(1, {alpha}) == 1);
    CHECK(check_functoriality(*first, 3).ok());

    check_same_system(*system_from_covariant(X, constant_module(c1, Ring::integers())),
                      *constant_system(X, Ring::integers()), 3);
}

TEST_CASE("pullbacks") {
    auto phi = fx::functor("face1");
    auto C = phi.target;
    auto X = nerve_of(C);
    auto FC = std::make_shared<FactorizationCategory>(factorization_category(C));
    rf::Rng rng(11);
    auto M = system_from_natural(X, FC, rf::random_natural_system(rng, *FC, Ring::integers()));
    auto id = nerve_map(identity_functor(C), X, X);
    check_same_system(*pullback(id, M), *M, 3);

    auto I = nerve_of(phi.source);
    auto Nphi = nerve_map(phi, I, X);
    auto H = comma_hocolim(phi, false, I);
    auto kap = kappa(H);
    auto pulled = pullback(Nphi, M);
    CHECK(check_functoriality(*pulled, 3).ok());
    // (lambda o rho)^* M = rho^* (lambda^* M)
    check_same_system(*pullback(compose(Nphi, kap), M), *pullback(kap, pulled), 2);
    check_same_system(*pullback(kap, constant_system(I, Ring::integers())), *constant_system(H.hocolim, Ring::integers()), 3);

    // (j'_d)^* M takes the values of M at image simplices
    auto Hid = comma_hocolim(identity_functor(C), false, X);
    for (ObjId d = 0; d < C->object_count(); ++d) {
        auto j = j_map(Hid, d);
        auto Md = pullback(j, M);
        for (int n = 0; n <= 2; ++n)
            for (std::size_t k = 0; k < j.source->count(n); ++k) {
                Simplex s = j.source->simplices(n).at(k);
                CHECK(Md->rank(n, s) == M->rank(n, j(n, s)));
            }
    }
    CHECK_THROWS_AS(pullback(kap, M), std::invalid_argument);
}

TEST_CASE("horizontal extension and horizontal constancy") {
    auto phi = fx::functor("face0");
    auto I = nerve_of(phi.source);
    auto H = comma_hocolim(phi, false, I);
    auto Yb = std::make_shared<HorizontallyConstant>(I);
    auto FI = std::make_shared<FactorizationCategory>(factorization_category(phi.source));
    rf::Rng rng(3);
    auto M = system_from_natural(I, FI, rf::random_natural_system(rng, *FI, Ring::integers()));
    auto ext = extend_horizontally(Yb, M);
    CHECK(is_horizontally_constant(*ext, 3));
    CHECK(check_functoriality(*ext, 3).ok());

    auto kb = kappa_bisimplicial(H, Yb);
    auto pulled = pullback(kb, ext);
    CHECK(is_horizontally_constant(*pulled, 3));
    CHECK(check_functoriality(*pulled, 3).ok());

    auto c = extend_horizontally(Yb, constant_system(I, Ring::integers()));
    CHECK(is_horizontally_constant(*c, 3));

    // doubling along every horizontal coface is not horizontally constant
    auto X = H.replacement;
    auto twisted = bi_function_system(
        X, Ring::rationals(), [](int, int, const Simplex&) { return 1; },
        [](const MonotoneMap& fh, const MonotoneMap&, const Simplex&) {
            Matrix m = Matrix::identity(1);
            const int e = fh.target - fh.source();
            m(0, 0) = e >= 0 ? mpq_class(1 << e) : mpq_class(1, 1 << -e);
            return m;
        });
    CHECK(check_functoriality(*twisted, 2).ok());
    CHECK_FALSE(is_horizontally_constant(*twisted, 2));
}

TEST_CASE("injected functoriality violation in a coefficient system") {
    auto X = nerve_of(chain_category(1));
    auto bad = function_system(
        X, Ring::integers(), [](int, const Simplex&) { return 1; },
        [](const MonotoneMap& f, const Simplex&) {
            Matrix m = Matrix::identity(1);
            if (!f.is_identity()) m(0, 0) = 2;
            return m;
        });
    auto report = check_functoriality(*bad, 2);
    CHECK_FALSE(report.ok());
}
