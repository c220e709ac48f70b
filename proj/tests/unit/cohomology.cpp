#include <doctest.h>

#include <fstream>
#include <sstream>

#include "catcoh/catfile.hpp"
#include "catcoh/cohomology.hpp"
#include "catcoh/fixtures.hpp"
#include "catcoh/random_fixtures.hpp"

using namespace catcoh;
namespace fx = catcoh::fixtures;
namespace rf = catcoh::random_fixtures;

namespace {

NervePtr nerve_of(const CategoryPtr& C) { return std::make_shared<Nerve>(C); }

GradedInvariants inv(const Ring& ring, const std::vector<std::pair<long, std::vector<long>>>& spec) {
    std::vector<DegreeInvariants> d;
    for (const auto& [r, t] : spec) {
        DegreeInvariants x{r, {}};
        for (long v : t) x.torsion.push_back(v);
        d.push_back(x);
    }
    return make_invariants(ring, d);
}

// Frozen group-cohomology oracle table: "<group> <degree> <rank> <torsion...>".
std::map<std::string, GradedInvariants> oracle_table() {
    std::ifstream in(std::string(CATCOH_FIXTURE_DIR) + "/oracles/group_cohomology.txt");
    REQUIRE(in);
    std::map<std::string, std::vector<DegreeInvariants>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream s(line);
        std::string g;
        int degree;
        long rank;
        s >> g >> degree >> rank;
        DegreeInvariants d{rank, {}};
        long t;
        while (s >> t) d.torsion.push_back(t);
        rows[g].push_back(d);
    }
    std::map<std::string, GradedInvariants> out;
    for (const auto& [g, d] : rows) out[g] = make_invariants(Ring::integers(), d);
    return out;
}

// s acts by -1 on a one-object group category of order 2 (ids shared with its opposite).
Module sign_module(const CategoryPtr& G, const Ring& ring) {
    Module M{G, ring, {1}, {}};
    for (MorId m = 0; m < G->morphism_count(); ++m)
        M.maps.push_back(G->is_identity(m) ? Matrix::identity(1) : Matrix::identity(1).scaled(-1).normalized(ring));
    return M;
}

// Free ranks over Z must equal dimensions over Q.
void check_free_ranks_over_q(const CochainComplex& K) {
    for (int n = 0; n <= K.trusted_window(); ++n) {
        const long rq = K.rank(n) - sparse_rank(K.coboundary(n), Ring::rationals()) -
                        (n ? sparse_rank(K.coboundary(n - 1), Ring::rationals()) : 0);
        CHECK(cohomology_at(K, n).rank == rq);
    }
}

}  // namespace

TEST_CASE("quillen complex examples") {
    const Ring Z = Ring::integers();
    auto pt = terminal_category();
    auto K = quillen_complex(nerve_of(pt), constant_module(pt, Z), 3);
    CHECK(graded_iso(cohomology(K, 3), inv(Z, {{1, {}}, {0, {}}, {0, {}}, {0, {}}}), 3));

    auto c2 = chain_category(2);
    auto K2 = quillen_complex(nerve_of(c2), constant_module(c2, Z), 3);
    CHECK(graded_iso(cohomology(K2, 3), inv(Z, {{1, {}}, {0, {}}, {0, {}}, {0, {}}}), 3));
    check_free_ranks_over_q(K2);
}

TEST_CASE("group cohomology matches the frozen oracle") {
    auto table = oracle_table();
    for (auto [name, n] : {std::pair<std::string, int>{"z2", 2}, {"z3", 3}}) {
        auto G = cyclic_group_category(n);
        auto X = nerve_of(G);
        auto Kq = quillen_complex(X, constant_module(G, Ring::integers()), 4);
        auto Kt = thomason_complex(*constant_system(X, Ring::integers()), 4);
        CHECK(graded_iso(cohomology(Kq, 4), table.at(name), 4));
        CHECK(graded_iso(cohomology(Kt, 4), table.at(name), 4));
        check_free_ranks_over_q(Kq);
    }
    auto z2 = parse_category(read_text_file(std::string(CATCOH_FIXTURE_DIR) + "/z2.fcat"));
    auto M = parse_module(read_text_file(std::string(CATCOH_FIXTURE_DIR) + "/trivialZ.fmod"), z2);
    CHECK(cohomology(quillen_complex(nerve_of(z2), M, 4), 4).to_string() == "(Z, 0, Z/2, 0, Z/2)");
}

TEST_CASE("bw complex examples") {
    auto H = fx::husainov();
    auto D = bw_complex(nerve_of(H.D), *H.FD, H.M, 2);
    auto C = bw_complex(nerve_of(H.C), *H.FC, H.pulled, 2);
    CHECK(cohomology(D, 2).at(0) == DegreeInvariants{0, {}});
    CHECK(cohomology(D, 2).at(1) == DegreeInvariants{1, {}});
    CHECK(cohomology(C, 2).at(0) == DegreeInvariants{0, {}});
    CHECK(cohomology(C, 2).at(1) == DegreeInvariants{0, {}});

    auto c1 = chain_category(1);
    auto F1 = factorization_category(c1);
    auto K = bw_complex(nerve_of(c1), F1, constant_module(F1.category, Ring::integers()), 2);
    CHECK(graded_iso(cohomology(K, 2), inv(Ring::integers(), {{1, {}}, {0, {}}, {0, {}}}), 2));
}

TEST_CASE("simplicial complex examples") {
    auto P = nerve_of(terminal_category());
    auto K = simplicial_complex(*constant_system(P, Ring::integers(), 3), 3);
    CHECK(graded_iso(cohomology(K, 3), inv(Ring::integers(), {{3, {}}, {0, {}}, {0, {}}, {0, {}}}), 3));

    auto H = fx::husainov();
    auto I = nerve_of(H.D);
    auto T = thomason_complex(*system_from_natural(I, H.FD, H.M), 3);
    CHECK(graded_iso(cohomology(T, 3), cohomology(bw_complex(I, *H.FD, H.M, 3), 3), 3));
}

TEST_CASE("reduction lemmas on natural systems and modules") {
    rf::Rng rng(2024);
    for (auto C : {chain_category(1), chain_category(2), cyclic_group_category(2)}) {
        auto X = nerve_of(C);
        auto FC = std::make_shared<FactorizationCategory>(factorization_category(C));
        for (const Ring& ring : {Ring::integers(), Ring::prime_field(2)}) {
            std::vector<Module> naturals = {constant_module(FC->category, ring)};
            for (int i = 0; i < 3; ++i) {
                auto M = constant_module(FC->category, ring, 1 + i);
                if (C->object_count() > 1) {
                    auto A = rf::random_thin_module(rng, opposite(*C), ring);
                    auto B = rf::random_thin_module(rng, C, ring);
                    M = kronecker_natural_system(*FC, A, B);
                } else if (i == 0) {
                    M = kronecker_natural_system(*FC, sign_module(opposite(*C), ring), constant_module(C, ring));
                } else if (i == 1) {
                    M = kronecker_natural_system(*FC, sign_module(opposite(*C), ring), sign_module(C, ring));
                }
                naturals.push_back(M);
            }
            for (const auto& M : naturals) {
                REQUIRE(check_functoriality(M).ok());
                auto th = cohomology(thomason_complex(*system_from_natural(X, FC, M), 3), 3);
                auto bw = cohomology(bw_complex(X, *FC, M, 3), 3);
                CHECK(graded_iso(th, bw, 3));
            }
            // covariant and contravariant modules
            std::vector<Module> covariant = {constant_module(C, ring, 2)};
            covariant.push_back(C->object_count() > 1 ? rf::random_thin_module(rng, C, ring) : sign_module(C, ring));
            for (const auto& M : covariant) {
                auto q = cohomology(quillen_complex(X, M, 3), 3);
                CHECK(graded_iso(q, cohomology(bw_complex(X, *FC, natural_from_covariant(*FC, M), 3), 3), 3));
                CHECK(graded_iso(q, cohomology(thomason_complex(*system_from_covariant(X, M), 3), 3), 3));
            }
            auto op = FC->base_opposite;
            std::vector<Module> contravariant = {constant_module(op, ring)};
            contravariant.push_back(C->object_count() > 1 ? rf::random_thin_module(rng, op, ring) : sign_module(op, ring));
            for (const auto& N : contravariant) {
                auto q = cohomology(quillen_complex(nerve_of(op), N, 3), 3);
                CHECK(graded_iso(q, cohomology(bw_complex(X, *FC, natural_from_contravariant(*FC, N), 3), 3), 3));
                CHECK(graded_iso(q, cohomology(thomason_complex(*system_from_contravariant(X, N), 3), 3), 3));
            }
        }
    }
}

TEST_CASE("cochain maps") {
    auto c1 = fx::category("[1]");
    auto I = nerve_of(c1);
    auto M = constant_system(I, Ring::integers());
    auto id = nerve_map(identity_functor(c1), I, I);
    auto f = cochain_map(id, *M, 2);
    for (const auto& m : f) CHECK(m.equals(SparseMatrix::identity(m.rows()), Ring::integers()));

    auto H = comma_hocolim(fx::functor("id-[1]"), false, I);
    auto kap = kappa(H);
    auto K = simplicial_complex(*M, 2);
    auto L = simplicial_complex(*pullback(kap, M), 2);
    auto fk = cochain_map(kap, *M, 2);
    CHECK(check_cochain_map(K, L, fk).ok());
    CHECK(cohomology_at(L, 0).rank == 1);
    CHECK(induced_rank(K, L, fk, 0) == 1);

    auto hu = fx::husainov();
    auto D = nerve_of(hu.D);
    auto P = nerve_of(hu.C);
    auto sys = system_from_natural(D, hu.FD, hu.M);
    auto Nphi = nerve_map(hu.phi, P, D);
    auto KD = thomason_complex(*sys, 2);
    auto KC = simplicial_complex(*pullback(Nphi, sys), 2);
    auto fn = cochain_map(Nphi, *sys, 2);
    CHECK(check_cochain_map(KD, KC, fn).ok());
    CHECK(cohomology_at(KD, 1).rank == 1);
    CHECK(cohomology_at(KC, 1).rank == 0);
    CHECK(induced_rank(KD, KC, fn, 1) == 0);
}

TEST_CASE("one-point simplicial set") {
    auto P = nerve_of(terminal_category());
    Module M{terminal_category(), Ring::integers(), {2}, {Matrix::identity(2)}};
    auto K = thomason_complex(*system_from_covariant(P, M), 3);
    auto h = cohomology(K, 3);
    CHECK(h.at(0).rank == 2);
    for (int n = 1; n <= 3; ++n) CHECK(h.at(n).rank == 0);
}

TEST_CASE("bisimplicial complexes") {
    auto c1 = fx::category("[1]");
    auto I = nerve_of(c1);
    auto Yb = std::make_shared<HorizontallyConstant>(I);
    auto D = bisimplicial_complex(*extend_horizontally(Yb, constant_system(I, Ring::integers())), 3);
    for (int p = 1; p <= 4; ++p)
        for (int q = 0; p + q <= 4; ++q) CHECK(D.rank(p, q) == D.rank(0, q));

    auto pt = terminal_category();
    auto F = std::make_shared<FunctorToCat>(FunctorToCat{pt, {pt}, {identity_functor(pt)}});
    auto X = std::make_shared<SimplicialReplacement>(F);
    auto ones = bi_function_system(
        X, Ring::integers(), [](int, int, const Simplex&) { return 1; },
        [](const MonotoneMap&, const MonotoneMap&, const Simplex&) { return Matrix::identity(1); });
    auto Dp = bisimplicial_complex(*ones, 3);
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; p + q <= 4; ++q) CHECK(Dp.rank(p, q) == 1);

    // construction validates d_h d_v = d_v d_h on the hocolim fixture
    auto H = comma_hocolim(fx::functor("id-[1]"), false, I);
    auto onesH = bi_function_system(
        H.replacement, Ring::integers(), [](int, int, const Simplex&) { return 1; },
        [](const MonotoneMap&, const MonotoneMap&, const Simplex&) { return Matrix::identity(1); });
    CHECK_NOTHROW(bisimplicial_complex(*onesH, 3));
    CHECK_NOTHROW(total_complex(bisimplicial_complex(*onesH, 3)));
}

TEST_CASE("hq_system") {
    const Ring F2 = Ring::prime_field(2);
    // a trivial action on a point gives the constant system with identity maps
    {
        auto G = grothendieck_hocolim(fx::diagram("z2-pt"));
        auto h0 = hq_system(G, constant_system(G.commas.category_nerve, F2), 0);
        const auto& B = *h0->carrier();
        for (int n = 0; n <= 3; ++n)
            for (std::size_t k = 0; k < B.count(n); ++k) {
                Simplex x = B.simplices(n).at(k);
                CHECK(h0->rank(n, x) == 1);
                for (const auto& f : MonotoneMap::all(0, n)) CHECK(h0->induced(f, x).is_identity());
            }
    }
    for (const auto& name : {"z2-pt", "z2-swap", "[1]-mixed"}) {
        auto G = grothendieck_hocolim(fx::diagram(name));
        auto M = constant_system(G.commas.category_nerve, F2);
        // at a vertex d the value is H^q of the comma over d
        for (int q = 0; q <= 1; ++q) {
            auto S = hq_system(G, M, q);
            for (ObjId d = 0; d < G.construction.diagram->base->object_count(); ++d) {
                auto comma = nerve_of(G.commas.family.commas[d].category);
                auto expect = cohomology(thomason_complex(*constant_system(comma, F2), 2), 2).at(q).rank;
                CHECK(S->rank(0, {d}) == expect);
            }
        }
        for (int q = 0; q <= 2; ++q) CHECK(check_functoriality(*hq_system(G, M, q), 3 - q).ok());
    }
    // the swap acts on H^0 of the fiber {x, y} by a transposition
    {
        auto G = grothendieck_hocolim(fx::diagram("z2-swap"));
        auto h0 = hq_system(G, constant_system(G.commas.category_nerve, F2), 0);
        CHECK(h0->rank(0, {0}) == 2);
        const auto& B = *G.construction.diagram->base;
        MorId s = 0;
        while (B.is_identity(s)) ++s;
        auto m = h0->induced(MonotoneMap::coface(1, 0), {s});
        CHECK_FALSE(m.is_identity());
        CHECK((m * m).is_identity());
    }
    // over a one-object base the value is the cohomology of the single comma
    auto G = grothendieck_hocolim(fx::diagram("pt-[1]"));
    auto M = constant_system(G.commas.category_nerve, Ring::rationals());
    auto comma = nerve_of(G.commas.family.commas[0].category);
    for (int q = 0; q <= 2; ++q) {
        auto expect = cohomology(thomason_complex(*constant_system(comma, Ring::rationals()), 3), 3).at(q).rank;
        CHECK(hq_system(G, M, q)->rank(0, {0}) == expect);
    }
    CHECK_THROWS_AS(hq_system(G, constant_system(G.commas.category_nerve, Ring::integers()), 0), InputError);
}
