#include "catcoh/random_fixtures.hpp"

#include <memory>

#include "catcoh/fixtures.hpp"

namespace catcoh::random_fixtures {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool order_preserving(const FiniteCategory& source, const FiniteCategory& target, const std::vector<ObjId>& h) {
    for (MorId m = 0; m < source.morphism_count(); ++m)
        if (target.hom(h[source.src(m)], h[source.dst(m)]).size() != 1) return false;
    return true;
}

Matrix random_matrix(Rng& rng, int rows, int cols, const Ring& ring) {
    Matrix A(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) A(r, c) = uniform(rng, -2, 2);
    return A.normalized(ring);
}

}  // namespace

CategoryPtr random_poset(Rng& rng, int max_objects) {
    const int n = uniform(rng, 1, max_objects);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
    std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) rel[i][j] = uniform(rng, 0, 1);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (rel[i][k] && rel[k][j]) rel[i][j] = 1;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rel[i][j]) pairs.emplace_back(i, j);
    return poset_category(names, pairs);
}

Functor random_thin_functor(Rng& rng, const CategoryPtr& source, const CategoryPtr& target) {
    std::vector<ObjId> h(source->object_count());
    for (int attempt = 0; attempt < 500; ++attempt) {
        for (auto& x : h) x = uniform(rng, 0, target->object_count() - 1);
        if (order_preserving(*source, *target, h)) return fixtures::thin_functor(source, target, h);
    }
    // constant functors always exist
    std::fill(h.begin(), h.end(), uniform(rng, 0, target->object_count() - 1));
    return fixtures::thin_functor(source, target, h);
}

Module random_thin_module(Rng& rng, const CategoryPtr& thin, const Ring& ring, int max_rank) {
    const int k = 2;
    auto chain = chain_category(k);
    std::vector<int> ranks;
    for (int i = 0; i <= k; ++i) ranks.push_back(uniform(rng, 0, max_rank));
    std::vector<Matrix> step;
    for (int i = 0; i < k; ++i) step.push_back(random_matrix(rng, ranks[i + 1], ranks[i], ring));
    Module on_chain{chain, ring, ranks, {}};
    for (MorId m = 0; m < chain->morphism_count(); ++m) {
        Matrix A = Matrix::identity(ranks[chain->src(m)]);
        for (int i = chain->src(m); i < chain->dst(m); ++i) A = step[i] * A;
        on_chain.maps.push_back(A.normalized(ring));
    }
    return pullback_module(random_thin_functor(rng, thin, chain), on_chain);
}

Module random_natural_system(Rng& rng, const FactorizationCategory& FC, const Ring& ring) {
    Module A = random_thin_module(rng, FC.base_opposite, ring, 2);
    Module B = random_thin_module(rng, FC.base, ring, 2);
    Module M = kronecker_natural_system(FC, A, B);
    for (auto& m : M.maps) m = m.normalized(ring);
    return M;
}

Module random_husainov_pullback(Rng& rng, const FactorizationCategory& FC, const FactorizationCategory& F_interval) {
    Functor psi = random_thin_functor(rng, FC.base, F_interval.base);
    return pullback_module(factorization_functor(psi, FC, F_interval), fixtures::husainov_module(F_interval));
}

IntMatrix random_int_matrix(Rng& rng, int rows, int cols, int bound) {
    IntMatrix A(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) A(r, c) = uniform(rng, -bound, bound);
    return A;
}

SweepInstance random_sweep_instance(Rng& rng, const Ring& ring) {
    auto C = random_poset(rng, 3);
    auto D = random_poset(rng, 3);
    SweepInstance out;
    out.phi = random_thin_functor(rng, C, D);
    auto ND = std::make_shared<Nerve>(D);
    const std::string shape = std::to_string(C->object_count()) + "->" + std::to_string(D->object_count());
    switch (uniform(rng, 0, 4)) {
        case 0:
            out.label = "constant " + shape;
            out.system = constant_system(ND, ring);
            break;
        case 1:
            out.label = "last-vertex " + shape;
            out.system = system_from_covariant(ND, random_thin_module(rng, D, ring));
            break;
        case 2: {
            out.label = "first-vertex " + shape;
            auto op = opposite(*D);
            out.system = system_from_contravariant(ND, random_thin_module(rng, op, ring));
            break;
        }
        case 3: {
            out.label = "natural " + shape;
            auto FD = std::make_shared<FactorizationCategory>(factorization_category(D));
            out.system = system_from_natural(ND, FD, random_natural_system(rng, *FD, ring));
            break;
        }
        default: {
            out.label = "counterexample-pullback " + shape;
            auto FD = std::make_shared<FactorizationCategory>(factorization_category(D));
            auto FI = factorization_category(chain_category(1));
            Module M = random_husainov_pullback(rng, *FD, FI);
            M.ring = ring;
            out.system = system_from_natural(ND, FD, M);
            break;
        }
    }
    return out;
}

}  // namespace catcoh::random_fixtures
