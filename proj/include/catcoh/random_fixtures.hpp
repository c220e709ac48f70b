#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "catcoh/category.hpp"
#include "catcoh/coeff.hpp"
#include "catcoh/linalg.hpp"
#include "catcoh/module.hpp"

namespace catcoh::random_fixtures {

using Rng = std::mt19937_64;

/// Poset on 1..max_objects elements p0, p1, ... with relations only from lower to higher index.
CategoryPtr random_poset(Rng& rng, int max_objects = 4);
/// Order-preserving functor between thin categories (random object map, retried).
Functor random_thin_functor(Rng& rng, const CategoryPtr& source, const CategoryPtr& target);
/// Functorial module on a thin category: random matrices on the generators of a chain
/// [k], composed along the chain and pulled back along a random order-preserving height.
Module random_thin_module(Rng& rng, const CategoryPtr& thin, const Ring& ring, int max_rank = 2);
/// A (x) B natural system with A over C^op and B over C, both random thin modules.
Module random_natural_system(Rng& rng, const FactorizationCategory& FC, const Ring& ring);

/// The worked counterexample's natural system pulled back along F(psi) for a random
/// functor psi from the thin category to [1].
Module random_husainov_pullback(Rng& rng, const FactorizationCategory& FC, const FactorizationCategory& F_interval);

/// Dense integer matrix with entries in [-bound, bound].
IntMatrix random_int_matrix(Rng& rng, int rows, int cols, int bound);

/// One instance of the randomized theorem sweeps.
struct SweepInstance {
    std::string label;
    Functor phi;
    CoefficientSystemPtr system;  // on the nerve of phi.target
};

/// Random phi between posets and a coefficient system on N(target) chosen among
/// constant, last-vertex, first-vertex, chi-pullbacks of natural systems and the
/// counterexample system; the nerve of the target is created here.
SweepInstance random_sweep_instance(Rng& rng, const Ring& ring);

}  // namespace catcoh::random_fixtures
