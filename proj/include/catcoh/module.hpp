#pragma once

#include "catcoh/category.hpp"
#include "catcoh/ring.hpp"

namespace catcoh {

/// Functor from a finite category to finitely generated free modules.
/// maps[m] is rank(dst m) x rank(src m).
struct Module {
    CategoryPtr base;
    Ring ring;
    std::vector<int> ranks;    // per object
    std::vector<Matrix> maps;  // per morphism

    int rank(ObjId x) const { return ranks.at(x); }
    const Matrix& map(MorId m) const { return maps.at(m); }
};

/// Shapes, identities and composition, exhaustively.
ValidationReport check_functoriality(const Module& M);

Module constant_module(const CategoryPtr& C, const Ring& ring, int rank = 1);
/// M o phi, for M over the target of phi.
Module pullback_module(const Functor& phi, const Module& M);
/// Same data read over the opposite category (ids are shared); only valid as
/// a functor when the caller means a contravariant module.
Module on_opposite(const Module& M, const CategoryPtr& opposite);

}  // namespace catcoh
