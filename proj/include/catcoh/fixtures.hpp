#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "catcoh/category.hpp"
#include "catcoh/module.hpp"

namespace catcoh::fixtures {

/// Functor between categories with at most one morphism per hom set, from its object map.
Functor thin_functor(const CategoryPtr& source, const CategoryPtr& target, const std::vector<ObjId>& objects);
/// Functor given by names; unlisted identities go to identities.
Functor functor_by_names(const CategoryPtr& source, const CategoryPtr& target,
                         const std::vector<std::pair<std::string, std::string>>& objects,
                         const std::vector<std::pair<std::string, std::string>>& morphisms);

// Named small categories: pt, [1], [2], z2, z3.
std::vector<std::string> category_names();
CategoryPtr category(const std::string& name);

/// Named functors: id-pt, id-[1], id-[2], id-z2, face0..face2 ([1] -> [2]),
/// pt-[1]@0, pt-[1]@1, pt-z2.
std::vector<std::string> functor_names();
Functor functor(const std::string& name);

/// Named diagrams D -> Cat: z2-pt (z2 acting on pt), z2-swap (z2 swapping two points),
/// [1]-mixed (discrete {a,b} over 0, x -> y over 1, a |-> x, b |-> y), pt-[1] (fiber [1] over pt).
std::vector<std::string> diagram_names();
FunctorToCatPtr diagram(const std::string& name);

/// The worked counterexample: phi: pt -> [1] at 0 and the natural system M on F[1]
/// with M(id_0) = M(id_1) = 0, M(alpha) = Z.
struct HusainovData {
    CategoryPtr C;
    CategoryPtr D;
    Functor phi;
    std::shared_ptr<const FactorizationCategory> FC;
    std::shared_ptr<const FactorizationCategory> FD;
    Module M;       // over FD
    Module pulled;  // M o F(phi), over FC
};

HusainovData husainov();
/// The same system over any factorization category of a category isomorphic to [1]
/// by ids (object 0, object 1, one non-identity morphism).
Module husainov_module(const FactorizationCategory& FD);

}  // namespace catcoh::fixtures
