#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "catcoh/errors.hpp"

namespace catcoh {

using ObjId = int;
using MorId = int;
inline constexpr MorId kNoMorphism = -1;

/// Finite category with dense ids and a stored composition table.
///
/// Construction only checks that ids are in range; the category axioms are
/// checked by validate_category so that broken inputs can be reported.
class FiniteCategory {
public:
    struct Morphism {
        ObjId src;
        ObjId dst;
        std::string name;
    };

    FiniteCategory() = default;
    /// compose_table has morphisms^2 entries, entry [g * m + f] = g o f or kNoMorphism.
    FiniteCategory(std::vector<std::string> object_names, std::vector<Morphism> morphisms,
                   std::vector<MorId> identities, std::vector<MorId> compose_table);

    int object_count() const { return static_cast<int>(objects_.size()); }
    int morphism_count() const { return static_cast<int>(morphisms_.size()); }
    ObjId src(MorId m) const { return morphisms_.at(m).src; }
    ObjId dst(MorId m) const { return morphisms_.at(m).dst; }
    MorId identity(ObjId x) const { return identities_.at(x); }
    bool is_identity(MorId m) const { return identities_.at(src(m)) == m; }
    /// g o f; throws std::invalid_argument if dst(f) != src(g) or the entry is missing.
    MorId compose(MorId g, MorId f) const;
    /// g o f or kNoMorphism (no throwing).
    MorId compose_entry(MorId g, MorId f) const { return table_[static_cast<std::size_t>(g) * morphisms_.size() + f]; }
    /// Composite of a chain given first-to-last: chain[k-1] o ... o chain[0]; identity of x if empty.
    MorId compose_chain(const std::vector<MorId>& chain, ObjId x) const;
    const std::vector<MorId>& hom(ObjId x, ObjId y) const { return hom_[static_cast<std::size_t>(x) * objects_.size() + y]; }

    const std::string& object_name(ObjId x) const { return objects_.at(x); }
    const std::string& morphism_name(MorId m) const { return morphisms_.at(m).name; }
    std::optional<ObjId> find_object(const std::string& name) const;
    std::optional<MorId> find_morphism(const std::string& name) const;
    const std::vector<std::string>& object_names() const { return objects_; }
    const std::vector<Morphism>& morphisms() const { return morphisms_; }
    const std::vector<MorId>& identities() const { return identities_; }

    /// Same ids, names, identities and composition table.
    friend bool operator==(const FiniteCategory& a, const FiniteCategory& b);

private:
    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::vector<MorId> identities_;
    std::vector<MorId> table_;
    std::vector<std::vector<MorId>> hom_;
};

using CategoryPtr = std::shared_ptr<const FiniteCategory>;

ValidationReport validate_category(const FiniteCategory& C);

/// Builds a category from objects, morphisms and a composition callback
/// (evaluated on every composable pair).
CategoryPtr build_category(std::vector<std::string> object_names, std::vector<FiniteCategory::Morphism> morphisms,
                           std::vector<MorId> identities, const std::function<MorId(MorId, MorId)>& compose);

/// Functor between finite categories.
struct Functor {
    CategoryPtr source;
    CategoryPtr target;
    std::vector<ObjId> on_objects;
    std::vector<MorId> on_morphisms;

    ObjId obj(ObjId x) const { return on_objects.at(x); }
    MorId mor(MorId m) const { return on_morphisms.at(m); }
};

ValidationReport validate_functor(const Functor& F);
Functor identity_functor(const CategoryPtr& C);
/// g o f.
Functor compose_functors(const Functor& g, const Functor& f);
bool same_maps(const Functor& a, const Functor& b);

/// Functor D -> Cat with finite fibers.
struct FunctorToCat {
    CategoryPtr base;
    std::vector<CategoryPtr> fibers;  // per base object
    std::vector<Functor> action;      // per base morphism

    const FiniteCategory& fiber(ObjId d) const { return *fibers.at(d); }
    const Functor& act(MorId a) const { return action.at(a); }
};

using FunctorToCatPtr = std::shared_ptr<const FunctorToCat>;

ValidationReport validate_functor_to_cat(const FunctorToCat& F);

/// Natural transformation between functors D -> Cat; components are functors.
struct NatTransToCat {
    FunctorToCatPtr source;
    FunctorToCatPtr target;
    std::vector<Functor> components;  // per base object
};

ValidationReport validate_nat_trans(const NatTransToCat& U);

/// Natural transformation between ordinary functors C -> D; components are morphisms.
struct NatTransFunctors {
    Functor source;
    Functor target;
    std::vector<MorId> components;  // per object of C
};

ValidationReport validate_nat_trans(const NatTransFunctors& U);

// ---------------------------------------------------------- constructions

/// Same ids; src/dst swapped; composition transposed.
CategoryPtr opposite(const FiniteCategory& C);

/// phi/d (under == false: objects (c, mu: phi c -> d)) or d\phi (under == true:
/// objects (c, mu: d -> phi c)), with the projection to the source of phi.
struct CommaCategory {
    CategoryPtr category;
    Functor projection;
    std::vector<MorId> arrow;  // mu of each object
    ObjId anchor = 0;          // d
    bool under = false;

    std::optional<ObjId> find(ObjId c, MorId mu) const;
};

CommaCategory comma_over(const Functor& phi, ObjId d);
CommaCategory comma_under(ObjId d, const Functor& phi);

/// The functor phi/- : D -> Cat (or -\phi : D^op -> Cat) with its comma categories.
struct CommaFamily {
    Functor phi;
    bool under = false;
    std::vector<CommaCategory> commas;  // per object of D
    FunctorToCatPtr functor;            // base D (over) or D^op (under)
};

CommaFamily comma_over_family(const Functor& phi);
CommaFamily comma_under_family(const Functor& phi);

/// U: phi/- -> id/- sending (c, mu) to (phi c, mu).
NatTransToCat comma_comparison(const CommaFamily& phi_family, const CommaFamily& id_family);

/// Category of factorizations with its functors S (to C^op) and T (to C).
struct FactorizationCategory {
    CategoryPtr base;
    CategoryPtr base_opposite;
    CategoryPtr category;
    Functor S;
    Functor T;
    std::vector<std::tuple<MorId, MorId, MorId>> triples;  // (u, alpha, v) per morphism
    std::map<std::tuple<MorId, MorId, MorId>, MorId> index;

    /// The morphism (u, v): alpha -> u alpha v.
    MorId morphism(MorId u, MorId alpha, MorId v) const;
};

FactorizationCategory factorization_category(const CategoryPtr& C);

/// The induced functor F(phi) between factorization categories.
Functor factorization_functor(const Functor& phi, const FactorizationCategory& FC, const FactorizationCategory& FD);

/// Grothendieck construction with projection pi.
struct GrothendieckConstruction {
    FunctorToCatPtr diagram;
    CategoryPtr category;
    Functor projection;
    std::vector<std::pair<ObjId, ObjId>> objects;    // (d, x)
    std::vector<std::pair<MorId, MorId>> morphisms;  // (alpha, gamma)

    std::optional<ObjId> find_object(ObjId d, ObjId x) const;
    MorId find_morphism(ObjId source, MorId alpha, MorId gamma) const;

private:
    friend GrothendieckConstruction grothendieck(const FunctorToCatPtr& F);
    std::map<std::tuple<ObjId, MorId, MorId>, MorId> morphism_index_;
};

GrothendieckConstruction grothendieck(const FunctorToCatPtr& F);

/// zeta : pi/- -> F with zeta_d((d', x), mu) = F(mu)(x).
NatTransToCat zeta(const GrothendieckConstruction& G, const CommaFamily& pi_family);

// -------------------------------------------------------------- builders

/// Poset from element names and relation pairs (x <= y). The relation must be
/// reflexive-closed implicitly, antisymmetric and transitive; throws InputError.
CategoryPtr poset_category(const std::vector<std::string>& elements,
                           const std::vector<std::pair<int, int>>& less_equal);
/// One-object category of a group from its multiplication table table[a][b] = a*b;
/// throws InputError when the table is not a group.
CategoryPtr group_category(const std::vector<std::string>& elements, const std::vector<std::vector<int>>& table);
CategoryPtr cyclic_group_category(int n);
CategoryPtr chain_category(int n);  // [n]
CategoryPtr discrete_category(int k);
CategoryPtr indiscrete_category(int k);
CategoryPtr terminal_category();

/// Finite group acting on a finite category by automorphisms.
struct EquivariantAction {
    CategoryPtr group;             // one-object group category
    CategoryPtr space;             // the category acted on
    std::vector<Functor> action;   // per group element (morphism of group)

    /// The corresponding functor from the group category to Cat.
    FunctorToCatPtr as_diagram() const;
};

ValidationReport validate_action(const EquivariantAction& A);

/// Isomorphism search (small categories only): returns an isomorphism functor if one exists.
std::optional<Functor> find_isomorphism(const CategoryPtr& a, const CategoryPtr& b);

}  // namespace catcoh
