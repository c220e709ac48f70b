#include "catcoh/fixtures.hpp"

#include <stdexcept>

namespace catcoh::fixtures {

namespace {

struct Registry {
    std::map<std::string, CategoryPtr> categories;
    std::map<std::string, Functor> functors;
    std::map<std::string, FunctorToCatPtr> diagrams;
    std::vector<std::string> category_order, functor_order, diagram_order;
};

FunctorToCatPtr make_diagram(CategoryPtr base, std::vector<CategoryPtr> fibers, std::vector<Functor> action) {
    auto F = std::make_shared<FunctorToCat>();
    F->base = std::move(base);
    F->fibers = std::move(fibers);
    F->action = std::move(action);
    auto report = validate_functor_to_cat(*F);
    if (!report.ok()) throw std::logic_error("fixture diagram is invalid:\n" + report.summary());
    return F;
}

const Registry& registry() {
    static Registry r = [] {
        Registry r;
        auto add_cat = [&](const std::string& name, CategoryPtr C) {
            r.categories[name] = std::move(C);
            r.category_order.push_back(name);
        };
        add_cat("pt", terminal_category());
        add_cat("[1]", chain_category(1));
        add_cat("[2]", chain_category(2));
        add_cat("z2", cyclic_group_category(2));
        add_cat("z3", cyclic_group_category(3));
        const auto& C = r.categories;

        auto add_fun = [&](const std::string& name, Functor F) {
            auto report = validate_functor(F);
            if (!report.ok()) throw std::logic_error("fixture functor " + name + " is invalid");
            r.functors.emplace(name, std::move(F));
            r.functor_order.push_back(name);
        };
        add_fun("id-pt", identity_functor(C.at("pt")));
        add_fun("id-[1]", identity_functor(C.at("[1]")));
        add_fun("id-[2]", identity_functor(C.at("[2]")));
        add_fun("id-z2", identity_functor(C.at("z2")));
        add_fun("face0", thin_functor(C.at("[1]"), C.at("[2]"), {1, 2}));
        add_fun("face1", thin_functor(C.at("[1]"), C.at("[2]"), {0, 2}));
        add_fun("face2", thin_functor(C.at("[1]"), C.at("[2]"), {0, 1}));
        add_fun("pt-[1]@0", thin_functor(C.at("pt"), C.at("[1]"), {0}));
        add_fun("pt-[1]@1", thin_functor(C.at("pt"), C.at("[1]"), {1}));
        add_fun("pt-z2", functor_by_names(C.at("pt"), C.at("z2"), {{"*", "*"}}, {}));

        auto add_diag = [&](const std::string& name, FunctorToCatPtr F) {
            r.diagrams[name] = std::move(F);
            r.diagram_order.push_back(name);
        };
        {
            auto z2 = C.at("z2");
            auto pt = terminal_category();
            add_diag("z2-pt", make_diagram(z2, {pt}, {identity_functor(pt), identity_functor(pt)}));
            auto two = discrete_category(2);
            Functor swap = thin_functor(two, two, {1, 0});
            std::vector<Functor> action(z2->morphism_count(), identity_functor(two));
            action[*z2->find_morphism("s")] = swap;
            add_diag("z2-swap", make_diagram(z2, {two}, action));
        }
        {
            auto base = chain_category(1);
            auto ab = poset_category({"a", "b"}, {});
            auto xy = poset_category({"x", "y"}, {{0, 1}});
            std::vector<Functor> action(base->morphism_count());
            for (MorId m = 0; m < base->morphism_count(); ++m) {
                if (base->src(m) == 0 && base->dst(m) == 0) action[m] = identity_functor(ab);
                else if (base->src(m) == 1 && base->dst(m) == 1) action[m] = identity_functor(xy);
                else action[m] = thin_functor(ab, xy, {0, 1});
            }
            add_diag("[1]-mixed", make_diagram(base, {ab, xy}, action));
        }
        {
            auto pt = terminal_category();
            auto fiber = chain_category(1);
            add_diag("pt-[1]", make_diagram(pt, {fiber}, {identity_functor(fiber)}));
        }
        return r;
    }();
    return r;
}

}  // namespace

Functor thin_functor(const CategoryPtr& source, const CategoryPtr& target, const std::vector<ObjId>& objects) {
    if (static_cast<int>(objects.size()) != source->object_count())
        throw std::invalid_argument("thin_functor: object map has the wrong size");
    Functor F{source, target, objects, {}};
    for (MorId m = 0; m < source->morphism_count(); ++m) {
        const auto& hom = target->hom(objects[source->src(m)], objects[source->dst(m)]);
        if (hom.size() != 1) throw std::invalid_argument("thin_functor: target hom set is not a singleton");
        F.on_morphisms.push_back(hom[0]);
    }
    return F;
}

Functor functor_by_names(const CategoryPtr& source, const CategoryPtr& target,
                         const std::vector<std::pair<std::string, std::string>>& objects,
                         const std::vector<std::pair<std::string, std::string>>& morphisms) {
    Functor F{source, target, std::vector<ObjId>(source->object_count(), -1),
              std::vector<MorId>(source->morphism_count(), kNoMorphism)};
    auto obj = [](const CategoryPtr& C, const std::string& n) {
        auto x = C->find_object(n);
        if (!x) throw std::invalid_argument("unknown object " + n);
        return *x;
    };
    auto mor = [](const CategoryPtr& C, const std::string& n) {
        auto x = C->find_morphism(n);
        if (!x) throw std::invalid_argument("unknown morphism " + n);
        return *x;
    };
    for (const auto& [a, b] : objects) F.on_objects[obj(source, a)] = obj(target, b);
    for (const auto& [a, b] : morphisms) F.on_morphisms[mor(source, a)] = mor(target, b);
    for (ObjId x = 0; x < source->object_count(); ++x) {
        if (F.on_objects[x] < 0) throw std::invalid_argument("functor_by_names: object " + source->object_name(x) + " unmapped");
        MorId id = source->identity(x);
        if (F.on_morphisms[id] == kNoMorphism) F.on_morphisms[id] = target->identity(F.on_objects[x]);
    }
    for (MorId m = 0; m < source->morphism_count(); ++m)
        if (F.on_morphisms[m] == kNoMorphism)
            throw std::invalid_argument("functor_by_names: morphism " + source->morphism_name(m) + " unmapped");
    return F;
}

std::vector<std::string> category_names() { return registry().category_order; }

CategoryPtr category(const std::string& name) {
    auto it = registry().categories.find(name);
    if (it == registry().categories.end()) throw InputError("unknown category fixture '" + name + "'");
    return it->second;
}

std::vector<std::string> functor_names() { return registry().functor_order; }

Functor functor(const std::string& name) {
    auto it = registry().functors.find(name);
    if (it == registry().functors.end()) throw InputError("unknown functor fixture '" + name + "'");
    return it->second;
}

std::vector<std::string> diagram_names() { return registry().diagram_order; }

FunctorToCatPtr diagram(const std::string& name) {
    auto it = registry().diagrams.find(name);
    if (it == registry().diagrams.end()) throw InputError("unknown diagram fixture '" + name + "'");
    return it->second;
}

Module husainov_module(const FactorizationCategory& FD) {
    const auto& D = *FD.base;
    if (D.object_count() != 2 || D.morphism_count() != 3)
        throw std::invalid_argument("husainov_module: base is not [1]");
    Module M{FD.category, Ring::integers(), {}, {}};
    for (MorId a = 0; a < D.morphism_count(); ++a) M.ranks.push_back(D.is_identity(a) ? 0 : 1);
    const auto& F = *FD.category;
    for (MorId m = 0; m < F.morphism_count(); ++m) {
        const int rows = M.ranks[F.dst(m)], cols = M.ranks[F.src(m)];
        M.maps.push_back(rows == 1 && cols == 1 ? Matrix::identity(1) : Matrix::zero(rows, cols));
    }
    return M;
}

HusainovData husainov() {
    HusainovData h;
    h.C = category("pt");
    h.D = category("[1]");
    h.phi = functor("pt-[1]@0");
    h.FC = std::make_shared<FactorizationCategory>(factorization_category(h.C));
    h.FD = std::make_shared<FactorizationCategory>(factorization_category(h.D));
    h.M = husainov_module(*h.FD);
    h.pulled = pullback_module(factorization_functor(h.phi, *h.FC, *h.FD), h.M);
    return h;
}

}  // namespace catcoh::fixtures
