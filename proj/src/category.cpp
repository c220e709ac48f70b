#include "catcoh/category.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace catcoh {

FiniteCategory::FiniteCategory(std::vector<std::string> object_names, std::vector<Morphism> morphisms,
                               std::vector<MorId> identities, std::vector<MorId> compose_table)
    : objects_(std::move(object_names)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)),
      table_(std::move(compose_table)) {
    const int k = object_count();
    const int m = morphism_count();
    if (static_cast<int>(identities_.size()) != k) throw std::invalid_argument("identity list size mismatch");
    if (table_.size() != static_cast<std::size_t>(m) * m) throw std::invalid_argument("composition table size mismatch");
    for (const auto& mor : morphisms_)
        if (mor.src < 0 || mor.src >= k || mor.dst < 0 || mor.dst >= k)
            throw std::invalid_argument("morphism '" + mor.name + "' has endpoint out of range");
    for (MorId id : identities_)
        if (id < 0 || id >= m) throw std::invalid_argument("identity id out of range");
    for (MorId c : table_)
        if (c < kNoMorphism || c >= m) throw std::invalid_argument("composition entry out of range");
    hom_.assign(static_cast<std::size_t>(k) * k, {});
    for (MorId f = 0; f < m; ++f) hom_[static_cast<std::size_t>(morphisms_[f].src) * k + morphisms_[f].dst].push_back(f);
}

MorId FiniteCategory::compose(MorId g, MorId f) const {
    if (dst(f) != src(g))
        throw std::invalid_argument("compose(" + morphism_name(g) + ", " + morphism_name(f) + "): not composable");
    MorId h = compose_entry(g, f);
    if (h == kNoMorphism)
        throw std::invalid_argument("compose(" + morphism_name(g) + ", " + morphism_name(f) + "): missing entry");
    return h;
}

MorId FiniteCategory::compose_chain(const std::vector<MorId>& chain, ObjId x) const {
    MorId acc = identity(x);
    for (MorId m : chain) acc = compose(m, acc);
    return acc;
}

std::optional<ObjId> FiniteCategory::find_object(const std::string& name) const {
    for (ObjId x = 0; x < object_count(); ++x)
        if (objects_[x] == name) return x;
    return std::nullopt;
}

std::optional<MorId> FiniteCategory::find_morphism(const std::string& name) const {
    for (MorId f = 0; f < morphism_count(); ++f)
        if (morphisms_[f].name == name) return f;
    return std::nullopt;
}

bool operator==(const FiniteCategory& a, const FiniteCategory& b) {
    if (a.objects_ != b.objects_ || a.identities_ != b.identities_ || a.table_ != b.table_) return false;
    if (a.morphisms_.size() != b.morphisms_.size()) return false;
    for (std::size_t i = 0; i < a.morphisms_.size(); ++i) {
        const auto &x = a.morphisms_[i], &y = b.morphisms_[i];
        if (x.src != y.src || x.dst != y.dst || x.name != y.name) return false;
    }
    return true;
}

ValidationReport validate_category(const FiniteCategory& C) {
    ValidationReport report;
    const int k = C.object_count();
    const int m = C.morphism_count();
    auto name = [&](MorId f) { return C.morphism_name(f) + "#" + std::to_string(f); };
    std::set<MorId> seen;
    for (ObjId x = 0; x < k; ++x) {
        MorId id = C.identity(x);
        if (C.src(id) != x || C.dst(id) != x)
            report.add("identity of object " + std::to_string(x) + " is " + name(id) + " which is not an endomorphism of it");
        if (!seen.insert(id).second) report.add("morphism " + name(id) + " is the identity of two objects");
    }
    for (MorId g = 0; g < m; ++g)
        for (MorId f = 0; f < m; ++f) {
            MorId h = C.compose_entry(g, f);
            bool composable = C.dst(f) == C.src(g);
            if (composable && h == kNoMorphism)
                report.add("missing composite for pair (" + name(g) + ", " + name(f) + ")");
            else if (!composable && h != kNoMorphism)
                report.add("composite defined for non-composable pair (" + name(g) + ", " + name(f) + ")");
            else if (composable && (C.src(h) != C.src(f) || C.dst(h) != C.dst(g)))
                report.add("composite " + name(g) + " o " + name(f) + " = " + name(h) + " has wrong endpoints");
        }
    for (MorId f = 0; f < m; ++f) {
        MorId left = C.compose_entry(C.identity(C.dst(f)), f);
        MorId right = C.compose_entry(f, C.identity(C.src(f)));
        if (left != f) report.add("identity law fails: id o " + name(f) + " != " + name(f));
        if (right != f) report.add("identity law fails: " + name(f) + " o id != " + name(f));
    }
    for (MorId f = 0; f < m; ++f)
        for (ObjId z = 0; z < k; ++z)
            for (MorId g : C.hom(C.dst(f), z))
                for (ObjId w = 0; w < k; ++w)
                    for (MorId h : C.hom(z, w)) {
                        MorId gf = C.compose_entry(g, f);
                        MorId hg = C.compose_entry(h, g);
                        MorId lhs = gf == kNoMorphism || C.dst(gf) != C.src(h) ? kNoMorphism : C.compose_entry(h, gf);
                        MorId rhs = hg == kNoMorphism || C.dst(f) != C.src(hg) ? kNoMorphism : C.compose_entry(hg, f);
                        if (lhs == kNoMorphism || lhs != rhs)
                            report.add("associativity violation on (" + name(h) + ", " + name(g) + ", " + name(f) + ")");
                    }
    return report;
}

CategoryPtr build_category(std::vector<std::string> object_names, std::vector<FiniteCategory::Morphism> morphisms,
                           std::vector<MorId> identities, const std::function<MorId(MorId, MorId)>& compose) {
    const std::size_t m = morphisms.size();
    std::vector<MorId> table(m * m, kNoMorphism);
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t f = 0; f < m; ++f)
            if (morphisms[f].dst == morphisms[g].src) table[g * m + f] = compose(static_cast<MorId>(g), static_cast<MorId>(f));
    return std::make_shared<const FiniteCategory>(std::move(object_names), std::move(morphisms), std::move(identities),
                                                  std::move(table));
}

// ---------------------------------------------------------------- functors

ValidationReport validate_functor(const Functor& F) {
    ValidationReport report;
    const auto& S = *F.source;
    const auto& T = *F.target;
    if (static_cast<int>(F.on_objects.size()) != S.object_count() ||
        static_cast<int>(F.on_morphisms.size()) != S.morphism_count()) {
        report.add("functor map sizes do not match the source category");
        return report;
    }
    for (ObjId x = 0; x < S.object_count(); ++x)
        if (F.obj(x) < 0 || F.obj(x) >= T.object_count()) report.add("object " + S.object_name(x) + " mapped out of range");
    for (MorId f = 0; f < S.morphism_count(); ++f)
        if (F.mor(f) < 0 || F.mor(f) >= T.morphism_count()) report.add("morphism " + S.morphism_name(f) + " mapped out of range");
    if (!report.ok()) return report;
    for (MorId f = 0; f < S.morphism_count(); ++f) {
        MorId g = F.mor(f);
        if (T.src(g) != F.obj(S.src(f)) || T.dst(g) != F.obj(S.dst(f)))
            report.add("morphism " + S.morphism_name(f) + " does not preserve endpoints");
    }
    for (ObjId x = 0; x < S.object_count(); ++x)
        if (F.mor(S.identity(x)) != T.identity(F.obj(x)))
            report.add("identity of " + S.object_name(x) + " not preserved");
    if (!report.ok()) return report;
    for (MorId g = 0; g < S.morphism_count(); ++g)
        for (MorId f = 0; f < S.morphism_count(); ++f) {
            if (S.dst(f) != S.src(g)) continue;
            if (F.mor(S.compose(g, f)) != T.compose(F.mor(g), F.mor(f)))
                report.add("composition not preserved on (" + S.morphism_name(g) + ", " + S.morphism_name(f) + ")");
        }
    return report;
}

Functor identity_functor(const CategoryPtr& C) {
    Functor F{C, C, {}, {}};
    F.on_objects.resize(C->object_count());
    F.on_morphisms.resize(C->morphism_count());
    std::iota(F.on_objects.begin(), F.on_objects.end(), 0);
    std::iota(F.on_morphisms.begin(), F.on_morphisms.end(), 0);
    return F;
}

Functor compose_functors(const Functor& g, const Functor& f) {
    if (f.target.get() != g.source.get() && !(*f.target == *g.source))
        throw std::invalid_argument("compose_functors: target/source mismatch");
    Functor out{f.source, g.target, {}, {}};
    for (ObjId x : f.on_objects) out.on_objects.push_back(g.obj(x));
    for (MorId m : f.on_morphisms) out.on_morphisms.push_back(g.mor(m));
    return out;
}

bool same_maps(const Functor& a, const Functor& b) {
    return a.on_objects == b.on_objects && a.on_morphisms == b.on_morphisms;
}

ValidationReport validate_functor_to_cat(const FunctorToCat& F) {
    ValidationReport report;
    const auto& D = *F.base;
    if (static_cast<int>(F.fibers.size()) != D.object_count() || static_cast<int>(F.action.size()) != D.morphism_count()) {
        report.add("functor-to-Cat sizes do not match the base");
        return report;
    }
    for (ObjId d = 0; d < D.object_count(); ++d)
        report.merge(validate_category(F.fiber(d)), "fiber " + D.object_name(d) + ": ");
    for (MorId a = 0; a < D.morphism_count(); ++a) {
        const Functor& Fa = F.act(a);
        if (Fa.source.get() != F.fibers[D.src(a)].get() || Fa.target.get() != F.fibers[D.dst(a)].get()) {
            if (!(*Fa.source == F.fiber(D.src(a))) || !(*Fa.target == F.fiber(D.dst(a)))) {
                report.add("action of " + D.morphism_name(a) + " does not map fiber(src) to fiber(dst)");
                continue;
            }
        }
        report.merge(validate_functor(Fa), "action of " + D.morphism_name(a) + ": ");
    }
    if (!report.ok()) return report;
    for (ObjId d = 0; d < D.object_count(); ++d)
        if (!same_maps(F.act(D.identity(d)), identity_functor(F.fibers[d])))
            report.add("action of identity of " + D.object_name(d) + " is not the identity functor");
    for (MorId b = 0; b < D.morphism_count(); ++b)
        for (MorId a = 0; a < D.morphism_count(); ++a) {
            if (D.dst(a) != D.src(b)) continue;
            if (!same_maps(F.act(D.compose(b, a)), compose_functors(F.act(b), F.act(a))))
                report.add("action does not preserve composition on (" + D.morphism_name(b) + ", " + D.morphism_name(a) + ")");
        }
    return report;
}

ValidationReport validate_nat_trans(const NatTransToCat& U) {
    ValidationReport report;
    const auto& D = *U.source->base;
    if (static_cast<int>(U.components.size()) != D.object_count()) {
        report.add("component count does not match base objects");
        return report;
    }
    for (ObjId d = 0; d < D.object_count(); ++d)
        report.merge(validate_functor(U.components[d]), "component at " + D.object_name(d) + ": ");
    if (!report.ok()) return report;
    for (MorId a = 0; a < D.morphism_count(); ++a) {
        Functor lhs = compose_functors(U.target->act(a), U.components[D.src(a)]);
        Functor rhs = compose_functors(U.components[D.dst(a)], U.source->act(a));
        if (!same_maps(lhs, rhs)) report.add("naturality square fails at " + D.morphism_name(a));
    }
    return report;
}

ValidationReport validate_nat_trans(const NatTransFunctors& U) {
    ValidationReport report;
    const auto& C = *U.source.source;
    const auto& D = *U.source.target;
    if (static_cast<int>(U.components.size()) != C.object_count()) {
        report.add("component count does not match source objects");
        return report;
    }
    for (ObjId x = 0; x < C.object_count(); ++x) {
        MorId c = U.components[x];
        if (D.src(c) != U.source.obj(x) || D.dst(c) != U.target.obj(x))
            report.add("component at " + C.object_name(x) + " has wrong endpoints");
    }
    if (!report.ok()) return report;
    for (MorId f = 0; f < C.morphism_count(); ++f) {
        MorId lhs = D.compose(U.target.mor(f), U.components[C.src(f)]);
        MorId rhs = D.compose(U.components[C.dst(f)], U.source.mor(f));
        if (lhs != rhs) report.add("naturality square fails at " + C.morphism_name(f));
    }
    return report;
}

// ------------------------------------------------------------ isomorphism

std::optional<Functor> find_isomorphism(const CategoryPtr& a, const CategoryPtr& b) {
    const int k = a->object_count(), m = a->morphism_count();
    if (k != b->object_count() || m != b->morphism_count()) return std::nullopt;
    std::vector<ObjId> omap(k, -1);
    std::vector<char> oused(k, 0);
    std::vector<MorId> mmap(m, -1);
    std::vector<char> mused(m, 0);

    std::function<bool(MorId)> assign_morphisms = [&](MorId f) -> bool {
        if (f == m) return true;
        const auto& targets = b->hom(omap[a->src(f)], omap[a->dst(f)]);
        for (MorId g : targets) {
            if (mused[g]) continue;
            if (a->is_identity(f) != b->is_identity(g)) continue;
            mmap[f] = g;
            bool ok = true;
            for (MorId x = 0; x <= f && ok; ++x)
                for (MorId y = 0; y <= f && ok; ++y) {
                    if (a->dst(y) != a->src(x)) continue;
                    MorId xy = a->compose(x, y);
                    if (xy <= f && mmap[xy] >= 0 && b->compose(mmap[x], mmap[y]) != mmap[xy]) ok = false;
                }
            if (ok) {
                mused[g] = 1;
                if (assign_morphisms(f + 1)) return true;
                mused[g] = 0;
            }
            mmap[f] = -1;
        }
        return false;
    };
    std::function<bool(ObjId)> assign_objects = [&](ObjId x) -> bool {
        if (x == k) {
            // Hom-set sizes must match before trying morphisms.
            for (ObjId s = 0; s < k; ++s)
                for (ObjId t = 0; t < k; ++t)
                    if (a->hom(s, t).size() != b->hom(omap[s], omap[t]).size()) return false;
            return assign_morphisms(0);
        }
        for (ObjId y = 0; y < k; ++y) {
            if (oused[y] || a->hom(x, x).size() != b->hom(y, y).size()) continue;
            omap[x] = y;
            oused[y] = 1;
            if (assign_objects(x + 1)) return true;
            oused[y] = 0;
        }
        return false;
    };
    if (!assign_objects(0)) return std::nullopt;
    return Functor{a, b, omap, mmap};
}

}  // namespace catcoh
