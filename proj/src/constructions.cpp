#include <algorithm>
#include <map>
#include <set>

#include "catcoh/category.hpp"

namespace catcoh {

namespace {

std::string id_name(const std::string& object) { return "id_" + object; }

// Builds a category whose morphisms are identified by (source object, target object, key).
struct KeyedBuilder {
    std::vector<std::string> objects;
    std::vector<FiniteCategory::Morphism> morphisms;
    std::map<std::tuple<int, int, int>, MorId> index;
    std::vector<int> keys;

    MorId add(int s, int t, int key, std::string name) {
        MorId id = static_cast<MorId>(morphisms.size());
        morphisms.push_back({s, t, std::move(name)});
        keys.push_back(key);
        index.emplace(std::make_tuple(s, t, key), id);
        return id;
    }
    MorId find(int s, int t, int key) const {
        auto it = index.find({s, t, key});
        if (it == index.end()) throw std::logic_error("keyed builder: missing morphism");
        return it->second;
    }
};

}  // namespace

CategoryPtr opposite(const FiniteCategory& C) {
    std::vector<FiniteCategory::Morphism> mors;
    for (const auto& m : C.morphisms()) mors.push_back({m.dst, m.src, m.name});
    const int m = C.morphism_count();
    std::vector<MorId> table(static_cast<std::size_t>(m) * m, kNoMorphism);
    for (MorId g = 0; g < m; ++g)
        for (MorId f = 0; f < m; ++f) table[static_cast<std::size_t>(g) * m + f] = C.compose_entry(f, g);
    return std::make_shared<const FiniteCategory>(C.object_names(), std::move(mors), C.identities(), std::move(table));
}

// ------------------------------------------------------------------ commas

std::optional<ObjId> CommaCategory::find(ObjId c, MorId mu) const {
    for (ObjId x = 0; x < category->object_count(); ++x)
        if (projection.obj(x) == c && arrow[x] == mu) return x;
    return std::nullopt;
}

namespace {

CommaCategory make_comma(const Functor& phi, ObjId d, bool under) {
    const auto& C = *phi.source;
    const auto& D = *phi.target;
    if (d < 0 || d >= D.object_count()) throw InputError("comma: unknown object id " + std::to_string(d));
    CommaCategory out;
    out.anchor = d;
    out.under = under;
    std::vector<ObjId> base_obj;
    KeyedBuilder b;
    for (ObjId c = 0; c < C.object_count(); ++c) {
        const auto& arrows = under ? D.hom(d, phi.obj(c)) : D.hom(phi.obj(c), d);
        for (MorId mu : arrows) {
            b.objects.push_back("(" + C.object_name(c) + "," + D.morphism_name(mu) + ")");
            base_obj.push_back(c);
            out.arrow.push_back(mu);
        }
    }
    const int k = static_cast<int>(b.objects.size());
    std::vector<MorId> base_mor;
    for (int s = 0; s < k; ++s)
        for (int t = 0; t < k; ++t)
            for (MorId g : C.hom(base_obj[s], base_obj[t])) {
                bool ok = under ? D.compose(phi.mor(g), out.arrow[s]) == out.arrow[t]
                                : D.compose(out.arrow[t], phi.mor(g)) == out.arrow[s];
                if (!ok) continue;
                b.add(s, t, g, C.morphism_name(g) + ":" + b.objects[s] + "->" + b.objects[t]);
                base_mor.push_back(g);
            }
    std::vector<MorId> ids;
    for (int s = 0; s < k; ++s) ids.push_back(b.find(s, s, C.identity(base_obj[s])));
    auto mors = b.morphisms;
    auto compose = [&](MorId g, MorId f) {
        return b.find(mors[f].src, mors[g].dst, C.compose(base_mor[g], base_mor[f]));
    };
    out.category = build_category(b.objects, mors, ids, compose);
    out.projection = Functor{out.category, phi.source, base_obj, base_mor};
    return out;
}

}  // namespace

CommaCategory comma_over(const Functor& phi, ObjId d) { return make_comma(phi, d, false); }
CommaCategory comma_under(ObjId d, const Functor& phi) { return make_comma(phi, d, true); }

namespace {

// Functor between comma categories induced by changing the arrow mu -> new_arrow(mu).
Functor comma_transport(const CommaCategory& from, const CommaCategory& to, const std::function<MorId(MorId)>& new_arrow) {
    Functor F{from.category, to.category, {}, {}};
    for (ObjId x = 0; x < from.category->object_count(); ++x) {
        auto y = to.find(from.projection.obj(x), new_arrow(from.arrow[x]));
        if (!y) throw std::logic_error("comma transport: target object missing");
        F.on_objects.push_back(*y);
    }
    for (MorId m = 0; m < from.category->morphism_count(); ++m) {
        ObjId s = F.obj(from.category->src(m)), t = F.obj(from.category->dst(m));
        MorId g = from.projection.mor(m);
        MorId found = kNoMorphism;
        for (MorId cand : to.category->hom(s, t))
            if (to.projection.mor(cand) == g) found = cand;
        if (found == kNoMorphism) throw std::logic_error("comma transport: target morphism missing");
        F.on_morphisms.push_back(found);
    }
    return F;
}

}  // namespace

CommaFamily comma_over_family(const Functor& phi) {
    CommaFamily fam;
    fam.phi = phi;
    fam.under = false;
    const auto& D = *phi.target;
    auto F = std::make_shared<FunctorToCat>();
    F->base = phi.target;
    for (ObjId d = 0; d < D.object_count(); ++d) {
        fam.commas.push_back(comma_over(phi, d));
        F->fibers.push_back(fam.commas.back().category);
    }
    for (MorId a = 0; a < D.morphism_count(); ++a)
        F->action.push_back(comma_transport(fam.commas[D.src(a)], fam.commas[D.dst(a)],
                                            [&](MorId mu) { return D.compose(a, mu); }));
    fam.functor = F;
    return fam;
}

CommaFamily comma_under_family(const Functor& phi) {
    CommaFamily fam;
    fam.phi = phi;
    fam.under = true;
    const auto& D = *phi.target;
    auto F = std::make_shared<FunctorToCat>();
    F->base = opposite(D);
    for (ObjId d = 0; d < D.object_count(); ++d) {
        fam.commas.push_back(comma_under(d, phi));
        F->fibers.push_back(fam.commas.back().category);
    }
    // a : d -> d' in D is d' -> d in D^op and acts d'\phi -> d\phi by mu |-> mu o a.
    for (MorId a = 0; a < D.morphism_count(); ++a)
        F->action.push_back(comma_transport(fam.commas[D.dst(a)], fam.commas[D.src(a)],
                                            [&](MorId mu) { return D.compose(mu, a); }));
    fam.functor = F;
    return fam;
}

NatTransToCat comma_comparison(const CommaFamily& phi_family, const CommaFamily& id_family) {
    if (phi_family.under || id_family.under) throw std::invalid_argument("comma_comparison expects over-families");
    NatTransToCat U{phi_family.functor, id_family.functor, {}};
    const auto& phi = phi_family.phi;
    for (std::size_t d = 0; d < phi_family.commas.size(); ++d) {
        const auto& from = phi_family.commas[d];
        const auto& to = id_family.commas[d];
        Functor Ud{from.category, to.category, {}, {}};
        for (ObjId x = 0; x < from.category->object_count(); ++x) {
            auto y = to.find(phi.obj(from.projection.obj(x)), from.arrow[x]);
            if (!y) throw std::logic_error("comma comparison: object missing");
            Ud.on_objects.push_back(*y);
        }
        for (MorId m = 0; m < from.category->morphism_count(); ++m) {
            ObjId s = Ud.obj(from.category->src(m)), t = Ud.obj(from.category->dst(m));
            MorId g = phi.mor(from.projection.mor(m));
            MorId found = kNoMorphism;
            for (MorId cand : to.category->hom(s, t))
                if (to.projection.mor(cand) == g) found = cand;
            if (found == kNoMorphism) throw std::logic_error("comma comparison: morphism missing");
            Ud.on_morphisms.push_back(found);
        }
        U.components.push_back(std::move(Ud));
    }
    return U;
}

// ----------------------------------------------------------- factorizations

MorId FactorizationCategory::morphism(MorId u, MorId alpha, MorId v) const {
    auto it = index.find({u, alpha, v});
    if (it == index.end()) throw std::invalid_argument("factorization: (u, alpha, v) not composable");
    return it->second;
}

FactorizationCategory factorization_category(const CategoryPtr& Cp) {
    const auto& C = *Cp;
    FactorizationCategory out;
    out.base = Cp;
    out.base_opposite = opposite(C);
    std::vector<std::string> objects;
    for (MorId a = 0; a < C.morphism_count(); ++a) objects.push_back(C.morphism_name(a));
    std::vector<FiniteCategory::Morphism> mors;
    for (MorId a = 0; a < C.morphism_count(); ++a)
        for (MorId u = 0; u < C.morphism_count(); ++u) {
            if (C.src(u) != C.dst(a)) continue;
            for (MorId v = 0; v < C.morphism_count(); ++v) {
                if (C.dst(v) != C.src(a)) continue;
                MorId target = C.compose(C.compose(u, a), v);
                out.index.emplace(std::make_tuple(u, a, v), static_cast<MorId>(mors.size()));
                out.triples.emplace_back(u, a, v);
                mors.push_back({a, target, "(" + C.morphism_name(u) + "," + C.morphism_name(a) + "," + C.morphism_name(v) + ")"});
            }
        }
    std::vector<MorId> ids;
    for (MorId a = 0; a < C.morphism_count(); ++a) ids.push_back(out.morphism(C.identity(C.dst(a)), a, C.identity(C.src(a))));
    const auto& triples = out.triples;
    const auto& index = out.index;
    auto compose = [&](MorId g, MorId f) {
        auto [u, a, v] = triples[f];
        auto [u2, a2, v2] = triples[g];
        (void)a2;
        return index.at({C.compose(u2, u), a, C.compose(v, v2)});
    };
    out.category = build_category(objects, mors, ids, compose);
    out.S = Functor{out.category, out.base_opposite, {}, {}};
    out.T = Functor{out.category, Cp, {}, {}};
    for (MorId a = 0; a < C.morphism_count(); ++a) {
        out.S.on_objects.push_back(C.src(a));
        out.T.on_objects.push_back(C.dst(a));
    }
    for (const auto& [u, a, v] : out.triples) {
        out.S.on_morphisms.push_back(v);
        out.T.on_morphisms.push_back(u);
    }
    return out;
}

Functor factorization_functor(const Functor& phi, const FactorizationCategory& FC, const FactorizationCategory& FD) {
    Functor F{FC.category, FD.category, {}, {}};
    for (MorId a = 0; a < FC.base->morphism_count(); ++a) F.on_objects.push_back(phi.mor(a));
    for (const auto& [u, a, v] : FC.triples) F.on_morphisms.push_back(FD.morphism(phi.mor(u), phi.mor(a), phi.mor(v)));
    return F;
}

// ------------------------------------------------------------- Grothendieck

std::optional<ObjId> GrothendieckConstruction::find_object(ObjId d, ObjId x) const {
    for (ObjId i = 0; i < static_cast<ObjId>(objects.size()); ++i)
        if (objects[i].first == d && objects[i].second == x) return i;
    return std::nullopt;
}

MorId GrothendieckConstruction::find_morphism(ObjId source, MorId alpha, MorId gamma) const {
    auto it = morphism_index_.find({source, alpha, gamma});
    if (it == morphism_index_.end()) throw std::invalid_argument("grothendieck: no such morphism");
    return it->second;
}

GrothendieckConstruction grothendieck(const FunctorToCatPtr& Fp) {
    const auto& F = *Fp;
    const auto& D = *F.base;
    auto report = validate_functor_to_cat(F);
    if (!report.ok()) throw InputError("grothendieck: invalid functor to Cat:\n" + report.summary());
    GrothendieckConstruction G;
    G.diagram = Fp;
    std::vector<std::string> names;
    for (ObjId d = 0; d < D.object_count(); ++d)
        for (ObjId x = 0; x < F.fiber(d).object_count(); ++x) {
            G.objects.emplace_back(d, x);
            names.push_back("(" + D.object_name(d) + "," + F.fiber(d).object_name(x) + ")");
        }
    std::map<std::pair<ObjId, ObjId>, ObjId> obj_index;
    for (ObjId i = 0; i < static_cast<ObjId>(G.objects.size()); ++i) obj_index[G.objects[i]] = i;
    std::vector<FiniteCategory::Morphism> mors;
    for (ObjId s = 0; s < static_cast<ObjId>(G.objects.size()); ++s) {
        auto [d, x] = G.objects[s];
        for (MorId a = 0; a < D.morphism_count(); ++a) {
            if (D.src(a) != d) continue;
            ObjId d2 = D.dst(a);
            ObjId y = F.act(a).obj(x);
            const auto& fib = F.fiber(d2);
            for (MorId g = 0; g < fib.morphism_count(); ++g) {
                if (fib.src(g) != y) continue;
                ObjId t = obj_index.at({d2, fib.dst(g)});
                G.morphism_index_.emplace(std::make_tuple(s, a, g), static_cast<MorId>(mors.size()));
                G.morphisms.emplace_back(a, g);
                mors.push_back({s, t, "(" + D.morphism_name(a) + "," + fib.morphism_name(g) + ")@" + names[s]});
            }
        }
    }
    std::vector<MorId> ids;
    for (ObjId s = 0; s < static_cast<ObjId>(G.objects.size()); ++s) {
        auto [d, x] = G.objects[s];
        ids.push_back(G.morphism_index_.at({s, D.identity(d), F.fiber(d).identity(x)}));
    }
    auto compose = [&](MorId g, MorId f) {
        auto [a, c] = G.morphisms[f];
        auto [a2, c2] = G.morphisms[g];
        MorId gamma = F.fiber(D.dst(a2)).compose(c2, F.act(a2).mor(c));
        return G.morphism_index_.at({mors[f].src, D.compose(a2, a), gamma});
    };
    G.category = build_category(names, mors, ids, compose);
    G.projection = Functor{G.category, F.base, {}, {}};
    for (const auto& [d, x] : G.objects) G.projection.on_objects.push_back(d);
    for (const auto& [a, g] : G.morphisms) G.projection.on_morphisms.push_back(a);
    return G;
}

NatTransToCat zeta(const GrothendieckConstruction& G, const CommaFamily& pi_family) {
    const auto& F = *G.diagram;
    NatTransToCat Z{pi_family.functor, G.diagram, {}};
    for (std::size_t d = 0; d < pi_family.commas.size(); ++d) {
        const auto& comma = pi_family.commas[d];
        Functor z{comma.category, F.fibers[d], {}, {}};
        for (ObjId o = 0; o < comma.category->object_count(); ++o) {
            auto [d1, x] = G.objects[comma.projection.obj(o)];
            (void)d1;
            z.on_objects.push_back(F.act(comma.arrow[o]).obj(x));
        }
        for (MorId m = 0; m < comma.category->morphism_count(); ++m) {
            ObjId t = comma.category->dst(m);
            MorId gamma = G.morphisms[comma.projection.mor(m)].second;
            z.on_morphisms.push_back(F.act(comma.arrow[t]).mor(gamma));
        }
        Z.components.push_back(std::move(z));
    }
    return Z;
}

// ----------------------------------------------------------------- builders

CategoryPtr poset_category(const std::vector<std::string>& elements, const std::vector<std::pair<int, int>>& less_equal) {
    const int k = static_cast<int>(elements.size());
    std::set<std::pair<int, int>> rel;
    for (auto [x, y] : less_equal) {
        if (x < 0 || x >= k || y < 0 || y >= k) throw InputError("poset: element index out of range");
        rel.insert({x, y});
    }
    for (int x = 0; x < k; ++x) rel.insert({x, x});
    for (auto [x, y] : rel)
        if (x != y && rel.count({y, x}))
            throw InputError("poset: not antisymmetric (" + elements[x] + " <= " + elements[y] + " and back)");
    for (auto [x, y] : rel)
        for (int z = 0; z < k; ++z)
            if (rel.count({y, z}) && !rel.count({x, z}))
                throw InputError("poset: non-transitive order (" + elements[x] + " <= " + elements[y] + " <= " +
                                 elements[z] + " but not " + elements[x] + " <= " + elements[z] + ")");
    KeyedBuilder b;
    b.objects = elements;
    for (int x = 0; x < k; ++x) b.add(x, x, 0, id_name(elements[x]));
    for (auto [x, y] : rel)
        if (x != y) b.add(x, y, 0, elements[x] + "<" + elements[y]);
    std::vector<MorId> ids;
    for (int x = 0; x < k; ++x) ids.push_back(x);
    auto mors = b.morphisms;
    return build_category(elements, mors, ids, [&](MorId g, MorId f) { return b.find(mors[f].src, mors[g].dst, 0); });
}

CategoryPtr group_category(const std::vector<std::string>& elements, const std::vector<std::vector<int>>& table) {
    const int k = static_cast<int>(elements.size());
    if (k == 0) throw InputError("group: empty element list");
    if (static_cast<int>(table.size()) != k) throw InputError("group: table has wrong number of rows");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != k) throw InputError("group: table row has wrong length");
        for (int v : row)
            if (v < 0 || v >= k) throw InputError("group: table entry out of range");
    }
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw InputError("group: non-associative table at (" + elements[a] + ", " + elements[b] + ", " +
                                     elements[c] + ")");
    int e = -1;
    for (int x = 0; x < k && e < 0; ++x) {
        bool unit = true;
        for (int a = 0; a < k; ++a)
            if (table[x][a] != a || table[a][x] != a) unit = false;
        if (unit) e = x;
    }
    if (e < 0) throw InputError("group: no identity element");
    for (int a = 0; a < k; ++a) {
        bool has_inverse = false;
        for (int b = 0; b < k; ++b)
            if (table[a][b] == e && table[b][a] == e) has_inverse = true;
        if (!has_inverse) throw InputError("group: element " + elements[a] + " has no inverse");
    }
    std::vector<FiniteCategory::Morphism> mors;
    for (int a = 0; a < k; ++a) mors.push_back({0, 0, elements[a]});
    return build_category({"*"}, mors, {e}, [&](MorId g, MorId f) { return table[g][f]; });
}

CategoryPtr cyclic_group_category(int n) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(i == 0 ? "e" : (n == 2 ? "s" : "g" + std::to_string(i)));
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    return group_category(names, table);
}

CategoryPtr chain_category(int n) {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i <= n; ++i) names.push_back(std::to_string(i));
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) rel.emplace_back(i, j);
    return poset_category(names, rel);
}

CategoryPtr discrete_category(int k) {
    std::vector<std::string> names;
    for (int i = 0; i < k; ++i) names.push_back("x" + std::to_string(i));
    return poset_category(names, {});
}

CategoryPtr indiscrete_category(int k) {
    std::vector<std::string> names;
    KeyedBuilder b;
    for (int i = 0; i < k; ++i) names.push_back("x" + std::to_string(i));
    b.objects = names;
    for (int i = 0; i < k; ++i) b.add(i, i, 0, id_name(names[i]));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j) b.add(i, j, 0, names[i] + ">" + names[j]);
    std::vector<MorId> ids;
    for (int i = 0; i < k; ++i) ids.push_back(i);
    auto mors = b.morphisms;
    return build_category(names, mors, ids, [&](MorId g, MorId f) { return b.find(mors[f].src, mors[g].dst, 0); });
}

CategoryPtr terminal_category() { return build_category({"*"}, {{0, 0, "id"}}, {0}, [](MorId, MorId) { return 0; }); }

FunctorToCatPtr EquivariantAction::as_diagram() const {
    auto F = std::make_shared<FunctorToCat>();
    F->base = group;
    F->fibers = {space};
    F->action = action;
    return F;
}

ValidationReport validate_action(const EquivariantAction& A) {
    ValidationReport report;
    const auto& G = *A.group;
    if (G.object_count() != 1) report.add("acting category has more than one object");
    for (MorId g = 0; g < G.morphism_count(); ++g) {
        bool invertible = false;
        for (MorId h = 0; h < G.morphism_count(); ++h)
            if (G.compose(g, h) == G.identity(0) && G.compose(h, g) == G.identity(0)) invertible = true;
        if (!invertible) report.add("element " + G.morphism_name(g) + " has no inverse");
    }
    if (!report.ok()) return report;
    report.merge(validate_functor_to_cat(*A.as_diagram()));
    return report;
}

}  // namespace catcoh
