#include "catcoh/simplicial.hpp"

namespace catcoh {

namespace {

std::string show(const Simplex& x) {
    std::string s = "[";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s + "]";
}

}  // namespace

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    if (f.target != g.source) throw std::invalid_argument("simplicial maps not composable");
    auto gf = g.fn;
    auto ff = f.fn;
    return {f.source, g.target, [gf, ff](int n, const Simplex& x) { return gf(n, ff(n, x)); }};
}

ValidationReport check_simplicial(const SimplicialMap& f, int bound) {
    ValidationReport report;
    const auto& X = *f.source;
    const auto& Y = *f.target;
    for (int n = 0; n <= bound; ++n) {
        const auto& t = X.simplices(n);
        for (std::size_t k = 0; k < t.size(); ++k) {
            Simplex x = t.at(k);
            Simplex y = f(n, x);
            if (!Y.simplices(n).find(y)) {
                report.add("image of " + show(x) + " in degree " + std::to_string(n) + " is not a simplex");
                continue;
            }
            for (int i = 0; i <= n && n >= 1; ++i)
                if (f(n - 1, X.face(n, i, x)) != Y.face(n, i, y))
                    report.add("d_" + std::to_string(i) + " not preserved at " + show(x));
            if (n + 1 <= bound)
                for (int i = 0; i <= n; ++i)
                    if (f(n + 1, X.degeneracy(n, i, x)) != Y.degeneracy(n, i, y))
                        report.add("s_" + std::to_string(i) + " not preserved at " + show(x));
        }
    }
    return report;
}

ValidationReport check_bisimplicial(const BisimplicialMap& f, int bound) {
    ValidationReport report;
    const auto& X = *f.source;
    const auto& Y = *f.target;
    for (int p = 0; p <= bound; ++p)
        for (int q = 0; p + q <= bound; ++q) {
            const auto& t = X.simplices(p, q);
            for (std::size_t k = 0; k < t.size(); ++k) {
                Simplex x = t.at(k);
                Simplex y = f(p, q, x);
                const std::string at = " at " + show(x) + " (" + std::to_string(p) + "," + std::to_string(q) + ")";
                if (!Y.simplices(p, q).find(y)) {
                    report.add("image is not a simplex" + at);
                    continue;
                }
                for (int i = 0; i <= p && p >= 1; ++i)
                    if (f(p - 1, q, X.hface(p, q, i, x)) != Y.hface(p, q, i, y))
                        report.add("horizontal d_" + std::to_string(i) + " not preserved" + at);
                for (int i = 0; i <= q && q >= 1; ++i)
                    if (f(p, q - 1, X.vface(p, q, i, x)) != Y.vface(p, q, i, y))
                        report.add("vertical d_" + std::to_string(i) + " not preserved" + at);
                if (p + q + 1 > bound) continue;
                for (int i = 0; i <= p; ++i)
                    if (f(p + 1, q, X.hdegeneracy(p, q, i, x)) != Y.hdegeneracy(p, q, i, y))
                        report.add("horizontal s_" + std::to_string(i) + " not preserved" + at);
                for (int i = 0; i <= q; ++i)
                    if (f(p, q + 1, X.vdegeneracy(p, q, i, x)) != Y.vdegeneracy(p, q, i, y))
                        report.add("vertical s_" + std::to_string(i) + " not preserved" + at);
            }
        }
    return report;
}

SimplicialMap diagonal_map(const BisimplicialMap& f, const DiagonalPtr& source, const DiagonalPtr& target) {
    if (source->bisimplicial() != f.source || target->bisimplicial() != f.target)
        throw std::invalid_argument("diagonal_map: diagonals do not match the bisimplicial map");
    auto fn = f.fn;
    return {source, target, [fn](int n, const Simplex& x) { return fn(n, n, x); }};
}

SimplicialMap nerve_map(const Functor& phi, const NervePtr& source, const NervePtr& target) {
    if (source->category() != phi.source || target->category() != phi.target)
        throw std::invalid_argument("nerve_map: nerves do not match the functor");
    return {source, target, [phi](int n, const Simplex& x) { return functor_on_simplex(phi, n, x); }};
}

CommaHocolim comma_hocolim(const Functor& phi, bool under, const NervePtr& category_nerve, SimplexCap cap) {
    CommaHocolim H;
    H.family = under ? comma_under_family(phi) : comma_over_family(phi);
    H.category_nerve = category_nerve ? category_nerve : std::make_shared<Nerve>(phi.source, cap);
    if (H.category_nerve->category() != phi.source) throw std::invalid_argument("comma_hocolim: nerve of the wrong category");
    H.replacement = std::make_shared<SimplicialReplacement>(H.family.functor, cap);
    H.hocolim = std::make_shared<Diagonal>(H.replacement);
    return H;
}

SimplicialMap kappa(const CommaHocolim& H) {
    auto X = H.replacement;
    auto family = std::make_shared<CommaFamily>(H.family);
    return {H.hocolim, H.category_nerve, [X, family](int n, const Simplex& x) {
                ObjId d0 = X->anchor(n, x);
                return functor_on_simplex(family->commas[d0].projection, n, X->tau(n, x));
            }};
}

BisimplicialMap kappa_bisimplicial(const CommaHocolim& H, const HorizontallyConstantPtr& target) {
    if (target->fiber() != H.category_nerve) throw std::invalid_argument("kappa_bisimplicial: target is not (N C)_b");
    auto X = H.replacement;
    auto family = std::make_shared<CommaFamily>(H.family);
    return {X, target, [X, family](int p, int q, const Simplex& x) {
                ObjId d0 = X->anchor(p, x);
                return functor_on_simplex(family->commas[d0].projection, q, X->tau(p, x));
            }};
}

SimplicialMap j_map(const CommaHocolim& H, ObjId d) {
    if (d < 0 || d >= static_cast<ObjId>(H.family.commas.size())) throw InputError("j_d: unknown object id " + std::to_string(d));
    Functor proj = H.family.commas[d].projection;
    return {H.replacement->fiber_nerve(d), H.category_nerve,
            [proj](int n, const Simplex& x) { return functor_on_simplex(proj, n, x); }};
}

SimplicialMap i_map(const ReplacementPtr& X, const DiagonalPtr& hocolim, ObjId d) {
    if (hocolim->bisimplicial() != X) throw std::invalid_argument("i_d: hocolim is not the diagonal of X");
    const auto& D = *X->diagram()->base;
    if (d < 0 || d >= D.object_count()) throw InputError("i_d: unknown object id " + std::to_string(d));
    MorId id = D.identity(d);
    return {X->fiber_nerve(d), hocolim, [d, id](int n, const Simplex& tau) {
                Simplex sigma = n == 0 ? Simplex{d} : Simplex(n, id);
                return SimplicialReplacement::join(sigma, tau);
            }};
}

BisimplicialMap nat_trans_bimap(const NatTransToCat& U, const ReplacementPtr& source, const ReplacementPtr& target) {
    auto report = validate_nat_trans(U);
    if (!report.ok()) throw InputError("not a natural transformation:\n" + report.summary());
    if (source->diagram() != U.source || target->diagram() != U.target)
        throw std::invalid_argument("nat_trans_bimap: replacements do not match the transformation");
    auto comps = std::make_shared<std::vector<Functor>>(U.components);
    auto X = source;
    return {source, target, [X, comps](int p, int q, const Simplex& x) {
                ObjId d0 = X->anchor(p, x);
                return SimplicialReplacement::join(X->sigma(p, x), functor_on_simplex((*comps)[d0], q, X->tau(p, x)));
            }};
}

GrothendieckHocolim grothendieck_hocolim(const FunctorToCatPtr& F, SimplexCap cap) {
    GrothendieckHocolim G;
    G.construction = grothendieck(F);
    auto total = std::make_shared<Nerve>(G.construction.category, cap);
    G.commas = comma_hocolim(G.construction.projection, false, total, cap);
    G.constant = std::make_shared<HorizontallyConstant>(total);
    return G;
}

BisimplicialMap lambda2_prime(const GrothendieckHocolim& G) { return kappa_bisimplicial(G.commas, G.constant); }

SimplicialMap lambda2(const GrothendieckHocolim& G) { return kappa(G.commas); }

}  // namespace catcoh
