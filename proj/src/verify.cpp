#include "catcoh/verify.hpp"

#include <chrono>
#include <memory>

#include "catcoh/cohomology.hpp"
#include "catcoh/fixtures.hpp"
#include "catcoh/random_fixtures.hpp"

namespace catcoh {

namespace {

class Stopwatch {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string describe(const FiniteCategory& C) {
    return std::to_string(C.object_count()) + " objects, " + std::to_string(C.morphism_count()) + " morphisms";
}

std::string describe(const Functor& phi) {
    std::string s = "(" + describe(*phi.source) + ") -> (" + describe(*phi.target) + "), objects";
    for (ObjId x = 0; x < phi.source->object_count(); ++x)
        s += " " + phi.source->object_name(x) + "->" + phi.target->object_name(phi.obj(x));
    return s;
}

void add(TheoremReport& R, std::string name, bool passed, std::string detail = {}) {
    R.checks.push_back({std::move(name), passed, std::move(detail)});
}

void finish(TheoremReport& R, const Stopwatch& watch) {
    R.verdict = R.all_checks_pass() ? "pass" : "fail";
    R.wall_ms = watch.ms();
}

NervePtr nerve_of(const CoefficientSystemPtr& M, const CategoryPtr& C, const char* who) {
    auto N = std::dynamic_pointer_cast<const Nerve>(M->carrier());
    if (!N) throw std::invalid_argument(std::string(who) + ": coefficient system is not on a nerve");
    if (!(N->category() == C || *N->category() == *C))
        throw std::invalid_argument(std::string(who) + ": coefficient system is on the nerve of another category");
    return N;
}

/// Compares H(K) and H(L), records both sides; returns graded_iso.
bool compare(TheoremReport& R, const std::string& left, const CochainComplex& K, const std::string& right,
             const CochainComplex& L, int N) {
    auto a = cohomology(K, N);
    auto b = cohomology(L, N);
    R.sides.emplace_back(left, a);
    R.sides.emplace_back(right, b);
    bool iso = graded_iso(a, b, N);
    add(R, left + " ~ " + right, iso, iso ? "" : a.to_string() + " vs " + b.to_string());
    return iso;
}

/// Commutation plus, where sizes permit, rank of the induced map on every H^n, n <= N.
bool check_map(TheoremReport& R, const std::string& label, const CochainComplex& K, const CochainComplex& L,
               const std::vector<SparseMatrix>& f, int N) {
    bool ok = true;
    auto commute = check_cochain_map(K, L, f);
    add(R, label + " is a cochain map", commute.ok(), commute.ok() ? "" : commute.summary(3));
    ok = commute.ok();
    auto hk = cohomology(K, N);
    auto hl = cohomology(L, N);
    for (int n = 0; n <= N; ++n) {
        const std::string name = label + " bijective on free part of H^" + std::to_string(n);
        if (K.rank(n) > kInducedRankLimit || L.rank(n) > kInducedRankLimit) {
            add(R, name, true, "not checked: cochain groups too large");
            continue;
        }
        long r = induced_rank(K, L, f, n);
        bool bij = r == hk.at(n).rank && r == hl.at(n).rank;
        add(R, name, bij,
            "rank " + std::to_string(r) + ", free ranks " + std::to_string(hk.at(n).rank) + " and " +
                std::to_string(hl.at(n).rank));
        ok = ok && bij;
    }
    return ok;
}

std::map<std::pair<int, int>, int> page_table(const SSPage& page, int N) {
    std::map<std::pair<int, int>, int> t;
    for (int p = 0; p <= N; ++p)
        for (int q = 0; p + q <= N; ++q) t[{p, q}] = page.dim(p, q);
    return t;
}

}  // namespace

bool TheoremReport::all_checks_pass() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

TheoremReport verify_theorem1(const Functor& phi, const CoefficientSystemPtr& M, int N, bool under) {
    Stopwatch watch;
    TheoremReport R;
    R.theorem = under ? "theorem1-rev" : "theorem1";
    R.window = N;
    R.inputs = {{"functor", describe(phi)}, {"coefficients", M->description()}, {"ring", M->ring().to_string()}};
    auto NC = nerve_of(M, phi.source, "verify_theorem1");
    auto H = comma_hocolim(phi, under, NC, NC->cap());
    SimplicialMap k = kappa(H);
    auto check = check_simplicial(k, std::min(N + 1, 3));
    add(R, std::string(under ? "upsilon" : "kappa") + " is simplicial", check.ok(), check.ok() ? "" : check.summary(3));
    auto pulled = pullback(k, M);
    CochainComplex K = thomason_complex(*M, N);
    CochainComplex L = simplicial_complex(*pulled, N);
    compare(R, "H_Th(C;M)", K, "H(hocolim;pullback)", L, N);
    check_map(R, under ? "upsilon^*" : "kappa^*", K, L, cochain_map(k, *M, N), N);
    finish(R, watch);
    return R;
}

TheoremReport verify_theorem2(const Functor& phi, const CoefficientSystemPtr& M, int N) {
    Stopwatch watch;
    TheoremReport R;
    R.theorem = "theorem2";
    R.window = N;
    R.inputs = {{"functor", describe(phi)}, {"coefficients", M->description()}, {"ring", M->ring().to_string()}};
    auto ND = nerve_of(M, phi.target, "verify_theorem2");
    auto NC = std::make_shared<Nerve>(phi.source, ND->cap());
    const auto& D = *phi.target;
    auto H_id = comma_hocolim(identity_functor(phi.target), false, ND, ND->cap());
    auto H_phi = comma_hocolim(phi, false, NC, ND->cap());
    NatTransToCat U = comma_comparison(H_phi.family, H_id.family);

    bool hypothesis = true;
    std::string failing;
    for (ObjId d = 0; d < D.object_count(); ++d) {
        Stopwatch sub_watch;
        TheoremReport S;
        S.theorem = "hypothesis at " + D.object_name(d);
        S.window = N;
        auto Md = pullback(j_map(H_id, d), M);
        SimplicialMap NU = nerve_map(U.components[d], H_phi.replacement->fiber_nerve(d), H_id.replacement->fiber_nerve(d));
        CochainComplex K = simplicial_complex(*Md, N);
        CochainComplex L = simplicial_complex(*pullback(NU, Md), N);
        compare(S, "H(N(id/d);M_d)", K, "H(N(phi/d);NU(d)^*M_d)", L, N);
        check_map(S, "NU(d)^*", K, L, cochain_map(NU, *Md, N), N);
        finish(S, sub_watch);
        if (S.verdict != "pass") {
            hypothesis = false;
            failing += (failing.empty() ? "" : ", ") + D.object_name(d);
        }
        R.hypotheses.emplace_back(D.object_name(d), std::move(S));
    }
    add(R, "hypothesis", hypothesis, failing.empty() ? "" : "fails at d = " + failing);

    SimplicialMap Nphi = nerve_map(phi, NC, ND);
    CochainComplex K = thomason_complex(*M, N);
    CochainComplex L = simplicial_complex(*pullback(Nphi, M), N);
    TheoremReport C;  // collects the conclusion checks
    bool iso = compare(C, "H_Th(D;M)", K, "H_Th(C;phi^*M)", L, N);
    bool bij = check_map(C, "(N phi)^*", K, L, cochain_map(Nphi, *M, N), N);
    R.sides = C.sides;
    for (auto& c : C.checks) R.checks.push_back(c);
    const bool conclusion = iso && bij;
    add(R, "conclusion", conclusion);

    if (hypothesis)
        R.verdict = conclusion ? "pass" : "fail";
    else
        R.verdict = "hypothesis-fails";
    if (!hypothesis) R.note = "hypothesis fails at d = " + failing + "; conclusion " + (conclusion ? "holds" : "fails");
    if (hypothesis && !conclusion) R.note = "hypothesis passes but conclusion fails";
    R.wall_ms = watch.ms();
    return R;
}

TheoremReport verify_theorem3(const GrothendieckHocolim& G, const CoefficientSystemPtr& M, int N) {
    Stopwatch watch;
    TheoremReport R;
    R.theorem = "theorem3";
    R.window = N;
    R.inputs = {{"base", describe(*G.construction.diagram->base)},
                {"total category", describe(*G.construction.category)},
                {"coefficients", M->description()},
                {"ring", M->ring().to_string()}};
    if (!M->ring().is_field()) throw InputError("theorem3 needs a field ring, got " + M->ring().to_string());
    if (M->carrier() != G.commas.category_nerve)
        throw std::invalid_argument("verify_theorem3: coefficient system is not on the nerve of the total category");

    std::map<std::pair<int, int>, int> e2_hq;
    for (int q = 0; q <= N; ++q) {
        auto S = hq_system(G, M, q);
        auto h = cohomology(simplicial_complex(*S, N - q), N - q);
        for (int p = 0; p + q <= N; ++p) e2_hq[{p, q}] = static_cast<int>(h.at(p).rank);
    }
    auto ext = extend_horizontally(G.constant, M);
    auto pulled = pullback(lambda2_prime(G), ext);
    DoubleCochainComplex Dc = bisimplicial_complex(*pulled, N);
    auto pages = ss_pages(Dc, N + 2);
    const SSPage* page2 = nullptr;
    for (const auto& page : pages)
        if (page.r == 2) page2 = &page;
    if (!page2) throw std::logic_error("spectral sequence has no second page");
    const int window = std::min(N, page2->window);
    auto e2_ss = page_table(*page2, window);
    bool e2_equal = true;
    for (const auto& [pq, dim] : e2_ss)
        if (e2_hq.at(pq) != dim) e2_equal = false;
    add(R, "E2 via H^q systems = page 2", e2_equal);
    R.tables.emplace_back("E2 (H^q systems)", e2_hq);
    R.tables.emplace_back("E2 (page)", e2_ss);

    const SSPage& last = pages.back();
    const int inf_window = std::min(N, last.window);
    R.tables.emplace_back("E_inf (page " + std::to_string(last.r) + ")", page_table(last, inf_window));
    auto abutment = cohomology(thomason_complex(*M, N), N);
    auto tot = cohomology(total_complex(Dc), N);
    R.sides.emplace_back("H_Th(total;M)", abutment);
    R.sides.emplace_back("H(Tot)", tot);
    bool converges = true;
    std::string detail;
    for (int n = 0; n <= inf_window; ++n) {
        const int sum = total_dimension(last, n);
        detail += (n ? ", " : "") + std::to_string(sum) + "/" + std::to_string(abutment.at(n).rank);
        if (sum != abutment.at(n).rank) converges = false;
    }
    add(R, "sum of E_inf = H_Th(total;M)", converges, detail);
    add(R, "H(Tot) = H_Th(total;M)", graded_iso(tot, abutment, N));
    finish(R, watch);
    return R;
}

TheoremReport verify_prop_diag(const BiCoefficientSystemPtr& M, int N) {
    Stopwatch watch;
    TheoremReport R;
    R.theorem = "diag";
    R.window = N;
    R.inputs = {{"bisimplicial set", M->carrier()->description()},
                {"coefficients", M->description()},
                {"ring", M->ring().to_string()}};
    auto diag = std::make_shared<Diagonal>(M->carrier());
    CochainComplex tot = total_complex(bisimplicial_complex(*M, N));
    CochainComplex dg = simplicial_complex(*diagonal_restriction(diag, M), N);
    compare(R, "H(Tot;M)", tot, "H(diag;J^*M)", dg, N);
    finish(R, watch);
    return R;
}

TheoremReport verify_dold_puppe(const BisimplicialSetPtr& X, const Ring& ring, int N) {
    Stopwatch watch;
    TheoremReport R;
    R.theorem = "dold-puppe";
    R.window = N;
    R.inputs = {{"bisimplicial set", X->description()}, {"ring", ring.to_string()}};
    Diagonal diag(X);
    auto a = homology(moore_complex(diag, ring, N), N);
    auto b = homology(tot_chain_complex(*X, ring, N), N);
    R.sides.emplace_back("H(diag)", a);
    R.sides.emplace_back("H(Tot)", b);
    add(R, "H(diag) ~ H(Tot)", graded_iso(a, b, N));
    finish(R, watch);
    return R;
}

TheoremReport verify_lambda2(const GrothendieckHocolim& G, const CoefficientSystemPtr& M, int N) {
    Stopwatch watch;
    TheoremReport R;
    R.theorem = "lambda2";
    R.window = N;
    R.inputs = {{"total category", describe(*G.construction.category)},
                {"coefficients", M->description()},
                {"ring", M->ring().to_string()}};
    if (M->carrier() != G.commas.category_nerve)
        throw std::invalid_argument("verify_lambda2: coefficient system is not on the nerve of the total category");
    SimplicialMap l2 = lambda2(G);
    CochainComplex K = thomason_complex(*M, N);
    CochainComplex L = simplicial_complex(*pullback(l2, M), N);
    compare(R, "H_Th(total;M)", K, "H(hocolim;lambda2^*M)", L, N);
    check_map(R, "lambda2^*", K, L, cochain_map(l2, *M, N), N);

    auto ext = extend_horizontally(G.constant, M);
    CochainComplex Kb = total_complex(bisimplicial_complex(*ext, N));
    CochainComplex Lb = total_complex(bisimplicial_complex(*pullback(lambda2_prime(G), ext), N));
    compare(R, "H(N_b total;M)", Kb, "H(N(D;NF);lambda2'^*M)", Lb, N);
    add(R, "H(N_b total;M) ~ H_Th(total;M)", graded_iso(cohomology(Kb, N), cohomology(K, N), N));
    finish(R, watch);
    return R;
}

TheoremReport verify_husainov() {
    Stopwatch watch;
    TheoremReport R;
    R.theorem = "husainov";
    const int N = 2;
    R.window = N;
    auto h = fixtures::husainov();
    R.inputs = {{"functor", describe(h.phi)},
                {"natural system", "M(id_0) = M(id_1) = 0, M(alpha) = Z"},
                {"ring", "int"}};
    auto NC = std::make_shared<Nerve>(h.C);
    auto ND = std::make_shared<Nerve>(h.D);
    auto bwD = cohomology(bw_complex(ND, *h.FD, h.M, N), N);
    auto bwC = cohomology(bw_complex(NC, *h.FC, h.pulled, N), N);
    R.sides.emplace_back("H_BW(D;M)", bwD);
    R.sides.emplace_back("H_BW(C;phi^*M)", bwC);
    add(R, "H^1_BW(D;M) = Z", bwD.at(1).rank == 1 && bwD.at(1).torsion.empty(), bwD.at(1).to_string(bwD.ring));
    add(R, "H^1_BW(C;phi^*M) = 0", bwC.at(1).rank == 0 && bwC.at(1).torsion.empty(), bwC.at(1).to_string(bwC.ring));

    auto system = system_from_natural(ND, h.FD, h.M);
    auto th = cohomology(thomason_complex(*system, N), N);
    add(R, "H_Th(D;M o chi) ~ H_BW(D;M)", graded_iso(th, bwD, N));

    TheoremReport T = verify_theorem2(h.phi, system, N);
    add(R, "theorem2 reports a hypothesis failure", T.verdict == "hypothesis-fails", T.note);
    bool conclusion = true;
    for (const auto& c : T.checks)
        if (c.name == "conclusion") conclusion = c.passed;
    add(R, "(N phi)^* is not an isomorphism", !conclusion);
    R.hypotheses.emplace_back("theorem2", std::move(T));
    finish(R, watch);
    R.note = "the theorem2 hypothesis fails and so does its conclusion";
    return R;
}

TheoremReport sweep_theorem2(std::uint64_t seed, int count, int N, const Ring& ring) {
    Stopwatch watch;
    TheoremReport R;
    R.theorem = "theorem2-sweep";
    R.window = N;
    R.inputs = {{"seed", std::to_string(seed)}, {"instances", std::to_string(count)}, {"ring", ring.to_string()}};
    random_fixtures::Rng rng(seed);
    int passes = 0, hyp_fails = 0, contradictions = 0;
    for (int i = 0; i < count; ++i) {
        auto inst = random_fixtures::random_sweep_instance(rng, ring);
        TheoremReport T = verify_theorem2(inst.phi, inst.system, N);
        if (T.verdict == "pass") ++passes;
        if (T.verdict == "hypothesis-fails") ++hyp_fails;
        if (T.verdict == "fail") ++contradictions;
        R.hypotheses.emplace_back(std::to_string(i) + " " + inst.label, std::move(T));
    }
    add(R, "no instance with passing hypothesis and failing conclusion", contradictions == 0,
        std::to_string(passes) + " pass, " + std::to_string(hyp_fails) + " hypothesis-fails, " +
            std::to_string(contradictions) + " contradictions");
    finish(R, watch);
    return R;
}

TheoremReport sweep_theorem1(std::uint64_t seed, int count, int N, const Ring& ring) {
    Stopwatch watch;
    TheoremReport R;
    R.theorem = "theorem1-sweep";
    R.window = N;
    R.inputs = {{"seed", std::to_string(seed)}, {"instances", std::to_string(count)}, {"ring", ring.to_string()}};
    random_fixtures::Rng rng(seed);
    int failures = 0;
    for (int i = 0; i < count; ++i) {
        auto inst = random_fixtures::random_sweep_instance(rng, ring);
        auto ND = std::dynamic_pointer_cast<const Nerve>(inst.system->carrier());
        auto NC = std::make_shared<Nerve>(inst.phi.source);
        auto M = pullback(nerve_map(inst.phi, NC, ND), inst.system);
        TheoremReport T = verify_theorem1(inst.phi, M, N, i % 2 == 1);
        if (T.verdict != "pass") ++failures;
        R.hypotheses.emplace_back(std::to_string(i) + " " + inst.label, std::move(T));
    }
    add(R, "every instance passes", failures == 0, std::to_string(failures) + " failures");
    finish(R, watch);
    return R;
}

}  // namespace catcoh
