#include "catcoh/coeff.hpp"

#include <stdexcept>

namespace catcoh {

namespace {

std::string show(const Simplex& x) {
    std::string s = "[";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s + "]";
}

std::string show(const MonotoneMap& f) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.values.size(); ++i) s += (i ? "," : "") + std::to_string(f.values[i]);
    return s + ")->[" + std::to_string(f.target) + "]";
}

bool same_category(const CategoryPtr& a, const CategoryPtr& b) { return a == b || (a && b && *a == *b); }

std::vector<MonotoneMap> generators(int n) {
    std::vector<MonotoneMap> out;
    for (int i = 0; i <= n && n >= 1; ++i) out.push_back(MonotoneMap::coface(n, i));
    for (int i = 0; i <= n; ++i) out.push_back(MonotoneMap::codegeneracy(n, i));
    return out;
}

class ConstantSystem : public CoefficientSystem {
public:
    ConstantSystem(SimplicialSetPtr X, Ring ring, int r) : CoefficientSystem(std::move(X), ring), r_(r) {}
    std::string description() const override { return "constant rank " + std::to_string(r_); }
    int rank(int, const Simplex&) const override { return r_; }
    Matrix induced(const MonotoneMap&, const Simplex&) const override { return Matrix::identity(r_); }

private:
    int r_;
};

class NaturalSystem : public CoefficientSystem {
public:
    NaturalSystem(NervePtr X, std::shared_ptr<const FactorizationCategory> FC, Module M)
        : CoefficientSystem(X, M.ring), X_(std::move(X)), FC_(std::move(FC)), M_(std::move(M)) {}
    std::string description() const override { return "natural system"; }
    int rank(int n, const Simplex& x) const override { return M_.rank(chi(*X_, n, x)); }
    Matrix induced(const MonotoneMap& f, const Simplex& x) const override {
        return M_.map(chi_morphism(*X_, *FC_, f, x));
    }

private:
    NervePtr X_;
    std::shared_ptr<const FactorizationCategory> FC_;
    Module M_;
};

class LastVertexSystem : public CoefficientSystem {
public:
    LastVertexSystem(NervePtr X, Module M) : CoefficientSystem(X, M.ring), X_(std::move(X)), M_(std::move(M)) {}
    std::string description() const override { return "last-vertex system"; }
    int rank(int n, const Simplex& x) const override { return M_.rank(X_->vertex(n, x, n)); }
    Matrix induced(const MonotoneMap& f, const Simplex& x) const override {
        return M_.map(X_->composite(f.target, x, f(f.source()), f.target));
    }

private:
    NervePtr X_;
    Module M_;
};

class FirstVertexSystem : public CoefficientSystem {
public:
    FirstVertexSystem(NervePtr X, Module N) : CoefficientSystem(X, N.ring), X_(std::move(X)), N_(std::move(N)) {}
    std::string description() const override { return "first-vertex system"; }
    int rank(int n, const Simplex& x) const override { return N_.rank(X_->vertex(n, x, 0)); }
    Matrix induced(const MonotoneMap& f, const Simplex& x) const override {
        return N_.map(X_->composite(f.target, x, 0, f(0)));
    }

private:
    NervePtr X_;
    Module N_;
};

class PullbackSystem : public CoefficientSystem {
public:
    PullbackSystem(SimplicialMap lambda, CoefficientSystemPtr M)
        : CoefficientSystem(lambda.source, M->ring()), lambda_(std::move(lambda)), M_(std::move(M)) {}
    std::string description() const override { return "pullback of " + M_->description(); }
    int rank(int n, const Simplex& x) const override { return M_->rank(n, lambda_(n, x)); }
    Matrix induced(const MonotoneMap& f, const Simplex& x) const override {
        return M_->induced(f, lambda_(f.target, x));
    }

private:
    SimplicialMap lambda_;
    CoefficientSystemPtr M_;
};

class DiagonalRestriction : public CoefficientSystem {
public:
    DiagonalRestriction(DiagonalPtr diag, BiCoefficientSystemPtr M)
        : CoefficientSystem(diag, M->ring()), M_(std::move(M)) {}
    std::string description() const override { return "diagonal restriction of " + M_->description(); }
    int rank(int n, const Simplex& x) const override { return M_->rank(n, n, x); }
    Matrix induced(const MonotoneMap& f, const Simplex& x) const override { return M_->induced(f, f, x); }

private:
    BiCoefficientSystemPtr M_;
};

class FunctionSystem : public CoefficientSystem {
public:
    FunctionSystem(SimplicialSetPtr X, Ring ring, std::function<int(int, const Simplex&)> rank,
                   std::function<Matrix(const MonotoneMap&, const Simplex&)> induced, std::string description)
        : CoefficientSystem(std::move(X), ring),
          rank_(std::move(rank)),
          induced_(std::move(induced)),
          description_(std::move(description)) {}
    std::string description() const override { return description_; }
    int rank(int n, const Simplex& x) const override { return rank_(n, x); }
    Matrix induced(const MonotoneMap& f, const Simplex& x) const override { return induced_(f, x); }

private:
    std::function<int(int, const Simplex&)> rank_;
    std::function<Matrix(const MonotoneMap&, const Simplex&)> induced_;
    std::string description_;
};

class HorizontalExtension : public BiCoefficientSystem {
public:
    HorizontalExtension(HorizontallyConstantPtr Yb, CoefficientSystemPtr M)
        : BiCoefficientSystem(Yb, M->ring()), M_(std::move(M)) {}
    std::string description() const override { return "horizontal extension of " + M_->description(); }
    int rank(int, int q, const Simplex& x) const override { return M_->rank(q, x); }
    Matrix induced(const MonotoneMap&, const MonotoneMap& fv, const Simplex& x) const override {
        return M_->induced(fv, x);
    }

private:
    CoefficientSystemPtr M_;
};

class BiPullback : public BiCoefficientSystem {
public:
    BiPullback(BisimplicialMap lambda, BiCoefficientSystemPtr M)
        : BiCoefficientSystem(lambda.source, M->ring()), lambda_(std::move(lambda)), M_(std::move(M)) {}
    std::string description() const override { return "pullback of " + M_->description(); }
    int rank(int p, int q, const Simplex& x) const override { return M_->rank(p, q, lambda_(p, q, x)); }
    Matrix induced(const MonotoneMap& fh, const MonotoneMap& fv, const Simplex& x) const override {
        return M_->induced(fh, fv, lambda_(fh.target, fv.target, x));
    }

private:
    BisimplicialMap lambda_;
    BiCoefficientSystemPtr M_;
};

class BiFunctionSystem : public BiCoefficientSystem {
public:
    BiFunctionSystem(BisimplicialSetPtr X, Ring ring, std::function<int(int, int, const Simplex&)> rank,
                     std::function<Matrix(const MonotoneMap&, const MonotoneMap&, const Simplex&)> induced,
                     std::string description)
        : BiCoefficientSystem(std::move(X), ring),
          rank_(std::move(rank)),
          induced_(std::move(induced)),
          description_(std::move(description)) {}
    std::string description() const override { return description_; }
    int rank(int p, int q, const Simplex& x) const override { return rank_(p, q, x); }
    Matrix induced(const MonotoneMap& fh, const MonotoneMap& fv, const Simplex& x) const override {
        return induced_(fh, fv, x);
    }

private:
    std::function<int(int, int, const Simplex&)> rank_;
    std::function<Matrix(const MonotoneMap&, const MonotoneMap&, const Simplex&)> induced_;
    std::string description_;
};

}  // namespace

// ------------------------------------------------------------------ modules

ValidationReport check_functoriality(const Module& M) {
    ValidationReport report;
    const auto& C = *M.base;
    if (static_cast<int>(M.ranks.size()) != C.object_count()) {
        report.add("module has " + std::to_string(M.ranks.size()) + " ranks for " + std::to_string(C.object_count()) +
                   " objects");
        return report;
    }
    if (static_cast<int>(M.maps.size()) != C.morphism_count()) {
        report.add("module has " + std::to_string(M.maps.size()) + " maps for " + std::to_string(C.morphism_count()) +
                   " morphisms");
        return report;
    }
    for (ObjId x = 0; x < C.object_count(); ++x)
        if (M.ranks[x] < 0) report.add("negative rank at " + C.object_name(x));
    if (!report.ok()) return report;
    bool shapes = true;
    for (MorId m = 0; m < C.morphism_count(); ++m) {
        const Matrix& A = M.maps[m];
        if (A.rows() != M.ranks[C.dst(m)] || A.cols() != M.ranks[C.src(m)]) {
            report.add("map of " + C.morphism_name(m) + " is " + std::to_string(A.rows()) + "x" +
                       std::to_string(A.cols()) + ", expected " + std::to_string(M.ranks[C.dst(m)]) + "x" +
                       std::to_string(M.ranks[C.src(m)]));
            shapes = false;
        }
    }
    if (!shapes) return report;
    for (ObjId x = 0; x < C.object_count(); ++x)
        if (!M.maps[C.identity(x)].equals(Matrix::identity(M.ranks[x]), M.ring))
            report.add("identity of " + C.object_name(x) + " is not sent to the identity");
    for (MorId g = 0; g < C.morphism_count(); ++g)
        for (MorId f = 0; f < C.morphism_count(); ++f) {
            if (C.src(g) != C.dst(f)) continue;
            MorId gf = C.compose_entry(g, f);
            if (gf == kNoMorphism) continue;
            if (!M.maps[gf].equals(M.maps[g] * M.maps[f], M.ring))
                report.add("M(" + C.morphism_name(g) + " o " + C.morphism_name(f) + ") != M(" + C.morphism_name(g) +
                           ") M(" + C.morphism_name(f) + ")");
        }
    return report;
}

Module constant_module(const CategoryPtr& C, const Ring& ring, int rank) {
    Module M{C, ring, std::vector<int>(C->object_count(), rank), {}};
    M.maps.assign(C->morphism_count(), Matrix::identity(rank));
    return M;
}

Module pullback_module(const Functor& phi, const Module& M) {
    if (!same_category(phi.target, M.base)) throw std::invalid_argument("pullback_module: module is not over the target");
    Module out{phi.source, M.ring, {}, {}};
    for (ObjId x = 0; x < phi.source->object_count(); ++x) out.ranks.push_back(M.rank(phi.obj(x)));
    for (MorId m = 0; m < phi.source->morphism_count(); ++m) out.maps.push_back(M.map(phi.mor(m)));
    return out;
}

Module on_opposite(const Module& M, const CategoryPtr& op) {
    const auto& C = *M.base;
    if (op->object_count() != C.object_count() || op->morphism_count() != C.morphism_count())
        throw std::invalid_argument("on_opposite: sizes differ");
    for (MorId m = 0; m < C.morphism_count(); ++m)
        if (op->src(m) != C.dst(m) || op->dst(m) != C.src(m))
            throw std::invalid_argument("on_opposite: not the opposite category");
    Module out = M;
    out.base = op;
    return out;
}

// ---------------------------------------------------------------------- chi

MorId chi(const Nerve& N, int n, const Simplex& x) { return N.composite(n, x, 0, n); }

std::pair<MorId, MorId> chi_mor(const Nerve& N, const MonotoneMap& f, const Simplex& x) {
    const int n = f.target;
    return {N.composite(n, x, f(f.source()), n), N.composite(n, x, 0, f(0))};
}

MorId chi_morphism(const Nerve& N, const FactorizationCategory& FC, const MonotoneMap& f, const Simplex& x) {
    auto [u, v] = chi_mor(N, f, x);
    MorId beta = N.composite(f.target, x, f(0), f(f.source()));
    return FC.morphism(u, beta, v);
}

// ------------------------------------------------------------------ systems

CoefficientSystemPtr constant_system(SimplicialSetPtr X, const Ring& ring, int rank) {
    if (rank < 0) throw std::invalid_argument("constant_system: negative rank");
    return std::make_shared<ConstantSystem>(std::move(X), ring, rank);
}

CoefficientSystemPtr system_from_natural(NervePtr X, std::shared_ptr<const FactorizationCategory> FC, Module M) {
    if (!same_category(FC->base, X->category()))
        throw std::invalid_argument("system_from_natural: factorization category of another category");
    if (!same_category(M.base, FC->category))
        throw std::invalid_argument("system_from_natural: module is not over the factorization category");
    return std::make_shared<NaturalSystem>(std::move(X), std::move(FC), std::move(M));
}

CoefficientSystemPtr system_from_covariant(NervePtr X, Module M) {
    if (!same_category(M.base, X->category())) throw std::invalid_argument("system_from_covariant: module over another category");
    return std::make_shared<LastVertexSystem>(std::move(X), std::move(M));
}

CoefficientSystemPtr system_from_contravariant(NervePtr X, Module N) {
    const auto& C = *X->category();
    const auto& B = *N.base;
    bool ok = B.object_count() == C.object_count() && B.morphism_count() == C.morphism_count();
    for (MorId m = 0; ok && m < C.morphism_count(); ++m) ok = B.src(m) == C.dst(m) && B.dst(m) == C.src(m);
    if (!ok) throw std::invalid_argument("system_from_contravariant: module is not over the opposite category");
    return std::make_shared<FirstVertexSystem>(std::move(X), std::move(N));
}

CoefficientSystemPtr pullback(const SimplicialMap& lambda, CoefficientSystemPtr M) {
    if (lambda.target != M->carrier()) throw std::invalid_argument("pullback: map target is not the carrier");
    return std::make_shared<PullbackSystem>(lambda, std::move(M));
}

CoefficientSystemPtr diagonal_restriction(DiagonalPtr diag, BiCoefficientSystemPtr M) {
    if (diag->bisimplicial() != M->carrier()) throw std::invalid_argument("diagonal_restriction: carrier mismatch");
    return std::make_shared<DiagonalRestriction>(std::move(diag), std::move(M));
}

CoefficientSystemPtr function_system(SimplicialSetPtr X, const Ring& ring, std::function<int(int, const Simplex&)> rank,
                                     std::function<Matrix(const MonotoneMap&, const Simplex&)> induced,
                                     std::string description) {
    return std::make_shared<FunctionSystem>(std::move(X), ring, std::move(rank), std::move(induced), std::move(description));
}

BiCoefficientSystemPtr extend_horizontally(HorizontallyConstantPtr Yb, CoefficientSystemPtr M) {
    if (Yb->fiber() != M->carrier()) throw std::invalid_argument("extend_horizontally: carrier mismatch");
    return std::make_shared<HorizontalExtension>(std::move(Yb), std::move(M));
}

BiCoefficientSystemPtr pullback(const BisimplicialMap& lambda, BiCoefficientSystemPtr M) {
    if (lambda.target != M->carrier()) throw std::invalid_argument("pullback: map target is not the carrier");
    return std::make_shared<BiPullback>(lambda, std::move(M));
}

BiCoefficientSystemPtr bi_function_system(BisimplicialSetPtr X, const Ring& ring,
                                          std::function<int(int, int, const Simplex&)> rank,
                                          std::function<Matrix(const MonotoneMap&, const MonotoneMap&, const Simplex&)> induced,
                                          std::string description) {
    return std::make_shared<BiFunctionSystem>(std::move(X), ring, std::move(rank), std::move(induced),
                                              std::move(description));
}

bool is_horizontally_constant(const BiCoefficientSystem& M, int bound) {
    const auto& X = *M.carrier();
    for (int p = 0; p <= bound; ++p)
        for (int q = 0; p + q <= bound; ++q) {
            const auto& t = X.simplices(p, q);
            auto idv = MonotoneMap::identity(q);
            for (std::size_t k = 0; k < t.size(); ++k) {
                Simplex x = t.at(k);
                for (const auto& g : generators(p)) {
                    if (g.source() > p && p + q + 1 > bound) continue;
                    Matrix A = M.induced(g, idv, x);
                    if (A.rows() != A.cols() || !A.equals(Matrix::identity(A.rows()), M.ring())) return false;
                }
            }
        }
    return true;
}

ValidationReport check_functoriality(const CoefficientSystem& M, int bound) {
    ValidationReport report;
    const auto& X = *M.carrier();
    const Ring& ring = M.ring();
    auto full = [&] { return report.violations.size() >= 50; };
    for (int n = 0; n <= bound && !full(); ++n) {
        const auto& t = X.simplices(n);
        for (std::size_t k = 0; k < t.size() && !full(); ++k) {
            Simplex x = t.at(k);
            const int rx = M.rank(n, x);
            if (!M.induced(MonotoneMap::identity(n), x).equals(Matrix::identity(rx), ring))
                report.add("identity not preserved at " + show(x));
            for (int m = 0; m <= bound; ++m)
                for (const auto& f : MonotoneMap::all(m, n)) {
                    Simplex y = X.apply(f, x);
                    Matrix A = M.induced(f, x);
                    if (A.rows() != rx || A.cols() != M.rank(m, y)) {
                        report.add("induced map of " + show(f) + " at " + show(x) + " has the wrong shape");
                        continue;
                    }
                    // Generators suffice: every monotone map factors through them.
                    for (const auto& g : generators(m)) {
                        if (g.source() > bound) continue;
                        Matrix B = M.induced(g, y);
                        if (B.rows() != A.cols()) continue;
                        if (!M.induced(compose(f, g), x).equals(A * B, ring))
                            report.add("M(f g) != M(f) M(g) for f = " + show(f) + ", g = " + show(g) + " at " + show(x));
                    }
                }
        }
    }
    return report;
}

ValidationReport check_functoriality(const BiCoefficientSystem& M, int bound) {
    ValidationReport report;
    const auto& X = *M.carrier();
    const Ring& ring = M.ring();
    auto full = [&] { return report.violations.size() >= 50; };
    for (int p = 0; p <= bound && !full(); ++p)
        for (int q = 0; p + q <= bound && !full(); ++q) {
            const auto& t = X.simplices(p, q);
            auto idp = MonotoneMap::identity(p);
            auto idq = MonotoneMap::identity(q);
            for (std::size_t k = 0; k < t.size() && !full(); ++k) {
                Simplex x = t.at(k);
                const int rx = M.rank(p, q, x);
                const std::string at = " at " + show(x) + " (" + std::to_string(p) + "," + std::to_string(q) + ")";
                if (!M.induced(idp, idq, x).equals(Matrix::identity(rx), ring)) report.add("identity not preserved" + at);
                for (int a = 0; a + q <= bound; ++a)
                    for (int b = 0; a + b <= bound; ++b)
                        for (const auto& fh : MonotoneMap::all(a, p))
                            for (const auto& fv : MonotoneMap::all(b, q)) {
                                Simplex y = X.apply(fh, fv, x);
                                Matrix A = M.induced(fh, fv, x);
                                if (A.rows() != rx || A.cols() != M.rank(a, b, y)) {
                                    report.add("induced map has the wrong shape" + at);
                                    continue;
                                }
                                auto check = [&](const MonotoneMap& gh, const MonotoneMap& gv) {
                                    if (gh.source() + gv.source() > bound) return;
                                    Matrix B = M.induced(gh, gv, y);
                                    if (!M.induced(compose(fh, gh), compose(fv, gv), x).equals(A * B, ring))
                                        report.add("M(f g) != M(f) M(g) for f = " + show(fh) + " x " + show(fv) + at);
                                };
                                for (const auto& g : generators(a)) check(g, MonotoneMap::identity(b));
                                for (const auto& g : generators(b)) check(MonotoneMap::identity(a), g);
                            }
            }
        }
    return report;
}

// ---------------------------------------------------------- natural systems

Module natural_from_covariant(const FactorizationCategory& FC, const Module& M) {
    if (!same_category(M.base, FC.base)) throw std::invalid_argument("natural_from_covariant: module over another category");
    return pullback_module(FC.T, M);
}

Module natural_from_contravariant(const FactorizationCategory& FC, const Module& N) {
    if (!same_category(N.base, FC.base_opposite))
        throw std::invalid_argument("natural_from_contravariant: module is not over C^op");
    return pullback_module(FC.S, N);
}

Module kronecker_natural_system(const FactorizationCategory& FC, const Module& A, const Module& B) {
    const auto& C = *FC.base;
    if (!same_category(B.base, FC.base)) throw std::invalid_argument("kronecker_natural_system: B is not over C");
    if (A.ranks.size() != static_cast<std::size_t>(C.object_count()) ||
        A.maps.size() != static_cast<std::size_t>(C.morphism_count()))
        throw std::invalid_argument("kronecker_natural_system: A is not over C^op");
    if (!(A.ring == B.ring)) throw std::invalid_argument("kronecker_natural_system: rings differ");
    Module M{FC.category, B.ring, {}, {}};
    for (MorId a = 0; a < C.morphism_count(); ++a) M.ranks.push_back(A.rank(C.src(a)) * B.rank(C.dst(a)));
    for (const auto& [u, a, v] : FC.triples) M.maps.push_back(A.map(v).kron(B.map(u)));
    return M;
}

}  // namespace catcoh
