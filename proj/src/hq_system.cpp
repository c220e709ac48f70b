#include <map>
#include <mutex>

#include "catcoh/cohomology.hpp"
#include "catcoh/linalg.hpp"

namespace catcoh {

namespace {

/// H^q of one comma pi/d with its chosen basis.
template <class F>
struct LocalCohomology {
    CoefficientSystemPtr system;  // j_d^* M
    std::vector<int> offsets;     // blocks of C^q
    FieldMatrix<F> harmonic;      // basis vectors of H^q as q-cochains (columns)
    int boundary_dim = 0;
    Coordinates<F> coordinates;   // with respect to [B | H]
};

template <class F>
class HqSystem : public CoefficientSystem {
public:
    HqSystem(const GrothendieckHocolim& G, CoefficientSystemPtr M, int q, F field)
        : CoefficientSystem(G.commas.replacement->base_nerve(), M->ring()),
          G_(G),
          base_(G.commas.replacement->base_nerve()),
          q_(q),
          f_(field) {
        const auto& D = *base_->category();
        for (ObjId d = 0; d < D.object_count(); ++d) local_.push_back(build(pullback(j_map(G_.commas, d), M)));
    }

    std::string description() const override { return "H^" + std::to_string(q_) + " of the commas"; }
    int rank(int n, const Simplex& x) const override { return local_[base_->vertex(n, x, 0)].harmonic.cols; }

    Matrix induced(const MonotoneMap& f, const Simplex& x) const override {
        MorId a = base_->composite(f.target, x, 0, f(0));
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(a);
        if (it == cache_.end()) it = cache_.emplace(a, compute(a)).first;
        return it->second;
    }

private:
    LocalCohomology<F> build(CoefficientSystemPtr system) const {
        LocalCohomology<F> L;
        L.system = system;
        L.offsets = block_offsets(*system, q_);
        CochainComplex K = simplicial_complex(*system, q_);
        auto Z = kernel_basis(f_, to_field(f_, K.coboundary(q_)));
        FieldMatrix<F> B(L.offsets.back(), 0, f_);
        if (q_ > 0) {
            auto dq = to_field(f_, K.coboundary(q_ - 1));
            B = select_cols(dq, independent_columns(f_, dq));
        }
        L.boundary_dim = B.cols;
        // complement of B inside Z: greedy over [B | Z]
        auto both = hconcat(B, Z);
        std::vector<int> extra;
        for (int c : independent_columns(f_, both))
            if (c >= B.cols) extra.push_back(c - B.cols);
        L.harmonic = select_cols(Z, extra);
        L.coordinates = Coordinates<F>(f_, hconcat(B, L.harmonic));
        return L;
    }

    /// Matrix of H^q(pi/d') -> H^q(pi/d) for a: d -> d'.
    Matrix compute(MorId a) const {
        const auto& D = *base_->category();
        const auto& src = local_[D.src(a)];
        const auto& dst = local_[D.dst(a)];
        const Functor& post = G_.commas.family.functor->act(a);
        const auto& X = *src.system->carrier();
        const auto& Y = *dst.system->carrier();
        const auto& t = X.simplices(q_);
        FieldMatrix<F> pulled(src.offsets.back(), dst.harmonic.cols, f_);
        for (std::size_t k = 0; k < t.size(); ++k) {
            Simplex y = functor_on_simplex(post, q_, t.at(k));
            const std::size_t j = Y.index_of(q_, y);
            const int r = src.offsets[k + 1] - src.offsets[k];
            if (r != dst.offsets[j + 1] - dst.offsets[j])
                throw ComplexError("hq_system: j-restrictions are not compatible");
            for (int i = 0; i < r; ++i)
                for (int c = 0; c < pulled.cols; ++c) pulled.at(src.offsets[k] + i, c) = dst.harmonic.at(dst.offsets[j] + i, c);
        }
        auto coords = src.coordinates.solve(pulled);
        return from_field(f_, select_rows(coords, src.boundary_dim, src.harmonic.cols));
    }

    GrothendieckHocolim G_;
    NervePtr base_;
    int q_;
    F f_;
    std::vector<LocalCohomology<F>> local_;
    mutable std::mutex mutex_;
    mutable std::map<MorId, Matrix> cache_;
};

}  // namespace

CoefficientSystemPtr hq_system(const GrothendieckHocolim& G, CoefficientSystemPtr M, int q) {
    if (q < 0) throw std::invalid_argument("hq_system: negative degree");
    if (M->carrier() != G.commas.category_nerve)
        throw std::invalid_argument("hq_system: coefficient system is not on the nerve of the Grothendieck construction");
    const Ring& ring = M->ring();
    if (!ring.is_field()) throw InputError("hq_system needs a field (values must be free); got " + ring.to_string());
    if (ring.kind == RingKind::PrimeField) return std::make_shared<HqSystem<PrimeField>>(G, M, q, PrimeField(ring.p));
    return std::make_shared<HqSystem<RationalField>>(G, M, q, RationalField());
}

}  // namespace catcoh
