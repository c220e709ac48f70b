#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "catcoh/category.hpp"
#include "catcoh/errors.hpp"

namespace catcoh {

/// Canonical simplex encoding: object id in degree 0, morphism ids otherwise;
/// bisimplices concatenate the two codes.
using Simplex = std::vector<int>;

/// Monotone map f: [m] -> [n] stored as its values f(0..m).
struct MonotoneMap {
    int target = 0;
    std::vector<int> values;

    int source() const { return static_cast<int>(values.size()) - 1; }
    int operator()(int i) const { return values.at(i); }
    bool valid() const;
    bool is_identity() const;
    bool injective() const;
    bool surjective() const;

    static MonotoneMap identity(int n);
    /// d^i : [n-1] -> [n], skipping i.
    static MonotoneMap coface(int n, int i);
    /// s^i : [n+1] -> [n], hitting i twice.
    static MonotoneMap codegeneracy(int n, int i);
    /// All monotone maps [m] -> [n], lexicographic.
    static std::vector<MonotoneMap> all(int m, int n);

    friend bool operator==(const MonotoneMap& a, const MonotoneMap& b) = default;
};

/// f o g.
MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g);

/// Sorted fixed-width table of simplex codes for one degree.
class SimplexTable {
public:
    SimplexTable() = default;
    SimplexTable(int width, std::vector<int> data);

    int width() const { return width_; }
    std::size_t size() const { return width_ == 0 ? 0 : data_.size() / width_; }
    std::span<const int> row(std::size_t i) const { return {data_.data() + i * width_, static_cast<std::size_t>(width_)}; }
    Simplex at(std::size_t i) const { return {data_.begin() + i * width_, data_.begin() + (i + 1) * width_}; }
    std::optional<std::size_t> find(const Simplex& x) const;

private:
    int width_ = 1;
    std::vector<int> data_;
};

/// Appends codes to a flat table while enforcing the simplex cap.
class Emitter {
public:
    Emitter(std::vector<int>& out, int width, std::size_t limit, std::string what)
        : out_(out), width_(width), limit_(limit), what_(std::move(what)) {}
    void push(std::span<const int> code);
    void push(const Simplex& code) { push(std::span<const int>(code)); }
    void push2(std::span<const int> a, std::span<const int> b);

private:
    std::vector<int>& out_;
    int width_;
    std::size_t limit_;
    std::size_t count_ = 0;
    std::string what_;
};

/// Degreewise finite simplicial set with lazily enumerated, cached simplices.
class SimplicialSet {
public:
    explicit SimplicialSet(SimplexCap cap) : cap_(cap) {}
    virtual ~SimplicialSet() = default;
    SimplicialSet(const SimplicialSet&) = delete;
    SimplicialSet& operator=(const SimplicialSet&) = delete;

    virtual std::string description() const = 0;
    virtual int width(int n) const = 0;
    /// d_i : X_n -> X_{n-1}.
    virtual Simplex face(int n, int i, const Simplex& x) const = 0;
    /// s_i : X_n -> X_{n+1}.
    virtual Simplex degeneracy(int n, int i, const Simplex& x) const = 0;
    /// f^* x for f: [m] -> [n] and x in X_n.
    virtual Simplex apply(const MonotoneMap& f, const Simplex& x) const { return apply_by_factoring(f, x); }
    /// f^* through faces (omitted indices, descending) then degeneracies.
    Simplex apply_by_factoring(const MonotoneMap& f, const Simplex& x) const;

    const SimplexTable& simplices(int n) const;
    std::size_t count(int n) const { return simplices(n).size(); }
    /// Throws std::out_of_range when x is not an n-simplex.
    std::size_t index_of(int n, const Simplex& x) const;
    const SimplexCap& cap() const { return cap_; }

protected:
    /// Appends all n-simplices in increasing lexicographic order.
    virtual void enumerate(int n, Emitter& out) const = 0;

private:
    SimplexCap cap_;
    mutable std::mutex mutex_;
    mutable std::map<int, std::unique_ptr<SimplexTable>> cache_;
    mutable std::size_t total_ = 0;
};

using SimplicialSetPtr = std::shared_ptr<const SimplicialSet>;

/// Nerve of a finite category; degenerate chains included.
class Nerve : public SimplicialSet {
public:
    explicit Nerve(CategoryPtr C, SimplexCap cap = SimplexCap::from_environment());

    const CategoryPtr& category() const { return C_; }
    std::string description() const override { return "nerve"; }
    int width(int n) const override { return n == 0 ? 1 : n; }
    Simplex face(int n, int i, const Simplex& x) const override;
    Simplex degeneracy(int n, int i, const Simplex& x) const override;
    /// Direct chain formula (the factoring route is kept for cross-checks).
    Simplex apply(const MonotoneMap& f, const Simplex& x) const override;

    /// Object c_i of an n-simplex.
    ObjId vertex(int n, const Simplex& x, int i) const;
    /// alpha_to o ... o alpha_{from+1} : c_from -> c_to (identity when from == to).
    MorId composite(int n, const Simplex& x, int from, int to) const;

protected:
    void enumerate(int n, Emitter& out) const override;

private:
    CategoryPtr C_;
};

using NervePtr = std::shared_ptr<const Nerve>;

/// Image of an n-simplex of N(source F) under the nerve of F.
Simplex functor_on_simplex(const Functor& F, int n, const Simplex& x);

/// Degreewise finite bisimplicial set; p is horizontal, q vertical.
class BisimplicialSet {
public:
    explicit BisimplicialSet(SimplexCap cap) : cap_(cap) {}
    virtual ~BisimplicialSet() = default;
    BisimplicialSet(const BisimplicialSet&) = delete;
    BisimplicialSet& operator=(const BisimplicialSet&) = delete;

    virtual std::string description() const = 0;
    virtual int width(int p, int q) const = 0;
    virtual Simplex hface(int p, int q, int i, const Simplex& x) const = 0;
    virtual Simplex vface(int p, int q, int i, const Simplex& x) const = 0;
    virtual Simplex hdegeneracy(int p, int q, int i, const Simplex& x) const = 0;
    virtual Simplex vdegeneracy(int p, int q, int i, const Simplex& x) const = 0;
    /// (fh x fv)^* x for x in X_{fh.target, fv.target}.
    virtual Simplex apply(const MonotoneMap& fh, const MonotoneMap& fv, const Simplex& x) const {
        return apply_by_factoring(fh, fv, x);
    }
    Simplex apply_by_factoring(const MonotoneMap& fh, const MonotoneMap& fv, const Simplex& x) const;

    const SimplexTable& simplices(int p, int q) const;
    std::size_t count(int p, int q) const { return simplices(p, q).size(); }
    std::size_t index_of(int p, int q, const Simplex& x) const;
    const SimplexCap& cap() const { return cap_; }

protected:
    virtual void enumerate(int p, int q, Emitter& out) const = 0;

private:
    SimplexCap cap_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<int, int>, std::unique_ptr<SimplexTable>> cache_;
    mutable std::size_t total_ = 0;
};

using BisimplicialSetPtr = std::shared_ptr<const BisimplicialSet>;

/// N(D; NG): (p,q)-simplices are pairs (sigma in N(D)_p, tau in NG(d_0 sigma)_q).
class SimplicialReplacement : public BisimplicialSet {
public:
    explicit SimplicialReplacement(FunctorToCatPtr G, SimplexCap cap = SimplexCap::from_environment());

    const FunctorToCatPtr& diagram() const { return G_; }
    const NervePtr& base_nerve() const { return base_; }
    const NervePtr& fiber_nerve(ObjId d) const { return fibers_.at(d); }

    std::string description() const override { return "simplicial replacement"; }
    int width(int p, int q) const override { return std::max(p, 1) + std::max(q, 1); }
    Simplex hface(int p, int q, int i, const Simplex& x) const override;
    Simplex vface(int p, int q, int i, const Simplex& x) const override;
    Simplex hdegeneracy(int p, int q, int i, const Simplex& x) const override;
    Simplex vdegeneracy(int p, int q, int i, const Simplex& x) const override;
    /// (f_h^* sigma, G(alpha_{f_h(0)} ... alpha_1)(f_v^* tau)).
    Simplex apply(const MonotoneMap& fh, const MonotoneMap& fv, const Simplex& x) const override;

    Simplex sigma(int p, const Simplex& x) const { return {x.begin(), x.begin() + std::max(p, 1)}; }
    Simplex tau(int p, const Simplex& x) const { return {x.begin() + std::max(p, 1), x.end()}; }
    static Simplex join(const Simplex& sigma, const Simplex& tau);
    /// First object d_0 of the base chain.
    ObjId anchor(int p, const Simplex& x) const { return base_->vertex(p, sigma(p, x), 0); }

protected:
    void enumerate(int p, int q, Emitter& out) const override;

private:
    FunctorToCatPtr G_;
    NervePtr base_;
    std::vector<NervePtr> fibers_;
};

using ReplacementPtr = std::shared_ptr<const SimplicialReplacement>;

/// diag X: n-simplices are the (n,n)-simplices, d_i = d_i^h d_i^v.
class Diagonal : public SimplicialSet {
public:
    explicit Diagonal(BisimplicialSetPtr X);

    const BisimplicialSetPtr& bisimplicial() const { return X_; }
    std::string description() const override { return "diagonal of " + X_->description(); }
    int width(int n) const override { return X_->width(n, n); }
    Simplex face(int n, int i, const Simplex& x) const override;
    Simplex degeneracy(int n, int i, const Simplex& x) const override;
    Simplex apply(const MonotoneMap& f, const Simplex& x) const override { return X_->apply(f, f, x); }

protected:
    void enumerate(int n, Emitter& out) const override;

private:
    BisimplicialSetPtr X_;
};

using DiagonalPtr = std::shared_ptr<const Diagonal>;

/// Y_b with (Y_b)_{p,q} = Y_q and identity horizontal structure.
class HorizontallyConstant : public BisimplicialSet {
public:
    explicit HorizontallyConstant(SimplicialSetPtr Y);

    const SimplicialSetPtr& fiber() const { return Y_; }
    std::string description() const override { return "horizontally constant " + Y_->description(); }
    int width(int, int q) const override { return Y_->width(q); }
    Simplex hface(int, int, int, const Simplex& x) const override { return x; }
    Simplex vface(int, int q, int i, const Simplex& x) const override { return Y_->face(q, i, x); }
    Simplex hdegeneracy(int, int, int, const Simplex& x) const override { return x; }
    Simplex vdegeneracy(int, int q, int i, const Simplex& x) const override { return Y_->degeneracy(q, i, x); }
    Simplex apply(const MonotoneMap&, const MonotoneMap& fv, const Simplex& x) const override { return Y_->apply(fv, x); }

protected:
    void enumerate(int p, int q, Emitter& out) const override;

private:
    SimplicialSetPtr Y_;
};

using HorizontallyConstantPtr = std::shared_ptr<const HorizontallyConstant>;

/// Every simplicial identity on all simplices of degree <= bound.
ValidationReport check_simplicial_identities(const SimplicialSet& X, int bound);
/// Horizontal and vertical identities and their commutation for p + q <= bound.
ValidationReport check_bisimplicial_identities(const BisimplicialSet& X, int bound);
/// f^* by the override agrees with the factoring route for all f: [m] -> [n], m, n <= bound.
ValidationReport check_apply_consistency(const SimplicialSet& X, int bound);
ValidationReport check_apply_consistency(const BisimplicialSet& X, int bound);

// ------------------------------------------------------------------- maps

struct SimplicialMap {
    SimplicialSetPtr source;
    SimplicialSetPtr target;
    std::function<Simplex(int, const Simplex&)> fn;

    Simplex operator()(int n, const Simplex& x) const { return fn(n, x); }
};

struct BisimplicialMap {
    BisimplicialSetPtr source;
    BisimplicialSetPtr target;
    std::function<Simplex(int, int, const Simplex&)> fn;

    Simplex operator()(int p, int q, const Simplex& x) const { return fn(p, q, x); }
};

/// g o f.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);
/// Image simplices lie in the target and faces/degeneracies commute, degrees <= bound.
ValidationReport check_simplicial(const SimplicialMap& f, int bound);
ValidationReport check_bisimplicial(const BisimplicialMap& f, int bound);
/// diag of a bisimplicial map between the given diagonals.
SimplicialMap diagonal_map(const BisimplicialMap& f, const DiagonalPtr& source, const DiagonalPtr& target);

SimplicialMap nerve_map(const Functor& phi, const NervePtr& source, const NervePtr& target);

/// hocolim of a comma family phi/- (over D) or -\phi (over D^op), with N C.
struct CommaHocolim {
    CommaFamily family;
    NervePtr category_nerve;  // N C
    ReplacementPtr replacement;
    DiagonalPtr hocolim;
};

CommaHocolim comma_hocolim(const Functor& phi, bool under, const NervePtr& category_nerve,
                           SimplexCap cap = SimplexCap::from_environment());

/// kappa (over) / upsilon (under): hocolim -> N C, (sigma, tau) |-> underlying chain of tau.
SimplicialMap kappa(const CommaHocolim& H);
/// Bisimplicial form N(D; N(phi/-)) -> (N C)_b.
BisimplicialMap kappa_bisimplicial(const CommaHocolim& H, const HorizontallyConstantPtr& target);
/// j_d : N(phi/d) -> N C.
SimplicialMap j_map(const CommaHocolim& H, ObjId d);
/// i_d : NG(d) -> hocolim, tau |-> ((id_d, ..., id_d), tau).
SimplicialMap i_map(const ReplacementPtr& X, const DiagonalPtr& hocolim, ObjId d);
/// (sigma, tau) |-> (sigma, U(d_0) tau); throws InputError when U is not natural.
BisimplicialMap nat_trans_bimap(const NatTransToCat& U, const ReplacementPtr& source, const ReplacementPtr& target);

/// Grothendieck construction with its comma family pi/- and the maps lambda2, lambda2'.
struct GrothendieckHocolim {
    GrothendieckConstruction construction;
    CommaHocolim commas;  // phi = pi
    HorizontallyConstantPtr constant;  // N_b of the total category
};

GrothendieckHocolim grothendieck_hocolim(const FunctorToCatPtr& F, SimplexCap cap = SimplexCap::from_environment());
BisimplicialMap lambda2_prime(const GrothendieckHocolim& G);
SimplicialMap lambda2(const GrothendieckHocolim& G);

}  // namespace catcoh
