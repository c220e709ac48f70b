#pragma once

#include <functional>
#include <memory>
#include <string>

#include "catcoh/category.hpp"
#include "catcoh/module.hpp"
#include "catcoh/simplicial.hpp"

namespace catcoh {

/// Functor from the simplex category of a simplicial set to free modules.
/// induced(f, x) : M(f^* x) -> M(x), a rank(x) x rank(f^* x) matrix.
class CoefficientSystem {
public:
    CoefficientSystem(SimplicialSetPtr carrier, Ring ring) : carrier_(std::move(carrier)), ring_(ring) {}
    virtual ~CoefficientSystem() = default;

    const SimplicialSetPtr& carrier() const { return carrier_; }
    const Ring& ring() const { return ring_; }
    virtual std::string description() const = 0;
    virtual int rank(int n, const Simplex& x) const = 0;
    virtual Matrix induced(const MonotoneMap& f, const Simplex& x) const = 0;

private:
    SimplicialSetPtr carrier_;
    Ring ring_;
};

using CoefficientSystemPtr = std::shared_ptr<const CoefficientSystem>;

/// Bisimplicial analogue; induced(fh, fv, x) : M((fh x fv)^* x) -> M(x).
class BiCoefficientSystem {
public:
    BiCoefficientSystem(BisimplicialSetPtr carrier, Ring ring) : carrier_(std::move(carrier)), ring_(ring) {}
    virtual ~BiCoefficientSystem() = default;

    const BisimplicialSetPtr& carrier() const { return carrier_; }
    const Ring& ring() const { return ring_; }
    virtual std::string description() const = 0;
    virtual int rank(int p, int q, const Simplex& x) const = 0;
    virtual Matrix induced(const MonotoneMap& fh, const MonotoneMap& fv, const Simplex& x) const = 0;

private:
    BisimplicialSetPtr carrier_;
    Ring ring_;
};

using BiCoefficientSystemPtr = std::shared_ptr<const BiCoefficientSystem>;

// ------------------------------------------------------------------ chi

/// alpha_n ... alpha_1 (identity of c_0 when n = 0).
MorId chi(const Nerve& N, int n, const Simplex& x);
/// (u, v) = (alpha_n ... alpha_{f(m)+1}, alpha_{f(0)} ... alpha_1) for f: [m] -> [n].
std::pair<MorId, MorId> chi_mor(const Nerve& N, const MonotoneMap& f, const Simplex& x);
/// The morphism chi(f): chi(f^* x) -> chi(x) of the factorization category.
MorId chi_morphism(const Nerve& N, const FactorizationCategory& FC, const MonotoneMap& f, const Simplex& x);

// ---------------------------------------------------------------- systems

CoefficientSystemPtr constant_system(SimplicialSetPtr X, const Ring& ring, int rank = 1);
/// M o chi for a natural system M (a module over the factorization category).
CoefficientSystemPtr system_from_natural(NervePtr X, std::shared_ptr<const FactorizationCategory> FC, Module M);
/// sigma |-> M(c_n), induced maps M(alpha_n ... alpha_{f(m)+1}).
CoefficientSystemPtr system_from_covariant(NervePtr X, Module M);
/// sigma |-> N(c_0) for N over C^op, induced maps N(alpha_{f(0)} ... alpha_1).
CoefficientSystemPtr system_from_contravariant(NervePtr X, Module N);
/// lambda^* M; throws std::invalid_argument when lambda.target is not the carrier of M.
CoefficientSystemPtr pullback(const SimplicialMap& lambda, CoefficientSystemPtr M);
/// J^* M' on diag X.
CoefficientSystemPtr diagonal_restriction(DiagonalPtr diag, BiCoefficientSystemPtr M);
/// Arbitrary callbacks (tests and negative controls).
CoefficientSystemPtr function_system(SimplicialSetPtr X, const Ring& ring, std::function<int(int, const Simplex&)> rank,
                                     std::function<Matrix(const MonotoneMap&, const Simplex&)> induced,
                                     std::string description = "function system");

/// Extension of M on Y to Y_b with identity horizontal maps.
BiCoefficientSystemPtr extend_horizontally(HorizontallyConstantPtr Yb, CoefficientSystemPtr M);
BiCoefficientSystemPtr pullback(const BisimplicialMap& lambda, BiCoefficientSystemPtr M);
BiCoefficientSystemPtr bi_function_system(BisimplicialSetPtr X, const Ring& ring,
                                          std::function<int(int, int, const Simplex&)> rank,
                                          std::function<Matrix(const MonotoneMap&, const MonotoneMap&, const Simplex&)> induced,
                                          std::string description = "function system");

/// Every horizontal coface/codegeneracy induces an identity matrix, p + q <= bound.
bool is_horizontally_constant(const BiCoefficientSystem& M, int bound);

/// Identities, shapes and M(f g) = M(f) M(g) for simplices of degree <= bound
/// and all monotone maps between degrees <= bound.
ValidationReport check_functoriality(const CoefficientSystem& M, int bound);
ValidationReport check_functoriality(const BiCoefficientSystem& M, int bound);

// ------------------------------------------------------- natural systems

/// M o T: alpha |-> M(dst alpha), (u, alpha, v) |-> M(u).
Module natural_from_covariant(const FactorizationCategory& FC, const Module& M);
/// N o S: alpha |-> N(src alpha), (u, alpha, v) |-> N(v), for N over C^op.
Module natural_from_contravariant(const FactorizationCategory& FC, const Module& N);
/// alpha |-> A(src alpha) (x) B(dst alpha), (u, alpha, v) |-> A(v) (x) B(u).
Module kronecker_natural_system(const FactorizationCategory& FC, const Module& A_contravariant, const Module& B_covariant);

}  // namespace catcoh
