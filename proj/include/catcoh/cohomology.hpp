#pragma once

#include <vector>

#include "catcoh/category.hpp"
#include "catcoh/coeff.hpp"
#include "catcoh/complexes.hpp"
#include "catcoh/module.hpp"
#include "catcoh/simplicial.hpp"

namespace catcoh {

// All assemblers build degrees 0..N+1 so cohomology is trusted for n <= N.

/// C^n = sum over n-chains of M(c_n), coboundary with the last term twisted by M(alpha_{n+1}).
CochainComplex quillen_complex(const NervePtr& X, const Module& M, int N);
/// C^n = sum over n-chains of M(alpha_n ... alpha_1), three-term coboundary.
CochainComplex bw_complex(const NervePtr& X, const FactorizationCategory& FC, const Module& M, int N);
/// C^n = sum over X_n of M(sigma), delta = sum (-1)^i d^i_*.
CochainComplex simplicial_complex(const CoefficientSystem& M, int N);
/// simplicial_complex on the nerve; M must be carried by a nerve.
CochainComplex thomason_complex(const CoefficientSystem& M, int N);
/// D^{p,q} = sum over X_{p,q} of M(x), window p + q <= N + 1.
DoubleCochainComplex bisimplicial_complex(const BiCoefficientSystem& M, int N);

/// Offsets of the blocks M(x), x in X_n, inside C^n (one extra entry: the total rank).
std::vector<int> block_offsets(const CoefficientSystem& M, int n);

/// lambda^*: C(target; M) -> C(source; lambda^* M) in degrees 0..N+1.
std::vector<SparseMatrix> cochain_map(const SimplicialMap& lambda, const CoefficientSystem& M, int N);
/// Checks shapes and f^{n+1} delta_K^n = delta_L^n f^n for f: K -> L.
ValidationReport check_cochain_map(const CochainComplex& K, const CochainComplex& L, const std::vector<SparseMatrix>& f);
/// Rank of H^n(f): H^n(K) -> H^n(L) over Q (Z and Q) or over F_p.
long induced_rank(const CochainComplex& K, const CochainComplex& L, const std::vector<SparseMatrix>& f, int n);

/// Moore complex of the levelwise linearization: sum (-1)^i d_i, degrees 0..N+1.
ChainComplex moore_complex(const SimplicialSet& X, const Ring& ring, int N);
/// Total complex of the linearized bisimplicial set: d^h + (-1)^p d^v, degrees 0..N+1.
ChainComplex tot_chain_complex(const BisimplicialSet& X, const Ring& ring, int N);

/// q-th cohomology of the commas pi/d with j_d^* M, as a coefficient system on N D.
/// Values carry computed bases; induced maps pull back along N(post-composition).
/// Throws InputError over Z.
CoefficientSystemPtr hq_system(const GrothendieckHocolim& G, CoefficientSystemPtr M, int q);

}  // namespace catcoh
