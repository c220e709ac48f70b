#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "catcoh/ring.hpp"

namespace catcoh {

/// Free rank plus torsion elementary divisors (each > 1, each dividing the next).
struct DegreeInvariants {
    long rank = 0;
    std::vector<mpz_class> torsion;

    friend bool operator==(const DegreeInvariants& a, const DegreeInvariants& b) {
        return a.rank == b.rank && a.torsion == b.torsion;
    }
    std::string to_string(const Ring& ring) const;
};

/// Per-degree (co)homology for degrees 0..window.
struct GradedInvariants {
    Ring ring;
    int window = -1;  // trusted degrees 0..window
    std::vector<DegreeInvariants> degrees;

    const DegreeInvariants& at(int n) const { return degrees.at(static_cast<std::size_t>(n)); }
    std::vector<long> ranks() const;
    std::string to_string() const;
};

GradedInvariants make_invariants(const Ring& ring, const std::vector<DegreeInvariants>& degrees);

/// Equality of rank and torsion in every degree <= upto.
bool graded_iso(const GradedInvariants& a, const GradedInvariants& b, int upto);

/// Cochain complex C^0 -> ... -> C^top with coboundaries delta[n]: C^n -> C^{n+1}
/// stored as (rank n+1) x (rank n) matrices. Trusted cohomology for n <= top-1.
class CochainComplex {
public:
    CochainComplex() = default;
    /// Validates shapes and delta[n+1] * delta[n] == 0; throws ComplexError.
    CochainComplex(Ring ring, std::vector<int> ranks, std::vector<SparseMatrix> coboundaries);

    const Ring& ring() const { return ring_; }
    int top_degree() const { return static_cast<int>(ranks_.size()) - 1; }
    int trusted_window() const { return top_degree() - 1; }
    int rank(int n) const { return ranks_.at(n); }
    const std::vector<int>& ranks() const { return ranks_; }
    /// delta^n : C^n -> C^{n+1}; a zero map when n < 0.
    const SparseMatrix& coboundary(int n) const;
    SparseMatrix coboundary_or_zero(int n) const;

private:
    Ring ring_;
    std::vector<int> ranks_;
    std::vector<SparseMatrix> delta_;
};

/// H^n for 0 <= n <= trusted window.
DegreeInvariants cohomology_at(const CochainComplex& K, int n);
GradedInvariants cohomology(const CochainComplex& K, int upto);

/// Chain complex C_top -> ... -> C_0 with boundaries[n]: C_n -> C_{n-1} (n >= 1).
class ChainComplex {
public:
    ChainComplex() = default;
    ChainComplex(Ring ring, std::vector<int> ranks, std::vector<SparseMatrix> boundaries);

    const Ring& ring() const { return ring_; }
    int top_degree() const { return static_cast<int>(ranks_.size()) - 1; }
    int trusted_window() const { return top_degree() - 1; }
    int rank(int n) const { return ranks_.at(n); }
    /// d_n : C_n -> C_{n-1}, n >= 1.
    const SparseMatrix& boundary(int n) const { return d_.at(static_cast<std::size_t>(n - 1)); }

private:
    Ring ring_;
    std::vector<int> ranks_;
    std::vector<SparseMatrix> d_;
};

DegreeInvariants homology_at(const ChainComplex& K, int n);
GradedInvariants homology(const ChainComplex& K, int upto);

/// First-quadrant double complex in the window p + q <= total_top.
class DoubleCochainComplex {
public:
    DoubleCochainComplex() = default;
    /// ranks[p][q] for p + q <= total_top; horizontal[p][q]: D^{p,q} -> D^{p+1,q} and
    /// vertical[p][q]: D^{p,q} -> D^{p,q+1} for p + q < total_top. Validates the
    /// square-zero and commutation identities; throws ComplexError.
    DoubleCochainComplex(Ring ring, int total_top, std::vector<std::vector<int>> ranks,
                         std::vector<std::vector<SparseMatrix>> horizontal,
                         std::vector<std::vector<SparseMatrix>> vertical);

    const Ring& ring() const { return ring_; }
    int total_top() const { return top_; }
    int rank(int p, int q) const;
    const SparseMatrix& horizontal(int p, int q) const { return h_.at(p).at(q); }
    const SparseMatrix& vertical(int p, int q) const { return v_.at(p).at(q); }
    /// Swap the roles of p and q.
    DoubleCochainComplex transposed() const;

private:
    Ring ring_;
    int top_ = -1;
    std::vector<std::vector<int>> ranks_;
    std::vector<std::vector<SparseMatrix>> h_, v_;
};

/// Tot^n = sum_{p+q=n} D^{p,q}, differential delta_h + (-1)^p delta_v; components ordered by p.
CochainComplex total_complex(const DoubleCochainComplex& D);

/// One page E_r of the column-filtration spectral sequence (E_1 = vertical cohomology).
struct SSPage {
    Ring field;
    int r = 0;
    int window = 0;  // dims valid for p + q <= window
    std::map<std::pair<int, int>, int> dims;
    /// d_r : E_r^{p,q} -> E_r^{p+r,q-r+1}, keyed by source (p,q), in the page's bases.
    /// Present whenever source and target lie in the window.
    std::map<std::pair<int, int>, Matrix> differentials;

    int dim(int p, int q) const;
};

/// Pages E_1 .. E_last (last = r_max, or the first page beyond which no differential
/// fits in the window). Field rings only.
std::vector<SSPage> ss_pages(const DoubleCochainComplex& D, int r_max);

/// Sum over p+q = n of dim E^{p,q} on a page.
int total_dimension(const SSPage& page, int n);

}  // namespace catcoh
