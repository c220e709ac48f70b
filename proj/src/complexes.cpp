#include "catcoh/complexes.hpp"

#include <sstream>

#include "catcoh/errors.hpp"
#include "catcoh/linalg.hpp"

namespace catcoh {

std::string DegreeInvariants::to_string(const Ring& ring) const {
    std::string base = ring.kind == RingKind::Integer    ? "Z"
                       : ring.kind == RingKind::Rational ? "Q"
                                                         : "F" + std::to_string(ring.p);
    std::vector<std::string> parts;
    if (rank == 1) parts.push_back(base);
    if (rank > 1) parts.push_back(base + "^" + std::to_string(rank));
    for (const auto& t : torsion) parts.push_back("Z/" + t.get_str());
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += "+" + parts[i];
    return out;
}

std::vector<long> GradedInvariants::ranks() const {
    std::vector<long> r;
    for (const auto& d : degrees) r.push_back(d.rank);
    return r;
}

std::string GradedInvariants::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < degrees.size(); ++i) out += (i ? ", " : "") + degrees[i].to_string(ring);
    return out + ")";
}

GradedInvariants make_invariants(const Ring& ring, const std::vector<DegreeInvariants>& degrees) {
    return {ring, static_cast<int>(degrees.size()) - 1, degrees};
}

bool graded_iso(const GradedInvariants& a, const GradedInvariants& b, int upto) {
    if (!(a.ring == b.ring)) return false;
    if (a.window < upto || b.window < upto) return false;
    for (int n = 0; n <= upto; ++n)
        if (!(a.at(n) == b.at(n))) return false;
    return true;
}

// --------------------------------------------------------- CochainComplex

CochainComplex::CochainComplex(Ring ring, std::vector<int> ranks, std::vector<SparseMatrix> coboundaries)
    : ring_(ring), ranks_(std::move(ranks)), delta_(std::move(coboundaries)) {
    if (ranks_.empty()) throw ComplexError("cochain complex without degrees");
    if (delta_.size() + 1 != ranks_.size()) throw ComplexError("cochain complex: coboundary count mismatch");
    for (std::size_t n = 0; n < delta_.size(); ++n)
        if (delta_[n].rows() != ranks_[n + 1] || delta_[n].cols() != ranks_[n])
            throw ComplexError("cochain complex: coboundary " + std::to_string(n) + " has wrong shape");
    for (std::size_t n = 0; n + 1 < delta_.size(); ++n)
        if (!(delta_[n + 1] * delta_[n]).is_zero(ring_))
            throw ComplexError("cochain complex: delta^" + std::to_string(n + 1) + " * delta^" + std::to_string(n) +
                               " != 0");
}

const SparseMatrix& CochainComplex::coboundary(int n) const {
    return delta_.at(static_cast<std::size_t>(n));
}

SparseMatrix CochainComplex::coboundary_or_zero(int n) const {
    if (n < 0) return SparseMatrix(ranks_.at(0), 0);
    return delta_.at(static_cast<std::size_t>(n));
}

namespace {

struct MapData {
    long rank = 0;
    std::vector<mpz_class> torsion;  // invariant factors > 1
};

MapData analyze(const SparseMatrix& m, const Ring& ring) {
    MapData out;
    if (ring.kind == RingKind::Integer) {
        for (auto& f : invariant_factors(m)) {
            ++out.rank;
            if (f > 1) out.torsion.push_back(f);
        }
    } else {
        out.rank = sparse_rank(m, ring);
    }
    return out;
}

}  // namespace

DegreeInvariants cohomology_at(const CochainComplex& K, int n) {
    return cohomology(K, n).degrees.back();
}

GradedInvariants cohomology(const CochainComplex& K, int upto) {
    if (upto < 0 || upto > K.trusted_window())
        throw std::out_of_range("cohomology degree " + std::to_string(upto) + " outside trusted window 0.." +
                                std::to_string(K.trusted_window()));
    std::vector<MapData> maps;
    for (int n = 0; n <= upto; ++n) maps.push_back(analyze(K.coboundary(n), K.ring()));
    std::vector<DegreeInvariants> degrees;
    for (int n = 0; n <= upto; ++n) {
        DegreeInvariants d;
        long incoming = n > 0 ? maps[n - 1].rank : 0;
        d.rank = K.rank(n) - maps[n].rank - incoming;
        if (n > 0) d.torsion = maps[n - 1].torsion;
        degrees.push_back(std::move(d));
    }
    return make_invariants(K.ring(), degrees);
}

// ----------------------------------------------------------- ChainComplex

ChainComplex::ChainComplex(Ring ring, std::vector<int> ranks, std::vector<SparseMatrix> boundaries)
    : ring_(ring), ranks_(std::move(ranks)), d_(std::move(boundaries)) {
    if (ranks_.empty()) throw ComplexError("chain complex without degrees");
    if (d_.size() + 1 != ranks_.size()) throw ComplexError("chain complex: boundary count mismatch");
    for (std::size_t k = 0; k < d_.size(); ++k)
        if (d_[k].rows() != ranks_[k] || d_[k].cols() != ranks_[k + 1])
            throw ComplexError("chain complex: boundary " + std::to_string(k + 1) + " has wrong shape");
    for (std::size_t k = 0; k + 1 < d_.size(); ++k)
        if (!(d_[k] * d_[k + 1]).is_zero(ring_))
            throw ComplexError("chain complex: d_" + std::to_string(k + 1) + " * d_" + std::to_string(k + 2) + " != 0");
}

DegreeInvariants homology_at(const ChainComplex& K, int n) { return homology(K, n).degrees.back(); }

GradedInvariants homology(const ChainComplex& K, int upto) {
    if (upto < 0 || upto > K.trusted_window())
        throw std::out_of_range("homology degree " + std::to_string(upto) + " outside trusted window 0.." +
                                std::to_string(K.trusted_window()));
    // maps[k] describes d_k for k = 1..upto+1
    std::vector<MapData> maps(static_cast<std::size_t>(upto) + 2);
    for (int k = 1; k <= upto + 1; ++k) maps[k] = analyze(K.boundary(k), K.ring());
    std::vector<DegreeInvariants> degrees;
    for (int n = 0; n <= upto; ++n) {
        DegreeInvariants d;
        long outgoing = n > 0 ? maps[n].rank : 0;
        d.rank = K.rank(n) - outgoing - maps[n + 1].rank;
        d.torsion = maps[n + 1].torsion;
        degrees.push_back(std::move(d));
    }
    return make_invariants(K.ring(), degrees);
}

// --------------------------------------------------- DoubleCochainComplex

DoubleCochainComplex::DoubleCochainComplex(Ring ring, int total_top, std::vector<std::vector<int>> ranks,
                                           std::vector<std::vector<SparseMatrix>> horizontal,
                                           std::vector<std::vector<SparseMatrix>> vertical)
    : ring_(ring), top_(total_top), ranks_(std::move(ranks)), h_(std::move(horizontal)), v_(std::move(vertical)) {
    if (top_ < 0) throw ComplexError("double complex with negative window");
    for (int p = 0; p <= top_; ++p)
        if (static_cast<int>(ranks_.at(p).size()) < top_ - p + 1)
            throw ComplexError("double complex: missing ranks in column " + std::to_string(p));
    for (int p = 0; p < top_; ++p)
        for (int q = 0; p + q < top_; ++q) {
            const auto& h = h_.at(p).at(q);
            const auto& v = v_.at(p).at(q);
            if (h.rows() != rank(p + 1, q) || h.cols() != rank(p, q))
                throw ComplexError("double complex: horizontal (" + std::to_string(p) + "," + std::to_string(q) +
                                   ") has wrong shape");
            if (v.rows() != rank(p, q + 1) || v.cols() != rank(p, q))
                throw ComplexError("double complex: vertical (" + std::to_string(p) + "," + std::to_string(q) +
                                   ") has wrong shape");
        }
    for (int p = 0; p < top_; ++p)
        for (int q = 0; p + q + 1 < top_; ++q) {
            std::string at = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
            if (!(h_[p + 1][q] * h_[p][q]).is_zero(ring_)) throw ComplexError("double complex: dh*dh != 0 at " + at);
            if (!(v_[p][q + 1] * v_[p][q]).is_zero(ring_)) throw ComplexError("double complex: dv*dv != 0 at " + at);
            if (!(h_[p][q + 1] * v_[p][q]).equals(v_[p + 1][q] * h_[p][q], ring_))
                throw ComplexError("double complex: dh*dv != dv*dh at " + at);
        }
}

int DoubleCochainComplex::rank(int p, int q) const {
    if (p < 0 || q < 0 || p + q > top_) throw std::out_of_range("bidegree outside double complex window");
    return ranks_[p][q];
}

DoubleCochainComplex DoubleCochainComplex::transposed() const {
    std::vector<std::vector<int>> ranks(top_ + 1);
    std::vector<std::vector<SparseMatrix>> h(top_ + 1), v(top_ + 1);
    for (int p = 0; p <= top_; ++p) {
        for (int q = 0; p + q <= top_; ++q) ranks[p].push_back(ranks_[q][p]);
        for (int q = 0; p + q < top_; ++q) {
            h[p].push_back(v_[q][p]);
            v[p].push_back(h_[q][p]);
        }
    }
    return DoubleCochainComplex(ring_, top_, std::move(ranks), std::move(h), std::move(v));
}

CochainComplex total_complex(const DoubleCochainComplex& D) {
    const int top = D.total_top();
    std::vector<std::vector<int>> offset(top + 1);
    std::vector<int> ranks(top + 1, 0);
    for (int n = 0; n <= top; ++n)
        for (int p = 0; p <= n; ++p) {
            offset[n].push_back(ranks[n]);
            ranks[n] += D.rank(p, n - p);
        }
    std::vector<SparseMatrix> delta;
    for (int n = 0; n < top; ++n) {
        std::vector<Triplet> t;
        for (int p = 0; p <= n; ++p) {
            int q = n - p;
            int col0 = offset[n][p];
            const auto& h = D.horizontal(p, q);
            for (int r = 0; r < h.rows(); ++r)
                for (const auto& e : h.row(r)) t.push_back({offset[n + 1][p + 1] + r, col0 + e.col, e.value});
            const auto& v = D.vertical(p, q);
            int sign = (p % 2 == 0) ? 1 : -1;
            for (int r = 0; r < v.rows(); ++r)
                for (const auto& e : v.row(r)) t.push_back({offset[n + 1][p] + r, col0 + e.col, sign * e.value});
        }
        delta.push_back(SparseMatrix::from_triplets(ranks[n + 1], ranks[n], std::move(t)));
    }
    return CochainComplex(D.ring(), ranks, std::move(delta));
}

int SSPage::dim(int p, int q) const {
    auto it = dims.find({p, q});
    if (it == dims.end()) throw std::out_of_range("page entry outside window");
    return it->second;
}

int total_dimension(const SSPage& page, int n) {
    if (n > page.window) throw std::out_of_range("total degree outside page window");
    int s = 0;
    for (int p = 0; p <= n; ++p) s += page.dim(p, n - p);
    return s;
}

}  // namespace catcoh
