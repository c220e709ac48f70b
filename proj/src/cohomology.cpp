#include "catcoh/cohomology.hpp"

#include <stdexcept>

#include "catcoh/linalg.hpp"

namespace catcoh {

namespace {

int sign(int i) { return i % 2 == 0 ? 1 : -1; }

void add_block(std::vector<Triplet>& out, int row0, int col0, const Matrix& block, int s) {
    for (int r = 0; r < block.rows(); ++r)
        for (int c = 0; c < block.cols(); ++c) {
            const mpq_class& v = block(r, c);
            if (v != 0) out.push_back({row0 + r, col0 + c, s > 0 ? mpq_class(v) : mpq_class(-v)});
        }
}

void add_identity(std::vector<Triplet>& out, int row0, int col0, int n, int s) {
    for (int k = 0; k < n; ++k) out.push_back({row0 + k, col0 + k, mpq_class(s)});
}

template <class RankFn>
std::vector<int> offsets_of(const SimplexTable& t, RankFn rank) {
    std::vector<int> off;
    off.reserve(t.size() + 1);
    int total = 0;
    for (std::size_t k = 0; k < t.size(); ++k) {
        off.push_back(total);
        total += rank(t.at(k));
    }
    off.push_back(total);
    return off;
}

void require_bound(int N) {
    if (N < 0) throw std::invalid_argument("degree bound must be >= 0");
}

template <class F>
long induced_rank_over(const F& f, const CochainComplex& K, const CochainComplex& L, const std::vector<SparseMatrix>& maps,
                       int n) {
    auto Z = kernel_basis(f, to_field(f, K.coboundary(n)));
    auto image = multiply(f, to_field(f, maps.at(n)), Z);
    if (n == 0) return rank(f, image);
    auto B = to_field(f, L.coboundary(n - 1));
    return rank(f, hconcat(image, B)) - rank(f, B);
}

}  // namespace

std::vector<int> block_offsets(const CoefficientSystem& M, int n) {
    return offsets_of(M.carrier()->simplices(n), [&](const Simplex& x) { return M.rank(n, x); });
}

CochainComplex quillen_complex(const NervePtr& X, const Module& M, int N) {
    require_bound(N);
    if (!(X->category() == M.base || *X->category() == *M.base))
        throw std::invalid_argument("quillen_complex: module over another category");
    const int top = N + 1;
    std::vector<std::vector<int>> off;
    std::vector<int> ranks;
    for (int n = 0; n <= top; ++n) {
        off.push_back(offsets_of(X->simplices(n), [&](const Simplex& x) { return M.rank(X->vertex(n, x, n)); }));
        ranks.push_back(off.back().back());
    }
    std::vector<SparseMatrix> delta;
    for (int n = 0; n < top; ++n) {
        const auto& t = X->simplices(n + 1);
        std::vector<Triplet> tr;
        for (std::size_t k = 0; k < t.size(); ++k) {
            Simplex s = t.at(k);
            const int row0 = off[n + 1][k];
            const int r = off[n + 1][k + 1] - row0;
            for (int i = 0; i <= n + 1; ++i) {
                Simplex face = X->face(n + 1, i, s);
                const int col0 = off[n][X->index_of(n, face)];
                if (i <= n)
                    add_identity(tr, row0, col0, r, sign(i));
                else
                    add_block(tr, row0, col0, M.map(s[n]), sign(i));
            }
        }
        delta.push_back(SparseMatrix::from_triplets(ranks[n + 1], ranks[n], std::move(tr)));
    }
    return CochainComplex(M.ring, ranks, std::move(delta));
}

CochainComplex bw_complex(const NervePtr& X, const FactorizationCategory& FC, const Module& M, int N) {
    require_bound(N);
    const auto& C = *X->category();
    if (!(FC.base == X->category() || *FC.base == C))
        throw std::invalid_argument("bw_complex: factorization category of another category");
    if (!(M.base == FC.category || *M.base == *FC.category))
        throw std::invalid_argument("bw_complex: module is not a natural system on this category");
    const int top = N + 1;
    std::vector<std::vector<int>> off;
    std::vector<int> ranks;
    for (int n = 0; n <= top; ++n) {
        off.push_back(offsets_of(X->simplices(n), [&](const Simplex& x) { return M.rank(chi(*X, n, x)); }));
        ranks.push_back(off.back().back());
    }
    std::vector<SparseMatrix> delta;
    for (int n = 0; n < top; ++n) {
        const auto& t = X->simplices(n + 1);
        std::vector<Triplet> tr;
        for (std::size_t k = 0; k < t.size(); ++k) {
            Simplex s = t.at(k);
            const int row0 = off[n + 1][k];
            const int r = off[n + 1][k + 1] - row0;
            for (int i = 0; i <= n + 1; ++i) {
                Simplex face = X->face(n + 1, i, s);
                const int col0 = off[n][X->index_of(n, face)];
                if (i == 0 || i == n + 1) {
                    MorId beta = chi(*X, n, face);
                    MorId mor = i == 0
                                    ? FC.morphism(C.identity(C.dst(beta)), beta, X->composite(n + 1, s, 0, 1))
                                    : FC.morphism(X->composite(n + 1, s, n, n + 1), beta, C.identity(C.src(beta)));
                    add_block(tr, row0, col0, M.map(mor), sign(i));
                } else {
                    add_identity(tr, row0, col0, r, sign(i));
                }
            }
        }
        delta.push_back(SparseMatrix::from_triplets(ranks[n + 1], ranks[n], std::move(tr)));
    }
    return CochainComplex(M.ring, ranks, std::move(delta));
}

CochainComplex simplicial_complex(const CoefficientSystem& M, int N) {
    require_bound(N);
    const auto& X = *M.carrier();
    const int top = N + 1;
    std::vector<std::vector<int>> off;
    std::vector<int> ranks;
    for (int n = 0; n <= top; ++n) {
        off.push_back(block_offsets(M, n));
        ranks.push_back(off.back().back());
    }
    std::vector<SparseMatrix> delta;
    for (int n = 0; n < top; ++n) {
        const auto& t = X.simplices(n + 1);
        std::vector<Triplet> tr;
        for (std::size_t k = 0; k < t.size(); ++k) {
            Simplex s = t.at(k);
            const int row0 = off[n + 1][k];
            for (int i = 0; i <= n + 1; ++i) {
                Simplex face = X.face(n + 1, i, s);
                const std::size_t j = X.index_of(n, face);
                Matrix block = M.induced(MonotoneMap::coface(n + 1, i), s);
                if (block.rows() != off[n + 1][k + 1] - row0 || block.cols() != off[n][j + 1] - off[n][j])
                    throw ComplexError("coefficient map d^" + std::to_string(i) + " has the wrong shape");
                add_block(tr, row0, off[n][j], block, sign(i));
            }
        }
        delta.push_back(SparseMatrix::from_triplets(ranks[n + 1], ranks[n], std::move(tr)));
    }
    return CochainComplex(M.ring(), ranks, std::move(delta));
}

CochainComplex thomason_complex(const CoefficientSystem& M, int N) {
    if (!std::dynamic_pointer_cast<const Nerve>(M.carrier()))
        throw std::invalid_argument("thomason_complex: coefficient system is not on a nerve");
    return simplicial_complex(M, N);
}

DoubleCochainComplex bisimplicial_complex(const BiCoefficientSystem& M, int N) {
    require_bound(N);
    const auto& X = *M.carrier();
    const int top = N + 1;
    std::vector<std::vector<std::vector<int>>> off(top + 1);
    std::vector<std::vector<int>> ranks(top + 1);
    for (int p = 0; p <= top; ++p)
        for (int q = 0; p + q <= top; ++q) {
            off[p].push_back(offsets_of(X.simplices(p, q), [&](const Simplex& x) { return M.rank(p, q, x); }));
            ranks[p].push_back(off[p][q].back());
        }
    std::vector<std::vector<SparseMatrix>> h(top), v(top);
    for (int p = 0; p < top; ++p)
        for (int q = 0; p + q < top; ++q) {
            std::vector<Triplet> th, tv;
            const auto& th_t = X.simplices(p + 1, q);
            for (std::size_t k = 0; k < th_t.size(); ++k) {
                Simplex x = th_t.at(k);
                for (int i = 0; i <= p + 1; ++i) {
                    Simplex face = X.hface(p + 1, q, i, x);
                    const int col0 = off[p][q][X.index_of(p, q, face)];
                    add_block(th, off[p + 1][q][k], col0,
                              M.induced(MonotoneMap::coface(p + 1, i), MonotoneMap::identity(q), x), sign(i));
                }
            }
            const auto& tv_t = X.simplices(p, q + 1);
            for (std::size_t k = 0; k < tv_t.size(); ++k) {
                Simplex x = tv_t.at(k);
                for (int i = 0; i <= q + 1; ++i) {
                    Simplex face = X.vface(p, q + 1, i, x);
                    const int col0 = off[p][q][X.index_of(p, q, face)];
                    add_block(tv, off[p][q + 1][k], col0,
                              M.induced(MonotoneMap::identity(p), MonotoneMap::coface(q + 1, i), x), sign(i));
                }
            }
            h[p].push_back(SparseMatrix::from_triplets(ranks[p + 1][q], ranks[p][q], std::move(th)));
            v[p].push_back(SparseMatrix::from_triplets(ranks[p][q + 1], ranks[p][q], std::move(tv)));
        }
    return DoubleCochainComplex(M.ring(), top, std::move(ranks), std::move(h), std::move(v));
}

std::vector<SparseMatrix> cochain_map(const SimplicialMap& lambda, const CoefficientSystem& M, int N) {
    require_bound(N);
    if (lambda.target != M.carrier()) throw std::invalid_argument("cochain_map: map target is not the carrier");
    const auto& S = *lambda.source;
    std::vector<SparseMatrix> out;
    for (int n = 0; n <= N + 1; ++n) {
        auto target_off = block_offsets(M, n);
        const auto& t = S.simplices(n);
        std::vector<Triplet> tr;
        int row = 0;
        for (std::size_t k = 0; k < t.size(); ++k) {
            Simplex y = lambda(n, t.at(k));
            const std::size_t j = M.carrier()->index_of(n, y);
            const int r = target_off[j + 1] - target_off[j];
            add_identity(tr, row, target_off[j], r, 1);
            row += r;
        }
        out.push_back(SparseMatrix::from_triplets(row, target_off.back(), std::move(tr)));
    }
    return out;
}

ValidationReport check_cochain_map(const CochainComplex& K, const CochainComplex& L, const std::vector<SparseMatrix>& f) {
    ValidationReport report;
    const int top = std::min({K.top_degree(), L.top_degree(), static_cast<int>(f.size()) - 1});
    for (int n = 0; n <= top; ++n)
        if (f[n].rows() != L.rank(n) || f[n].cols() != K.rank(n))
            report.add("cochain map in degree " + std::to_string(n) + " has the wrong shape");
    if (!report.ok()) return report;
    for (int n = 0; n < top; ++n)
        if (!(f[n + 1] * K.coboundary(n)).equals(L.coboundary(n) * f[n], K.ring()))
            report.add("cochain map does not commute with delta^" + std::to_string(n));
    return report;
}

long induced_rank(const CochainComplex& K, const CochainComplex& L, const std::vector<SparseMatrix>& f, int n) {
    if (n < 0 || n > K.trusted_window() || n > L.trusted_window())
        throw std::out_of_range("induced_rank: degree outside the trusted window");
    if (K.ring().kind == RingKind::PrimeField) return induced_rank_over(PrimeField(K.ring().p), K, L, f, n);
    return induced_rank_over(RationalField(), K, L, f, n);
}

ChainComplex moore_complex(const SimplicialSet& X, const Ring& ring, int N) {
    require_bound(N);
    const int top = N + 1;
    std::vector<int> ranks;
    for (int n = 0; n <= top; ++n) ranks.push_back(static_cast<int>(X.count(n)));
    std::vector<SparseMatrix> d;
    for (int n = 1; n <= top; ++n) {
        const auto& t = X.simplices(n);
        std::vector<Triplet> tr;
        for (std::size_t k = 0; k < t.size(); ++k) {
            Simplex x = t.at(k);
            for (int i = 0; i <= n; ++i)
                tr.push_back({static_cast<int>(X.index_of(n - 1, X.face(n, i, x))), static_cast<int>(k), mpq_class(sign(i))});
        }
        d.push_back(SparseMatrix::from_triplets(ranks[n - 1], ranks[n], std::move(tr)));
    }
    return ChainComplex(ring, ranks, std::move(d));
}

ChainComplex tot_chain_complex(const BisimplicialSet& X, const Ring& ring, int N) {
    require_bound(N);
    const int top = N + 1;
    // offset of the block X_{p,n-p} inside Tot_n
    std::vector<std::vector<int>> off(top + 1);
    std::vector<int> ranks;
    for (int n = 0; n <= top; ++n) {
        int total = 0;
        for (int p = 0; p <= n; ++p) {
            off[n].push_back(total);
            total += static_cast<int>(X.count(p, n - p));
        }
        ranks.push_back(total);
    }
    std::vector<SparseMatrix> d;
    for (int n = 1; n <= top; ++n) {
        std::vector<Triplet> tr;
        for (int p = 0; p <= n; ++p) {
            const int q = n - p;
            const auto& t = X.simplices(p, q);
            for (std::size_t k = 0; k < t.size(); ++k) {
                Simplex x = t.at(k);
                const int col = off[n][p] + static_cast<int>(k);
                for (int i = 0; i <= p && p >= 1; ++i) {
                    auto row = off[n - 1][p - 1] + static_cast<int>(X.index_of(p - 1, q, X.hface(p, q, i, x)));
                    tr.push_back({row, col, mpq_class(sign(i))});
                }
                for (int i = 0; i <= q && q >= 1; ++i) {
                    auto row = off[n - 1][p] + static_cast<int>(X.index_of(p, q - 1, X.vface(p, q, i, x)));
                    tr.push_back({row, col, mpq_class(sign(i) * sign(p))});
                }
            }
        }
        d.push_back(SparseMatrix::from_triplets(ranks[n - 1], ranks[n], std::move(tr)));
    }
    return ChainComplex(ring, ranks, std::move(d));
}

}  // namespace catcoh
