#include "catcoh/linalg.hpp"

#include <algorithm>
#include <map>

namespace catcoh {

PrimeField::Elem PrimeField::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
    // Fermat: a^(p-2)
    Elem result = 1, base = a % p_;
    std::uint64_t e = p_ - 2;
    while (e) {
        if (e & 1) result = (result * base) % p_;
        base = (base * base) % p_;
        e >>= 1;
    }
    return result;
}

PrimeField::Elem PrimeField::from_rational(const mpq_class& x) const {
    Ring ring = Ring::prime_field(static_cast<std::uint32_t>(p_));
    return ring.normalize(x).get_num().get_ui();
}

// ------------------------------------------------------------ sparse rank

namespace {

template <class F>
using SparseRow = std::vector<std::pair<int, typename F::Elem>>;

// row := row - factor * pivot (both sorted by column).
template <class F>
SparseRow<F> axpy(const F& f, const SparseRow<F>& row, const typename F::Elem& factor, const SparseRow<F>& pivot) {
    SparseRow<F> out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.push_back(row[i++]);
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, f.neg(f.mul(factor, pivot[j].second)));
            ++j;
        } else {
            auto v = f.sub(row[i].second, f.mul(factor, pivot[j].second));
            if (!f.is_zero(v)) out.emplace_back(row[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

template <class F>
int sparse_rank_field(const F& f, const SparseMatrix& m) {
    std::map<int, SparseRow<F>> pivots;  // leading column -> row with leading entry 1
    for (int r = 0; r < m.rows(); ++r) {
        SparseRow<F> row;
        for (const auto& e : m.row(r)) {
            auto v = f.from_rational(e.value);
            if (!f.is_zero(v)) row.emplace_back(e.col, v);
        }
        while (!row.empty()) {
            int lead = row.front().first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                auto inv = f.inv(row.front().second);
                for (auto& e : row) e.second = f.mul(e.second, inv);
                pivots.emplace(lead, std::move(row));
                break;
            }
            row = axpy(f, row, row.front().second, it->second);
        }
    }
    return static_cast<int>(pivots.size());
}

}  // namespace

int sparse_rank(const SparseMatrix& m, const Ring& ring) {
    switch (ring.kind) {
        case RingKind::PrimeField: return sparse_rank_field(PrimeField(ring.p), m);
        case RingKind::Rational: return sparse_rank_field(RationalField(), m);
        case RingKind::Integer: break;
    }
    // Rank over Z equals rank over Q.
    return sparse_rank_field(RationalField(), m);
}

// ------------------------------------------------------ integer matrices

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_matrix(const Matrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1) throw InputError("non-integer entry in integer matrix");
            out(i, j) = m(i, j).get_num();
        }
    return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("integer product shape mismatch");
    IntMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const mpz_class& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
        }
    return out;
}

namespace {

// Smith reduction of S in place. When U and V are given, maintains A = U S V.
void smith_reduce(IntMatrix& S, IntMatrix* U, IntMatrix* V) {
    const int m = S.rows(), n = S.cols();
    auto swap_rows = [&](int a, int b) {
        if (a == b) return;
        for (int j = 0; j < n; ++j) std::swap(S(a, j), S(b, j));
        if (U)
            for (int i = 0; i < m; ++i) std::swap((*U)(i, a), (*U)(i, b));
    };
    auto swap_cols = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < m; ++i) std::swap(S(i, a), S(i, b));
        if (V)
            for (int j = 0; j < n; ++j) std::swap((*V)(a, j), (*V)(b, j));
    };
    // row_i += q * row_t
    auto add_row = [&](int i, int t, const mpz_class& q, int from_col) {
        for (int j = from_col; j < n; ++j)
            if (S(t, j) != 0) S(i, j) += q * S(t, j);
        if (U)
            for (int r = 0; r < m; ++r)
                if ((*U)(r, i) != 0) (*U)(r, t) -= q * (*U)(r, i);
    };
    // col_j += q * col_t
    auto add_col = [&](int j, int t, const mpz_class& q, int from_row) {
        for (int i = from_row; i < m; ++i)
            if (S(i, t) != 0) S(i, j) += q * S(i, t);
        if (V)
            for (int c = 0; c < n; ++c)
                if ((*V)(j, c) != 0) (*V)(t, c) -= q * (*V)(j, c);
    };
    auto negate_row = [&](int i) {
        for (int j = 0; j < n; ++j) S(i, j) = -S(i, j);
        if (U)
            for (int r = 0; r < m; ++r) (*U)(r, i) = -(*U)(r, i);
    };

    for (int t = 0; t < std::min(m, n); ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        int bi = -1, bj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (S(i, j) != 0 && (bi < 0 || abs(S(i, j)) < abs(S(bi, bj)))) {
                    bi = i;
                    bj = j;
                }
        if (bi < 0) break;
        swap_rows(t, bi);
        swap_cols(t, bj);
        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (S(i, t) == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), S(i, t).get_mpz_t(), S(t, t).get_mpz_t());
                add_row(i, t, -q, t);
                if (S(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                if (S(t, j) == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), S(t, j).get_mpz_t(), S(t, t).get_mpz_t());
                add_col(j, t, -q, t);
                if (S(t, j) != 0) clean = false;
            }
            if (!clean) {
                int pi = t, pj = t;
                for (int i = t + 1; i < m; ++i)
                    if (S(i, t) != 0 && abs(S(i, t)) < abs(S(pi, pj))) {
                        pi = i;
                        pj = t;
                    }
                for (int j = t + 1; j < n; ++j)
                    if (S(t, j) != 0 && abs(S(t, j)) < abs(S(pi, pj))) {
                        pi = t;
                        pj = j;
                    }
                swap_rows(t, pi);
                swap_cols(t, pj);
                continue;
            }
            // Divisibility: pivot must divide the whole trailing block.
            int bad = -1;
            for (int i = t + 1; i < m && bad < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (S(i, j) != 0 && !mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            add_row(t, bad, 1, t);
        }
        if (S(t, t) < 0) negate_row(t);
    }
}

}  // namespace

SmithForm snf(const IntMatrix& A) {
    SmithForm out{IntMatrix::identity(A.rows()), A, IntMatrix::identity(A.cols())};
    smith_reduce(out.S, &out.U, &out.V);
    return out;
}

std::vector<mpz_class> smith_diagonal(IntMatrix A) {
    smith_reduce(A, nullptr, nullptr);
    std::vector<mpz_class> d;
    for (int t = 0; t < std::min(A.rows(), A.cols()); ++t)
        if (A(t, t) != 0) d.push_back(A(t, t));
    return d;
}

mpz_class determinant(IntMatrix A) {
    const int n = A.rows();
    if (n != A.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (n == 0) return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (A(k, k) == 0) {
            int r = k + 1;
            while (r < n && A(r, k) == 0) ++r;
            if (r == n) return 0;
            for (int j = 0; j < n; ++j) std::swap(A(k, j), A(r, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class v = A(i, j) * A(k, k) - A(i, k) * A(k, j);
                mpz_divexact(A(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
        prev = A(k, k);
    }
    return sign * A(n - 1, n - 1);
}

// ---------------------------------------------------- sparse invariant factors

std::vector<mpz_class> invariant_factors(const SparseMatrix& m) {
    using Row = std::vector<std::pair<int, mpz_class>>;
    std::vector<Row> rows(m.rows());
    std::vector<std::vector<int>> col_rows(m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (const auto& e : m.row(r)) {
            if (e.value.get_den() != 1) throw InputError("non-integer entry in integer complex");
            rows[r].emplace_back(e.col, e.value.get_num());
            col_rows[e.col].push_back(r);
        }
    std::vector<char> active(m.rows(), 1);
    std::vector<char> col_dead(m.cols(), 0);
    std::size_t units = 0;

    auto find = [](const Row& row, int col) -> const mpz_class* {
        auto it = std::lower_bound(row.begin(), row.end(), col,
                                   [](const std::pair<int, mpz_class>& e, int c) { return e.first < c; });
        return (it != row.end() && it->first == col) ? &it->second : nullptr;
    };

    // Eliminate unit pivots; each removes one row and one column and records a factor 1.
    bool progress = true;
    while (progress) {
        progress = false;
        std::vector<int> order;
        for (int r = 0; r < m.rows(); ++r)
            if (active[r] && !rows[r].empty()) order.push_back(r);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return rows[a].size() < rows[b].size(); });
        for (int r : order) {
            if (!active[r] || rows[r].empty()) continue;
            int pc = -1;
            std::size_t best = 0;
            mpz_class unit;
            for (const auto& [c, v] : rows[r])
                if (v == 1 || v == -1) {
                    std::size_t load = col_rows[c].size();
                    if (pc < 0 || load < best) {
                        pc = c;
                        best = load;
                        unit = v;
                    }
                }
            if (pc < 0) continue;
            const Row pivot = rows[r];
            std::vector<int> targets = col_rows[pc];
            std::sort(targets.begin(), targets.end());
            targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
            for (int r2 : targets) {
                if (r2 == r || !active[r2]) continue;
                const mpz_class* v = find(rows[r2], pc);
                if (!v) continue;
                mpz_class factor = *v * unit;  // unit^{-1} == unit
                Row out;
                out.reserve(rows[r2].size() + pivot.size());
                const Row& a = rows[r2];
                std::size_t i = 0, j = 0;
                while (i < a.size() || j < pivot.size()) {
                    if (j == pivot.size() || (i < a.size() && a[i].first < pivot[j].first)) {
                        out.push_back(a[i++]);
                    } else if (i == a.size() || pivot[j].first < a[i].first) {
                        out.emplace_back(pivot[j].first, -factor * pivot[j].second);
                        col_rows[pivot[j].first].push_back(r2);
                        ++j;
                    } else {
                        mpz_class w = a[i].second - factor * pivot[j].second;
                        if (w != 0) out.emplace_back(a[i].first, std::move(w));
                        ++i;
                        ++j;
                    }
                }
                rows[r2] = std::move(out);
            }
            active[r] = 0;
            col_dead[pc] = 1;
            ++units;
            progress = true;
        }
    }

    std::vector<int> live_rows, live_cols;
    std::vector<int> col_index(m.cols(), -1);
    for (int r = 0; r < m.rows(); ++r)
        if (active[r] && !rows[r].empty()) {
            live_rows.push_back(r);
            for (const auto& e : rows[r])
                if (col_index[e.first] < 0) {
                    col_index[e.first] = 0;
                    live_cols.push_back(e.first);
                }
        }
    std::sort(live_cols.begin(), live_cols.end());
    for (std::size_t k = 0; k < live_cols.size(); ++k) col_index[live_cols[k]] = static_cast<int>(k);
    IntMatrix rest(static_cast<int>(live_rows.size()), static_cast<int>(live_cols.size()));
    for (std::size_t k = 0; k < live_rows.size(); ++k)
        for (const auto& e : rows[live_rows[k]]) rest(static_cast<int>(k), col_index[e.first]) = e.second;

    std::vector<mpz_class> factors(units, mpz_class(1));
    for (auto& d : smith_diagonal(std::move(rest))) factors.push_back(abs(d));
    std::sort(factors.begin(), factors.end());
    return factors;
}

}  // namespace catcoh
