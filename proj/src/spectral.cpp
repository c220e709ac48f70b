// Spectral sequence of the column filtration F^p Tot = sum_{p' >= p} D^{p',*}.
//
// For x in F^p of total degree n write x = (x_p, x_{p+1}, ...). With
//   Z_r^{p,q} = { x_p : x in F^p, dx in F^{p+r} }
//   B_r^{p,q} = { (dy)_p : y in F^{p-r+1}, dy in F^p }
// the page is E_r^{p,q} = Z_r / B_r, and d_r[x_p] = [(dx)_{p+r}].

#include <algorithm>

#include "catcoh/complexes.hpp"
#include "catcoh/errors.hpp"
#include "catcoh/linalg.hpp"

namespace catcoh {

namespace {

template <class F>
class PageBuilder {
public:
    using FM = FieldMatrix<F>;

    PageBuilder(const F& f, const DoubleCochainComplex& D) : f_(f), D_(D), top_(D.total_top()) {
        h_.resize(top_ + 1);
        v_.resize(top_ + 1);
        for (int p = 0; p < top_; ++p)
            for (int q = 0; p + q < top_; ++q) {
                h_[p].push_back(to_field(f_, D.horizontal(p, q)));
                v_[p].push_back(to_field(f_, D.vertical(p, q)));
            }
    }

    struct Entry {
        int dim = 0;
        FM b_basis;     // columns spanning B_r (independent)
        FM complement;  // columns completing b_basis to a basis of Z_r
        FM lifts;       // full lifts x of the complement columns (components p..p+r-1)
        std::vector<int> lift_offsets;
        Coordinates<F> coords;  // w.r.t. [b_basis | complement]
    };

    Entry entry(int r, int p, int q) const {
        const int n = p + q;
        Entry e;
        // ---- Z_r
        const int pmax = std::min(p + r - 1, n);
        std::vector<int> xoff;
        int xcols = 0;
        for (int pp = p; pp <= pmax; ++pp) {
            xoff.push_back(xcols);
            xcols += D_.rank(pp, n - pp);
        }
        std::vector<int> roff;
        int rows = 0;
        const int cmax = std::min(p + r - 1, n + 1);
        for (int pc = p; pc <= cmax; ++pc) {
            roff.push_back(rows);
            rows += D_.rank(pc, n + 1 - pc);
        }
        FM cst(rows, xcols, f_);
        for (int pc = p; pc <= cmax; ++pc) {
            int r0 = roff[pc - p];
            if (pc - 1 >= p && pc - 1 <= pmax) place(cst, r0, xoff[pc - 1 - p], h_[pc - 1][n - (pc - 1)], false);
            if (pc <= pmax) place(cst, r0, xoff[pc - p], v_[pc][n - pc], pc % 2 == 1);
        }
        FM kernel = kernel_basis(f_, cst);
        const int dp = D_.rank(p, q);
        FM proj = select_rows(kernel, 0, dp);

        // ---- B_r
        FM bgen(dp, 0, f_);
        if (n >= 1) {
            const int lo = std::max(0, p - r + 1);
            const int hi = std::min(p, n - 1);
            std::vector<int> yoff;
            int ycols = 0;
            for (int pp = lo; pp <= hi; ++pp) {
                yoff.push_back(ycols);
                ycols += D_.rank(pp, n - 1 - pp);
            }
            int crow = 0;
            std::vector<int> coff;
            for (int pc = lo; pc <= p - 1; ++pc) {
                coff.push_back(crow);
                crow += D_.rank(pc, n - pc);
            }
            FM ycst(crow, ycols, f_);
            for (int pc = lo; pc <= p - 1; ++pc) {
                if (pc - 1 >= lo) place(ycst, coff[pc - lo], yoff[pc - 1 - lo], h_[pc - 1][n - 1 - (pc - 1)], false);
                if (pc <= hi) place(ycst, coff[pc - lo], yoff[pc - lo], v_[pc][n - 1 - pc], pc % 2 == 1);
            }
            FM ymap(dp, ycols, f_);
            if (p - 1 >= lo && p - 1 <= hi) place(ymap, 0, yoff[p - 1 - lo], h_[p - 1][n - p], false);
            if (p <= hi) place(ymap, 0, yoff[p - lo], v_[p][n - 1 - p], p % 2 == 1);
            FM ykernel = crow > 0 ? kernel_basis(f_, ycst) : identity(ycols);
            bgen = multiply(f_, ymap, ykernel);
        }

        FM both = hconcat(bgen, proj);
        auto indep = independent_columns(f_, both);
        std::vector<int> bcols, hcols;
        for (int c : indep) (c < bgen.cols ? bcols : hcols).push_back(c);
        if (static_cast<int>(indep.size()) != rank(f_, proj))
            throw ComplexError("spectral sequence: B_r not contained in Z_r");
        e.b_basis = select_cols(bgen, bcols);
        std::vector<int> hk;
        for (int c : hcols) hk.push_back(c - bgen.cols);
        e.complement = select_cols(proj, hk);
        e.lifts = select_cols(kernel, hk);
        e.lift_offsets = xoff;
        e.dim = static_cast<int>(hk.size());
        e.coords = Coordinates<F>(f_, hconcat(e.b_basis, e.complement));
        return e;
    }

    // d_r from (p,q) into target entry, in complement coordinates.
    Matrix differential(int r, int p, int q, const Entry& src, const Entry& tgt) const {
        const int n = p + q;
        const int pl = p + r - 1;  // component feeding (dx)_{p+r}
        const int comp_rows = D_.rank(pl, n - pl);
        FM xl(comp_rows, src.dim, f_);
        for (int c = 0; c < src.dim; ++c)
            for (int i = 0; i < comp_rows; ++i) xl.at(i, c) = src.lifts.at(src.lift_offsets[pl - p] + i, c);
        FM image = multiply(f_, h_[pl][n - pl], xl);
        FM coords = tgt.coords.solve(image);
        FM out = select_rows(coords, tgt.b_basis.cols, tgt.dim);
        return from_field(f_, out);
    }

private:
    void place(FM& dst, int r0, int c0, const FM& block, bool negate) const {
        for (int i = 0; i < block.rows; ++i)
            for (int j = 0; j < block.cols; ++j) {
                auto v = block.at(i, j);
                dst.at(r0 + i, c0 + j) = negate ? f_.neg(v) : v;
            }
    }
    FM identity(int n) const {
        FM m(n, n, f_);
        for (int i = 0; i < n; ++i) m.at(i, i) = f_.one();
        return m;
    }

    F f_;
    const DoubleCochainComplex& D_;
    int top_;
    std::vector<std::vector<FM>> h_, v_;
};

template <class F>
std::vector<SSPage> pages_over(const F& f, const DoubleCochainComplex& D, int r_max) {
    PageBuilder<F> builder(f, D);
    const int window = D.total_top() - 1;
    if (window < 0) throw std::out_of_range("double complex window too small for any page");
    const int r_last = std::min(r_max, window + 2);
    std::vector<SSPage> pages;
    for (int r = 1; r <= r_last; ++r) {
        SSPage page;
        page.field = D.ring();
        page.r = r;
        page.window = window;
        std::map<std::pair<int, int>, typename PageBuilder<F>::Entry> entries;
        for (int n = 0; n <= window; ++n)
            for (int p = 0; p <= n; ++p) {
                auto e = builder.entry(r, p, n - p);
                page.dims[{p, n - p}] = e.dim;
                entries.emplace(std::make_pair(p, n - p), std::move(e));
            }
        for (const auto& [pq, e] : entries) {
            auto [p, q] = pq;
            int tp = p + r, tq = q - r + 1;
            if (tq < 0 || tp + tq > window) continue;
            page.differentials[pq] = builder.differential(r, p, q, e, entries.at({tp, tq}));
        }
        pages.push_back(std::move(page));
    }
    return pages;
}

}  // namespace

std::vector<SSPage> ss_pages(const DoubleCochainComplex& D, int r_max) {
    if (r_max < 1) throw std::invalid_argument("ss_pages: r_max must be >= 1");
    switch (D.ring().kind) {
        case RingKind::PrimeField: return pages_over(PrimeField(D.ring().p), D, r_max);
        case RingKind::Rational: return pages_over(RationalField(), D, r_max);
        case RingKind::Integer: break;
    }
    throw InputError("spectral sequence pages need a field (got int)");
}

}  // namespace catcoh
