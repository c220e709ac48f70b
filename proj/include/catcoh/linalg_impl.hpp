#pragma once

// Template definitions for linalg.hpp.

#include <stdexcept>
#include <utility>

#include "catcoh/errors.hpp"

namespace catcoh {

template <class F>
FieldMatrix<F> to_field(const F& f, const Matrix& m) {
    FieldMatrix<F> out(m.rows(), m.cols(), f);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = f.from_rational(m(i, j));
    return out;
}

template <class F>
FieldMatrix<F> to_field(const F& f, const SparseMatrix& m) {
    FieldMatrix<F> out(m.rows(), m.cols(), f);
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& e : m.row(i)) out.at(i, e.col) = f.from_rational(e.value);
    return out;
}

template <class F>
Matrix from_field(const F& f, const FieldMatrix<F>& m) {
    Matrix out(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out(i, j) = f.to_rational(m.at(i, j));
    return out;
}

template <class F>
FieldMatrix<F> multiply(const F& f, const FieldMatrix<F>& x, const FieldMatrix<F>& y) {
    if (x.cols != y.rows) throw std::invalid_argument("field matrix product shape mismatch");
    FieldMatrix<F> out(x.rows, y.cols, f);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const auto& a = x.at(i, k);
            if (f.is_zero(a)) continue;
            for (int j = 0; j < y.cols; ++j) out.at(i, j) = f.add(out.at(i, j), f.mul(a, y.at(k, j)));
        }
    return out;
}

template <class F>
FieldMatrix<F> hconcat(const FieldMatrix<F>& x, const FieldMatrix<F>& y) {
    if (x.rows != y.rows) throw std::invalid_argument("hconcat row mismatch");
    FieldMatrix<F> out;
    out.rows = x.rows;
    out.cols = x.cols + y.cols;
    out.a.reserve(static_cast<std::size_t>(out.rows) * out.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) out.a.push_back(x.at(i, j));
        for (int j = 0; j < y.cols; ++j) out.a.push_back(y.at(i, j));
    }
    return out;
}

template <class F>
FieldMatrix<F> select_rows(const FieldMatrix<F>& m, int first, int count) {
    FieldMatrix<F> out;
    out.rows = count;
    out.cols = m.cols;
    out.a.assign(m.a.begin() + static_cast<std::ptrdiff_t>(first) * m.cols,
                 m.a.begin() + static_cast<std::ptrdiff_t>(first + count) * m.cols);
    return out;
}

template <class F>
FieldMatrix<F> select_cols(const FieldMatrix<F>& m, const std::vector<int>& cols) {
    FieldMatrix<F> out;
    out.rows = m.rows;
    out.cols = static_cast<int>(cols.size());
    out.a.reserve(static_cast<std::size_t>(out.rows) * out.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int c : cols) out.a.push_back(m.at(i, c));
    return out;
}

template <class F>
std::vector<int> rref(const F& f, FieldMatrix<F>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pr = -1;
        for (int r = row; r < m.rows; ++r)
            if (!f.is_zero(m.at(r, col))) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(row, j));
        auto inv = f.inv(m.at(row, col));
        for (int j = col; j < m.cols; ++j) m.at(row, j) = f.mul(m.at(row, j), inv);
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || f.is_zero(m.at(r, col))) continue;
            auto factor = m.at(r, col);
            for (int j = col; j < m.cols; ++j) m.at(r, j) = f.sub(m.at(r, j), f.mul(factor, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
int rank(const F& f, FieldMatrix<F> m) {
    return static_cast<int>(rref(f, m).size());
}

template <class F>
FieldMatrix<F> kernel_basis(const F& f, const FieldMatrix<F>& m) {
    FieldMatrix<F> r = m;
    auto pivots = rref(f, r);
    std::vector<char> is_pivot(m.cols, 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    FieldMatrix<F> k(m.cols, static_cast<int>(free_cols.size()), f);
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        int fc = free_cols[t];
        k.at(fc, static_cast<int>(t)) = f.one();
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            k.at(pivots[pr], static_cast<int>(t)) = f.neg(r.at(static_cast<int>(pr), fc));
    }
    return k;
}

template <class F>
std::vector<int> independent_columns(const F& f, const FieldMatrix<F>& m) {
    FieldMatrix<F> r = m;
    return rref(f, r);
}

template <class F>
Coordinates<F>::Coordinates(const F& f, const FieldMatrix<F>& basis)
    : f_(f), dim_(basis.cols), ambient_(basis.rows) {
    // Row-reduce [B | I]; because B has independent columns its echelon form is [I; 0].
    FieldMatrix<F> id(ambient_, ambient_, f);
    for (int i = 0; i < ambient_; ++i) id.at(i, i) = f.one();
    FieldMatrix<F> aug = hconcat(basis, id);
    int row = 0;
    for (int col = 0; col < dim_; ++col) {
        int pr = -1;
        for (int r = row; r < ambient_; ++r)
            if (!f.is_zero(aug.at(r, col))) {
                pr = r;
                break;
            }
        if (pr < 0) throw ComplexError("Coordinates: basis columns are dependent");
        if (pr != row)
            for (int j = 0; j < aug.cols; ++j) std::swap(aug.at(pr, j), aug.at(row, j));
        auto inv = f.inv(aug.at(row, col));
        for (int j = 0; j < aug.cols; ++j) aug.at(row, j) = f.mul(aug.at(row, j), inv);
        for (int r = 0; r < ambient_; ++r) {
            if (r == row || f.is_zero(aug.at(r, col))) continue;
            auto factor = aug.at(r, col);
            for (int j = 0; j < aug.cols; ++j) aug.at(r, j) = f.sub(aug.at(r, j), f.mul(factor, aug.at(row, j)));
        }
        ++row;
    }
    std::vector<int> right;
    for (int j = dim_; j < aug.cols; ++j) right.push_back(j);
    transform_ = select_cols(aug, right);
}

template <class F>
FieldMatrix<F> Coordinates<F>::solve(const FieldMatrix<F>& v) const {
    if (v.rows != ambient_) throw std::invalid_argument("Coordinates::solve: ambient mismatch");
    FieldMatrix<F> w = multiply(f_, transform_, v);
    for (int r = dim_; r < ambient_; ++r)
        for (int c = 0; c < v.cols; ++c)
            if (!f_.is_zero(w.at(r, c))) throw ComplexError("Coordinates::solve: vector outside span");
    return select_rows(w, 0, dim_);
}

}  // namespace catcoh
