#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "catcoh/ring.hpp"

namespace catcoh {

// ---------------------------------------------------------------- fields

class PrimeField {
public:
    using Elem = std::uint64_t;
    PrimeField() : p_(2) {}
    explicit PrimeField(std::uint32_t p) : p_(p) {}

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(Elem a, Elem b) const { return (a + b) % p_; }
    Elem sub(Elem a, Elem b) const { return (a + p_ - b) % p_; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem inv(Elem a) const;
    bool is_zero(Elem a) const { return a == 0; }
    Elem from_rational(const mpq_class& x) const;
    mpq_class to_rational(Elem a) const { return mpq_class(static_cast<unsigned long>(a)); }
    std::uint32_t characteristic() const { return p_; }

private:
    std::uint64_t p_;
};

class RationalField {
public:
    using Elem = mpq_class;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const { return 1 / a; }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem from_rational(const mpq_class& x) const { return x; }
    mpq_class to_rational(const Elem& a) const { return a; }
};

/// Dense matrix over a field F, row-major.
template <class F>
struct FieldMatrix {
    using Elem = typename F::Elem;
    int rows = 0;
    int cols = 0;
    std::vector<Elem> a;

    FieldMatrix() = default;
    FieldMatrix(int r, int c, const F& f) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, f.zero()) {}
    Elem& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Elem& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

template <class F>
FieldMatrix<F> to_field(const F& f, const Matrix& m);
template <class F>
FieldMatrix<F> to_field(const F& f, const SparseMatrix& m);
template <class F>
Matrix from_field(const F& f, const FieldMatrix<F>& m);
template <class F>
FieldMatrix<F> multiply(const F& f, const FieldMatrix<F>& x, const FieldMatrix<F>& y);
/// Horizontal concatenation [x | y].
template <class F>
FieldMatrix<F> hconcat(const FieldMatrix<F>& x, const FieldMatrix<F>& y);
template <class F>
FieldMatrix<F> select_rows(const FieldMatrix<F>& m, int first, int count);
template <class F>
FieldMatrix<F> select_cols(const FieldMatrix<F>& m, const std::vector<int>& cols);

/// In-place reduced row echelon form; returns pivot columns.
template <class F>
std::vector<int> rref(const F& f, FieldMatrix<F>& m);
template <class F>
int rank(const F& f, FieldMatrix<F> m);
/// Columns form a basis of the null space.
template <class F>
FieldMatrix<F> kernel_basis(const F& f, const FieldMatrix<F>& m);
/// Indices of a maximal linearly independent prefix-greedy subset of columns.
template <class F>
std::vector<int> independent_columns(const F& f, const FieldMatrix<F>& m);

/// Coordinates of vectors with respect to a basis of a subspace: given
/// independent columns B, solve B x = v (v is required to lie in span B).
template <class F>
class Coordinates {
public:
    Coordinates() = default;
    Coordinates(const F& f, const FieldMatrix<F>& basis);
    /// Returns coordinates of each column of v; throws ComplexError when a
    /// column is outside the span.
    FieldMatrix<F> solve(const FieldMatrix<F>& v) const;
    int dimension() const { return dim_; }

private:
    F f_{};
    int dim_ = 0;
    int ambient_ = 0;
    FieldMatrix<F> transform_;  // T with T * basis = [I; 0]
};

// ---------------------------------------------------------- sparse ranks

/// Rank of a sparse matrix over Q or F_p (ring must be a field).
int sparse_rank(const SparseMatrix& m, const Ring& ring);

/// Nonzero invariant factors of an integer sparse matrix (ascending, with
/// divisibility chain; unit factors included).
std::vector<mpz_class> invariant_factors(const SparseMatrix& m);

// ---------------------------------------------------------- dense integers

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
    static IntMatrix identity(int n);
    static IntMatrix from_matrix(const Matrix& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpz_class& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const mpz_class& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    IntMatrix operator*(const IntMatrix& o) const;
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<mpz_class> a_;
};

struct SmithForm {
    IntMatrix U;
    IntMatrix S;
    IntMatrix V;
};

/// A = U * S * V with U, V unimodular and S diagonal, d_1 | d_2 | ... .
SmithForm snf(const IntMatrix& A);
/// Nonzero diagonal of the Smith form of a dense integer matrix (no transforms).
std::vector<mpz_class> smith_diagonal(IntMatrix A);
/// Exact determinant (Bareiss).
mpz_class determinant(IntMatrix A);

}  // namespace catcoh

#include "catcoh/linalg_impl.hpp"
