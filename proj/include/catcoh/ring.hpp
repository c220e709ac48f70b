#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace catcoh {

enum class RingKind { Integer, Rational, PrimeField };

/// Coefficient ring tag: Z, Q or F_p.
struct Ring {
    RingKind kind = RingKind::Integer;
    std::uint32_t p = 0;

    static Ring integers() { return {RingKind::Integer, 0}; }
    static Ring rationals() { return {RingKind::Rational, 0}; }
    static Ring prime_field(std::uint32_t p);
    /// Accepts "int", "rat", "fp:<p>".
    static Ring parse(std::string_view text);

    bool is_field() const { return kind != RingKind::Integer; }
    std::string to_string() const;

    /// Canonical representative of x in this ring: a residue 0..p-1 for F_p,
    /// x itself otherwise. Throws InputError for a non-integer over Z.
    mpq_class normalize(const mpq_class& x) const;
    bool equal(const mpq_class& a, const mpq_class& b) const;
    bool is_zero(const mpq_class& a) const;

    friend bool operator==(const Ring& a, const Ring& b) { return a.kind == b.kind && a.p == b.p; }
};

bool is_prime(std::uint64_t n);

/// Small dense matrix with exact rational entries; holds coefficient data
/// (module maps, coefficient-system maps). Ring semantics come from context.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);

    static Matrix identity(int n);
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
    static Matrix from_rows(const std::vector<std::vector<long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpq_class& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const mpq_class& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    Matrix operator*(const Matrix& other) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix scaled(const mpq_class& s) const;
    Matrix transposed() const;
    Matrix normalized(const Ring& ring) const;
    bool is_zero() const;
    bool is_identity() const;
    bool equals(const Matrix& other, const Ring& ring) const;
    friend bool operator==(const Matrix& a, const Matrix& b);

    /// Kronecker product.
    Matrix kron(const Matrix& other) const;
    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<mpq_class> data_;
};

struct Triplet {
    int row;
    int col;
    mpq_class value;
};

/// Row-compressed sparse matrix with exact rational entries; the storage of
/// every coboundary, boundary and cochain-map matrix.
class SparseMatrix {
public:
    struct Entry {
        int col;
        mpq_class value;
    };

    SparseMatrix() = default;
    SparseMatrix(int rows, int cols);
    /// Duplicate positions are summed; zeros dropped.
    static SparseMatrix from_triplets(int rows, int cols, std::vector<Triplet> triplets);
    static SparseMatrix from_dense(const Matrix& m);
    static SparseMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Entry>& row(int r) const { return rows_data_[r]; }
    std::size_t nonzeros() const;

    SparseMatrix operator*(const SparseMatrix& other) const;
    SparseMatrix operator+(const SparseMatrix& other) const;
    SparseMatrix scaled(const mpq_class& s) const;
    SparseMatrix transposed() const;
    Matrix to_dense() const;
    /// True when every entry vanishes in the given ring.
    bool is_zero(const Ring& ring) const;
    bool equals(const SparseMatrix& other, const Ring& ring) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::vector<Entry>> rows_data_;
};

}  // namespace catcoh
