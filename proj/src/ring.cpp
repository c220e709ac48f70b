#include "catcoh/ring.hpp"

#include <algorithm>
#include <sstream>

#include "catcoh/errors.hpp"

namespace catcoh {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Ring Ring::prime_field(std::uint32_t p) {
    if (!is_prime(p)) throw InputError("fp:" + std::to_string(p) + " is not a prime field");
    return {RingKind::PrimeField, p};
}

Ring Ring::parse(std::string_view text) {
    if (text == "int") return integers();
    if (text == "rat") return rationals();
    if (text.substr(0, 3) == "fp:") {
        std::string digits(text.substr(3));
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 9)
            throw InputError("bad ring '" + std::string(text) + "'");
        return prime_field(static_cast<std::uint32_t>(std::stoul(digits)));
    }
    throw InputError("unknown ring '" + std::string(text) + "' (expected int, rat or fp:<p>)");
}

std::string Ring::to_string() const {
    switch (kind) {
        case RingKind::Integer: return "int";
        case RingKind::Rational: return "rat";
        case RingKind::PrimeField: return "fp:" + std::to_string(p);
    }
    return "?";
}

mpq_class Ring::normalize(const mpq_class& x) const {
    switch (kind) {
        case RingKind::Rational: return x;
        case RingKind::Integer:
            if (x.get_den() != 1) throw InputError("non-integer entry " + x.get_str() + " over int");
            return x;
        case RingKind::PrimeField: {
            mpz_class m(p);
            mpz_class den = x.get_den() % m;
            if (den == 0) throw InputError("entry " + x.get_str() + " has denominator divisible by " + std::to_string(p));
            mpz_class inv;
            mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
            mpz_class r = (x.get_num() * inv) % m;
            if (r < 0) r += m;
            return mpq_class(r);
        }
    }
    return x;
}

bool Ring::equal(const mpq_class& a, const mpq_class& b) const {
    if (kind != RingKind::PrimeField) return a == b;
    return normalize(a - b) == 0;
}

bool Ring::is_zero(const mpq_class& a) const {
    if (kind != RingKind::PrimeField) return a == 0;
    return normalize(a) == 0;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = rows[i].at(j);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const mpq_class& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(-1); }

Matrix Matrix::scaled(const mpq_class& s) const {
    Matrix out = *this;
    for (auto& x : out.data_) x *= s;
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Matrix Matrix::normalized(const Ring& ring) const {
    Matrix out = *this;
    for (auto& x : out.data_) x = ring.normalize(x);
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const mpq_class& x) { return x == 0; });
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool Matrix::equals(const Matrix& o, const Ring& ring) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!ring.equal(data_[i], o.data_[i])) return false;
    return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::kron(const Matrix& o) const {
    Matrix out(rows_ * o.rows_, cols_ * o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            for (int k = 0; k < o.rows_; ++k)
                for (int l = 0; l < o.cols_; ++l) out(i * o.rows_ + k, j * o.cols_ + l) = (*this)(i, j) * o(k, l);
    return out;
}

std::string Matrix::to_string() const {
    std::ostringstream out;
    out << '[';
    for (int i = 0; i < rows_; ++i) {
        if (i) out << "; ";
        for (int j = 0; j < cols_; ++j) out << (j ? " " : "") << (*this)(i, j).get_str();
    }
    out << ']';
    return out.str();
}

// ---------------------------------------------------------- SparseMatrix

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), rows_data_(rows) {}

SparseMatrix SparseMatrix::from_triplets(int rows, int cols, std::vector<Triplet> triplets) {
    SparseMatrix m(rows, cols);
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (std::size_t i = 0; i < triplets.size();) {
        std::size_t j = i;
        mpq_class sum = 0;
        while (j < triplets.size() && triplets[j].row == triplets[i].row && triplets[j].col == triplets[i].col)
            sum += triplets[j++].value;
        const Triplet& t = triplets[i];
        if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
            throw std::out_of_range("sparse triplet outside matrix");
        if (sum != 0) m.rows_data_[t.row].push_back({t.col, sum});
        i = j;
    }
    return m;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& d) {
    SparseMatrix m(d.rows(), d.cols());
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j)
            if (d(i, j) != 0) m.rows_data_[i].push_back({j, d(i, j)});
    return m;
}

SparseMatrix SparseMatrix::identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.rows_data_[i].push_back({i, 1});
    return m;
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_data_) n += r.size();
    return n;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("sparse product shape mismatch");
    SparseMatrix out(rows_, o.cols_);
    std::vector<mpq_class> acc(o.cols_);
    std::vector<char> used(o.cols_, 0);
    std::vector<int> touched;
    for (int i = 0; i < rows_; ++i) {
        touched.clear();
        for (const auto& [k, a] : rows_data_[i])
            for (const auto& [j, b] : o.rows_data_[k]) {
                if (!used[j]) {
                    used[j] = 1;
                    acc[j] = 0;
                    touched.push_back(j);
                }
                acc[j] += a * b;
            }
        std::sort(touched.begin(), touched.end());
        for (int j : touched) {
            if (acc[j] != 0) out.rows_data_[i].push_back({j, acc[j]});
            used[j] = 0;
        }
    }
    return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("sparse sum shape mismatch");
    std::vector<Triplet> t;
    for (int i = 0; i < rows_; ++i) {
        for (const auto& e : rows_data_[i]) t.push_back({i, e.col, e.value});
        for (const auto& e : o.rows_data_[i]) t.push_back({i, e.col, e.value});
    }
    return from_triplets(rows_, cols_, std::move(t));
}

SparseMatrix SparseMatrix::scaled(const mpq_class& s) const {
    if (s == 0) return SparseMatrix(rows_, cols_);
    SparseMatrix out = *this;
    for (auto& r : out.rows_data_)
        for (auto& e : r) e.value *= s;
    return out;
}

SparseMatrix SparseMatrix::transposed() const {
    SparseMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& e : rows_data_[i]) out.rows_data_[e.col].push_back({i, e.value});
    return out;
}

Matrix SparseMatrix::to_dense() const {
    Matrix d(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& e : rows_data_[i]) d(i, e.col) = e.value;
    return d;
}

bool SparseMatrix::is_zero(const Ring& ring) const {
    for (const auto& r : rows_data_)
        for (const auto& e : r)
            if (!ring.is_zero(e.value)) return false;
    return true;
}

bool SparseMatrix::equals(const SparseMatrix& o, const Ring& ring) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    return (*this + o.scaled(-1)).is_zero(ring);
}

}  // namespace catcoh
