#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "critlib/errors.hpp"

namespace critlib {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// Dense row-major matrix over Integer or Rational.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
        std::size_t r = rows.size();
        std::size_t c = r ? rows.begin()->size() : 0;
        Matrix m(r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
            std::size_t j = 0;
            for (long v : row) m(i, j++) = v;
            ++i;
        }
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        std::size_t r = rows.size();
        std::size_t c = r ? rows.front().size() : 0;
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
        return out;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<T> apply(const std::vector<T>& x) const {
        if (x.size() != cols_) throw Error(ErrorCode::InvalidArgument, "dimension mismatch in matrix-vector product");
        std::vector<T> y(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            T s = 0;
            for (std::size_t j = 0; j < cols_; ++j)
                if (sgn((*this)(i, j)) != 0) s += (*this)(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "dimension mismatch in matrix product");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (sgn(aik) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::InvalidArgument, "dimension mismatch");
        Matrix c = a;
        for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::InvalidArgument, "dimension mismatch");
        Matrix c = a;
        for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    const std::vector<T>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

RationalMatrix to_rational(const IntMatrix& a);

struct SmithDecomposition {
    IntMatrix U;
    IntMatrix S;
    IntMatrix V;

    // Diagonal of S, length min(rows, cols).
    IntVector diagonal() const;
};

// Finite abelian group in invariant-factor form, Z^free_rank x Z/d1 x ... with d1 | d2 | ...
struct AbelianGroupInvariants {
    std::size_t free_rank = 0;
    IntVector torsion;

    // Build from any list of cyclic orders (0 means a copy of Z, 1 is dropped).
    static AbelianGroupInvariants from_cyclic_factors(const IntVector& orders);

    bool finite() const { return free_rank == 0; }
    // Product of the torsion factors; the order when finite.
    Integer torsion_order() const;
    std::string to_string() const;

    friend bool operator==(const AbelianGroupInvariants&, const AbelianGroupInvariants&) = default;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);
AbelianGroupInvariants cokernel_invariants(const IntMatrix& a);
AbelianGroupInvariants invariants_from_smith(const SmithDecomposition& snf);

Integer determinant(const IntMatrix& a);
Rational determinant(const RationalMatrix& a);
std::size_t rank(const IntMatrix& a);
RationalMatrix exact_inverse(const IntMatrix& a);
// Exact solution of A x = b for nonsingular square A.
RatVector solve(const IntMatrix& a, const IntVector& b);
std::optional<IntVector> nullspace_primitive(const IntMatrix& a);
Integer arborescence_count(const IntMatrix& l_reduced);
IntMatrix strike(const IntMatrix& a, std::size_t index);

// Z^rows / im(A), with canonical coset representatives taken from the SNF.
class LatticeQuotient {
public:
    explicit LatticeQuotient(const IntMatrix& a);

    std::size_t dimension() const { return snf_.U.rows(); }
    // Coordinates of x in the diagonal basis, reduced mod each invariant.
    IntVector canonical(const IntVector& x) const;
    // A representative of the same coset: U^{-1} applied to canonical(x).
    IntVector reduce(const IntVector& x) const;
    bool contains(const IntVector& x) const;
    bool equivalent(const IntVector& x, const IntVector& y) const;
    // If x is in im(A), an integer w with A w = x.
    std::optional<IntVector> preimage(const IntVector& x) const;
    const AbelianGroupInvariants& invariants() const { return invariants_; }
    const SmithDecomposition& smith() const { return snf_; }

private:
    SmithDecomposition snf_;
    IntMatrix u_inverse_;
    IntVector diag_;  // padded with zeros to length rows
    AbelianGroupInvariants invariants_;
};

IntMatrix unimodular_inverse(const IntMatrix& u);

// Vector helpers.
IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scale(const Integer& c, const IntVector& a);
Integer dot(const IntVector& a, const IntVector& b);
bool is_zero(const IntVector& a);
bool is_nonnegative(const IntVector& a);
IntVector unit_vector(std::size_t n, std::size_t i);
IntVector constant_vector(std::size_t n, long value);

std::string to_string(const IntVector& v);
std::string to_string(const IntMatrix& m);
std::string to_string(const RationalMatrix& m);

}  // namespace critlib
