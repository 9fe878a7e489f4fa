#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "valfield/scalar.hpp"

namespace valfield {

/// Dense row-major matrix over K. Empty dimensions are allowed.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Matrix identity(const Field& field, std::size_t n);
    static Matrix from_rows(const Field& field, const std::vector<Vec>& rows, std::size_t cols);
    static Matrix diagonal(const Field& field, const Vec& diag);
    static Matrix column(const Field& field, const Vec& v);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    const Scalar& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Scalar& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    const std::vector<Scalar>& entries() const { return e_; }

    Matrix transpose() const;
    /// Columns [first, first + count).
    Matrix columns(std::size_t first, std::size_t count) const;
    Matrix rows_range(std::size_t first, std::size_t count) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Scalar& factor);
    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Scalar& factor);
    void scale_row(std::size_t i, const Scalar& factor);
    void scale_col(std::size_t j, const Scalar& factor);

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vec operator*(const Matrix& a, const Vec& x);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> e_;
};

/// [a | b]
Matrix hstack(const Matrix& a, const Matrix& b);
/// [a ; b]
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const Matrix& a, const Matrix& b);

/// Fraction-free Bareiss elimination. Throws NonSquare.
Scalar determinant(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Throws NonSquare or SingularMatrix.
Matrix inverse(const Matrix& m);
/// Matrix whose columns form a basis of the right kernel (cols() x dim ker).
Matrix kernel_basis(const Matrix& m);
/// Some x with m x = rhs, or nullopt if the system is inconsistent.
std::optional<Vec> solve_affine(const Matrix& m, const Vec& rhs);

/// Minimum valuation over all entries; infinity for the zero matrix.
ExtValuation min_entry_valuation(const Matrix& m);
/// True iff every entry is integral.
bool is_integral(const Matrix& m);

} // namespace valfield
