#include "valfield/matrix.hpp"

#include "valfield/errors.hpp"

namespace valfield {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw FieldMismatch();
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(r, piv);
        m.scale_row(r, m(r, c).inverse());
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            m.add_row_multiple(i, r, -m(i, c));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), e_(rows * cols, Scalar(field_)) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows * cols) throw DimensionMismatch("matrix entry count does not match shape");
    for (const auto& x : e_)
        if (!(x.field() == field_)) throw FieldMismatch();
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(field, 1L);
    return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<Vec>& rows, std::size_t cols) {
    std::vector<Scalar> e;
    e.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw DimensionMismatch("ragged matrix rows");
        e.insert(e.end(), r.begin(), r.end());
    }
    return Matrix(field, rows.size(), cols, std::move(e));
}

Matrix Matrix::diagonal(const Field& field, const Vec& diag) {
    Matrix m(field, diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

Matrix Matrix::column(const Field& field, const Vec& v) { return Matrix(field, v.size(), 1, v); }

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(e_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               e_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Matrix::col(std::size_t j) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::columns(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw DimensionMismatch("column range out of bounds");
    Matrix m(field_, rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
    return m;
}

Matrix Matrix::rows_range(std::size_t first, std::size_t count) const {
    if (first + count > rows_) throw DimensionMismatch("row range out of bounds");
    Matrix m(field_, count, cols_);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(first + i, j);
    return m;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void Matrix::add_row_multiple(std::size_t dst, std::size_t src, const Scalar& factor) {
    if (factor.is_zero()) return;
    for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(src, j).is_zero()) (*this)(dst, j) += factor * (*this)(src, j);
}

void Matrix::add_col_multiple(std::size_t dst, std::size_t src, const Scalar& factor) {
    if (factor.is_zero()) return;
    for (std::size_t i = 0; i < rows_; ++i)
        if (!(*this)(i, src).is_zero()) (*this)(i, dst) += factor * (*this)(i, src);
}

void Matrix::scale_row(std::size_t i, const Scalar& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) *= factor;
}

void Matrix::scale_col(std::size_t j, const Scalar& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) *= factor;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
        }
    return c;
}

Vec operator*(const Matrix& a, const Vec& x) {
    if (a.cols_ != x.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    Vec y = zero_vector(a.field_, a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j)
            if (!a(i, j).is_zero() && !x[j].is_zero()) y[i] += a(i, j) * x[j];
    return y;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    Matrix c = a;
    for (std::size_t k = 0; k < c.e_.size(); ++k) c.e_[k] += b.e_[k];
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference shape mismatch");
    Matrix c = a;
    for (std::size_t k = 0; k < c.e_.size(); ++k) c.e_[k] -= b.e_[k];
    return c;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.e_) x = s * x;
    return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows()) throw DimensionMismatch("hstack row mismatch");
    Matrix m(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.cols()) throw DimensionMismatch("vstack column mismatch");
    Matrix m(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
    return m;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    Matrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

Scalar determinant(const Matrix& m) {
    if (!m.is_square()) throw NonSquare();
    const std::size_t n = m.rows();
    const Field& f = m.field();
    if (n == 0) return Scalar(f, 1L);
    Matrix a = m;
    Scalar sign(f, 1L);
    Scalar prev(f, 1L);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && a(piv, k).is_zero()) ++piv;
            if (piv == n) return Scalar(f);
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = Scalar(f);
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::size_t rank(const Matrix& m) {
    Matrix a = m;
    return rref(a).size();
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw NonSquare();
    const std::size_t n = m.rows();
    Matrix aug = hstack(m, Matrix::identity(m.field(), n));
    auto piv = rref(aug);
    if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) throw SingularMatrix();
    return aug.columns(n, n);
}

Matrix kernel_basis(const Matrix& m) {
    Matrix a = m;
    auto piv = rref(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    const std::size_t dim = m.cols() - piv.size();
    Matrix k(m.field(), m.cols(), dim);
    std::size_t col = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        k(free, col) = Scalar(m.field(), 1L);
        for (std::size_t r = 0; r < piv.size(); ++r) k(piv[r], col) = -a(r, free);
        ++col;
    }
    return k;
}

std::optional<Vec> solve_affine(const Matrix& m, const Vec& rhs) {
    if (rhs.size() != m.rows()) throw DimensionMismatch("right-hand side length mismatch");
    Matrix aug = hstack(m, Matrix::column(m.field(), rhs));
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
    Vec x = zero_vector(m.field(), m.cols());
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, m.cols());
    return x;
}

ExtValuation min_entry_valuation(const Matrix& m) {
    ExtValuation best = ExtValuation::infinity();
    for (const auto& x : m.entries()) best = min(best, x.valuation());
    return best;
}

bool is_integral(const Matrix& m) {
    for (const auto& x : m.entries())
        if (!x.is_integral()) return false;
    return true;
}

} // namespace valfield
