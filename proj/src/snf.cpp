#include "valfield/snf.hpp"

#include <algorithm>
#include <cassert>

#include "valfield/errors.hpp"

namespace valfield {

SnfDecomposition smith_normal_form(const Matrix& m) {
    const Field& f = m.field();
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();

    Matrix a = m;
    Matrix q = Matrix::identity(f, rows);
    Matrix q_inv = Matrix::identity(f, rows);
    Matrix p = Matrix::identity(f, cols);
    Matrix p_inv = Matrix::identity(f, cols);
    std::vector<std::int64_t> exponents;

    // Invariant: q * m * p_inv == a.
    //  row op  a <- E a:      q <- E q,          q_inv <- q_inv E^-1
    //  col op  a <- a E:      p_inv <- p_inv E,  p <- E^-1 p
    for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
        std::size_t pr = rows, pc = cols;
        ExtValuation best = ExtValuation::infinity();
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j) {
                ExtValuation v = a(i, j).valuation();
                if (v < best) {
                    best = v;
                    pr = i;
                    pc = j;
                }
            }
        if (best.is_infinite()) break;

        a.swap_rows(k, pr);
        q.swap_rows(k, pr);
        q_inv.swap_cols(k, pr);
        a.swap_cols(k, pc);
        p_inv.swap_cols(k, pc);
        p.swap_rows(k, pc);

        const Scalar pivot_inv = a(k, k).inverse();
        for (std::size_t i = k + 1; i < rows; ++i) {
            if (a(i, k).is_zero()) continue;
            Scalar factor = -(a(i, k) * pivot_inv);
            a.add_row_multiple(i, k, factor);
            q.add_row_multiple(i, k, factor);
            q_inv.add_col_multiple(k, i, -factor);
        }
        for (std::size_t j = k + 1; j < cols; ++j) {
            if (a(k, j).is_zero()) continue;
            Scalar factor = -(a(k, j) * pivot_inv);
            a.add_col_multiple(j, k, factor);
            p_inv.add_col_multiple(j, k, factor);
            p.add_row_multiple(k, j, -factor);
        }

        // Normalize the pivot to an exact uniformizer power with a unit row scaling.
        const std::int64_t e = best.value();
        Scalar unit = power_of_uniformizer(f, e) * pivot_inv;
        if (!unit.is_one()) {
            a.scale_row(k, unit);
            q.scale_row(k, unit);
            q_inv.scale_col(k, unit.inverse());
        }
        exponents.push_back(e);
    }
    assert(std::is_sorted(exponents.begin(), exponents.end()));

    return SnfDecomposition{std::move(q), std::move(a), std::move(p), std::move(q_inv), std::move(p_inv),
                            std::move(exponents)};
}

bool is_unimodular(const Matrix& m) {
    if (!m.is_square() || !is_integral(m)) return false;
    return determinant(m).valuation() == ExtValuation(0);
}

} // namespace valfield
