#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "valfield/matrix.hpp"
#include "valfield/polyhedron.hpp"
#include "valfield/scalar.hpp"

namespace vt {

using namespace valfield;

inline Scalar S(const Field& f, const std::string& text) { return parse_scalar(f, text); }

inline Vec V(const Field& f, std::initializer_list<const char*> xs) {
    Vec out;
    for (const char* x : xs) out.push_back(parse_scalar(f, x));
    return out;
}

inline Matrix M(const Field& f, std::initializer_list<std::initializer_list<const char*>> rows) {
    std::vector<Vec> rs;
    std::size_t cols = 0;
    for (const auto& r : rows) {
        Vec row;
        for (const char* x : r) row.push_back(parse_scalar(f, x));
        cols = row.size();
        rs.push_back(std::move(row));
    }
    return Matrix::from_rows(f, rs, cols);
}

/// Hand-rolled generators over a seeded engine.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool chance(int percent) { return range(0, 99) < percent; }

    /// A unit of O_K: an integer prime to p, or a small polynomial with
    /// nonzero constant term (optionally divided by another one).
    Scalar unit(const Field& f) {
        if (f.is_padic()) {
            std::int64_t p = f.prime();
            std::int64_t m = 0;
            while (m % p == 0) m = range(-12, 12);
            std::int64_t d = 0;
            while (d % p == 0) d = range(1, 6);
            return Scalar(f, mpq_class(mpz_class(static_cast<long>(m)), mpz_class(static_cast<long>(d))));
        }
        Scalar out = laurent_unit(f);
        if (chance(25)) out /= laurent_unit(f);
        return out;
    }

    /// u * pi^k with k in [kmin, kmax], or zero with the given probability.
    Scalar scalar(const Field& f, std::int64_t kmin, std::int64_t kmax, int zero_percent = 15) {
        if (chance(zero_percent)) return Scalar(f);
        return unit(f) * power_of_uniformizer(f, range(kmin, kmax));
    }

    Vec vec(const Field& f, std::size_t n, std::int64_t kmin, std::int64_t kmax, int zero_percent = 15) {
        Vec out;
        for (std::size_t i = 0; i < n; ++i) out.push_back(scalar(f, kmin, kmax, zero_percent));
        return out;
    }

    Matrix matrix(const Field& f, std::size_t r, std::size_t c, std::int64_t kmin, std::int64_t kmax,
                  int zero_percent = 15) {
        Matrix m(f, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = scalar(f, kmin, kmax, zero_percent);
        return m;
    }

    /// Random element of GL_n(O_K): product of unit diagonal, unit lower
    /// and unit upper triangular factors with integral off-diagonal entries.
    Matrix unimodular(const Field& f, std::size_t n) {
        Matrix l = Matrix::identity(f, n), u = Matrix::identity(f, n);
        for (std::size_t i = 0; i < n; ++i) {
            u(i, i) = unit(f);
            for (std::size_t j = 0; j < i; ++j) {
                l(i, j) = scalar(f, 0, 2, 30);
                u(j, i) = scalar(f, 0, 2, 30);
            }
        }
        Matrix out = l * u;
        if (n >= 2 && chance(50)) out.swap_rows(0, n - 1);
        return out;
    }

    /// Random invertible matrix over K.
    Matrix invertible(const Field& f, std::size_t n) {
        for (;;) {
            Matrix m = matrix(f, n, n, -2, 2, 10);
            if (!determinant(m).is_zero()) return m;
        }
    }

    Field field() {
        switch (range(0, 3)) {
        case 0: return Field::padic(2);
        case 1: return Field::padic(3);
        case 2: return Field::padic(5);
        default: return Field::laurent("t");
        }
    }

    std::mt19937_64& engine() { return rng_; }

private:
    Scalar laurent_unit(const Field& f) {
        const Scalar t = uniformizer(f);
        Scalar out(f, range(1, 3) * (chance(50) ? 1 : -1));
        Scalar tk = t;
        for (std::int64_t k = 1, deg = range(0, 2); k <= deg; ++k, tk *= t) out += Scalar(f, range(-2, 2)) * tk;
        return out;
    }

    std::mt19937_64 rng_;
};

} // namespace vt
