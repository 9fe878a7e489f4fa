#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "valfield/matrix.hpp"

namespace valfield {

/// Univariate polynomial over K, coefficients c_0..c_d in ascending degree,
/// trimmed so the leading coefficient is nonzero (or the list is empty).
class UniPolynomial {
public:
    UniPolynomial(Field field, Vec coeffs);

    const Field& field() const { return field_; }
    const Vec& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(field_); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    /// True iff every coefficient is integral (membership in O_K[T]).
    bool is_integral() const;

    Scalar evaluate(const Scalar& x) const;
    /// Renders as "c0 + c1*T + ..." with the given indeterminate name.
    std::string to_string(const std::string& var = "T") const;

    friend bool operator==(const UniPolynomial& a, const UniPolynomial& b) {
        return a.field_ == b.field_ && a.c_ == b.c_;
    }

private:
    Field field_;
    Vec c_;
};

/// det(T*I - M) via Faddeev-LeVerrier. Throws NonSquare.
UniPolynomial characteristic_polynomial(const Matrix& m);

/// Lower convex hull of {(i, val a_i)} for a nonzero polynomial.
struct NewtonPolygon {
    struct Vertex {
        std::int64_t abscissa;
        std::int64_t ordinate;
        bool operator==(const Vertex&) const = default;
    };
    struct Segment {
        mpq_class slope;
        std::int64_t length;  ///< horizontal extent = number of roots with valuation -slope
    };

    std::vector<Vertex> vertices;
    std::vector<Segment> segments;
    /// Multiplicity of the root 0 (the power of T factored out first);
    /// these roots have valuation +inf and contribute no slope.
    std::int64_t zero_roots = 0;

    /// Slopes listed with multiplicity, nondecreasing.
    std::vector<mpq_class> slopes() const;
    /// Valuations of the nonzero roots in an algebraic closure: negated slopes.
    std::vector<mpq_class> root_valuations() const;
    /// Largest slope; requires at least one segment.
    mpq_class max_slope() const;
};

/// Throws ZeroPolynomial.
NewtonPolygon newton_polygon(const UniPolynomial& f);

} // namespace valfield
