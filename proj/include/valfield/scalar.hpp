#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "valfield/field.hpp"
#include "valfield/rational_function.hpp"

namespace valfield {

/**
 * Exact element of a discretely valued field K, stored in the dense
 * subfield Q (for Q_p) or Q(t) (for Q((t))). Immutable value type.
 *
 * Arithmetic between scalars of different fields throws FieldMismatch.
 */
class Scalar {
public:
    /// Zero of the given field.
    explicit Scalar(Field field);
    Scalar(Field field, long n);
    Scalar(Field field, const mpq_class& q);
    /// Laurent fields only.
    Scalar(Field field, RationalFunction f);

    const Field& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;
    ExtValuation valuation() const;
    bool is_integral() const { return valuation() >= ExtValuation(0); }

    /// Throws DivisionByZero on zero.
    Scalar inverse() const;

    /// The rational value; p-adic fields only.
    const mpq_class& rational() const;
    /// The rational-function value; Laurent fields only.
    const RationalFunction& rational_function() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    std::string to_string() const;

private:
    void check_same_field(const Scalar& o) const;

    Field field_;
    std::variant<mpq_class, RationalFunction> value_;
};

ExtValuation valuation(const Scalar& x);
bool is_integral(const Scalar& x);
/// p for Q_p, t for Q((t)).
Scalar uniformizer(const Field& field);
Scalar power_of_uniformizer(const Field& field, std::int64_t k);

/// p-adic valuation of a nonzero integer.
std::int64_t padic_valuation(const mpz_class& z, std::int64_t p);

/**
 * Parses a scalar in the text format of its field: "a" or "a/b" for
 * p-adic fields, "(poly)/(poly)" or a bare polynomial "c0 + c1*t + c2*t^2"
 * for Laurent fields. Whitespace is ignored. Throws ParseError.
 */
Scalar parse_scalar(const Field& field, std::string_view text);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

using Vec = std::vector<Scalar>;

Vec zero_vector(const Field& field, std::size_t n);
Scalar dot(const Field& field, const Vec& a, const Vec& b);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& a);
/// True iff every coordinate is integral (the relation x >= 0).
bool is_integral(const Vec& x);

} // namespace valfield
