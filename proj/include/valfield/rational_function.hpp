#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace valfield {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// Always trimmed: the last stored coefficient is nonzero.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<mpq_class> coeffs);

    static QPoly constant(const mpq_class& c);
    static QPoly monomial(const mpq_class& c, std::size_t degree);

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    /// Index of the lowest nonzero coefficient; requires a nonzero polynomial.
    std::size_t order() const;
    const mpq_class& leading() const { return c_.back(); }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    mpq_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    QPoly monic() const;
    QPoly operator-() const;
    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const mpq_class& s);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division a = q*b + r with deg r < deg b.
    static void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
    /// Exact division; the remainder must vanish.
    static QPoly divexact(const QPoly& a, const QPoly& b);

    /// Renders as "c0 + c1*t + c2*t^2" in ascending degree.
    std::string to_string(const std::string& var) const;

private:
    void trim();
    std::vector<mpq_class> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
QPoly gcd(QPoly a, QPoly b);

/**
 * Element of Q(t) kept in canonical form: numerator and denominator
 * coprime, denominator monic, and 0 represented as 0/1.
 */
class RationalFunction {
public:
    RationalFunction() : num_(), den_(QPoly::constant(1)) {}
    explicit RationalFunction(QPoly num) : num_(std::move(num)), den_(QPoly::constant(1)) {}
    RationalFunction(QPoly num, QPoly den);

    const QPoly& numerator() const { return num_; }
    const QPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// Order at t = 0; requires a nonzero element.
    std::int64_t order() const;

    RationalFunction inverse() const;
    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    /// num and den already coprime; only rescales den to be monic.
    static RationalFunction coprime(QPoly num, QPoly den);
    void normalize();
    QPoly num_;
    QPoly den_;
};

} // namespace valfield
