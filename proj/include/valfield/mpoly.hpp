#pragma once

#include <map>
#include <string>
#include <vector>

#include "valfield/scalar.hpp"

namespace valfield {

/// Sparse multivariate polynomial over K in variables x_1..x_n.
class MPoly {
public:
    using Exponents = std::vector<unsigned>;

    MPoly(Field field, std::size_t nvars);
    static MPoly constant(const Scalar& c, std::size_t nvars);
    /// c * x_{var} (0-based variable index).
    static MPoly variable(const Field& field, std::size_t nvars, std::size_t var);

    const Field& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const std::map<Exponents, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t total_degree() const;

    Scalar evaluate(const Vec& x) const;
    /// e.g. "x1*x2 + 1/2*x1^2"; variables named <prefix>1..<prefix>n.
    std::string to_string(const std::string& prefix = "x") const;

    MPoly operator-() const;
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const Scalar& s);
    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    void add_term(const Exponents& e, const Scalar& c);

    Field field_;
    std::size_t nvars_;
    std::map<Exponents, Scalar> terms_;
};

} // namespace valfield
