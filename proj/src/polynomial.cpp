#include "valfield/polynomial.hpp"

#include <sstream>

#include "valfield/detail/faddeev_leverrier.hpp"
#include "valfield/errors.hpp"

namespace valfield {

UniPolynomial::UniPolynomial(Field field, Vec coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (!(c.field() == field_)) throw FieldMismatch();
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool UniPolynomial::is_integral() const { return valfield::is_integral(c_); }

Scalar UniPolynomial::evaluate(const Scalar& x) const {
    Scalar acc(field_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::string UniPolynomial::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::string c = c_[i].to_string();
        bool compound = c.find_first_of("+ ") != std::string::npos || c.find('-', 1) != std::string::npos;
        if (i == 0) {
            os << c;
            continue;
        }
        if (!c_[i].is_one()) os << (compound ? "(" + c + ")" : c) << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

UniPolynomial characteristic_polynomial(const Matrix& m) {
    if (!m.is_square()) throw NonSquare();
    const Field& f = m.field();
    auto coeffs = detail::faddeev_leverrier(m.entries(), m.rows(), f, Scalar(f), Scalar(f, 1L),
                                            [](const Scalar& r, const Scalar& s) { return r * s; });
    return UniPolynomial(f, std::move(coeffs));
}

std::vector<mpq_class> NewtonPolygon::slopes() const {
    std::vector<mpq_class> out;
    for (const auto& s : segments)
        for (std::int64_t k = 0; k < s.length; ++k) out.push_back(s.slope);
    return out;
}

std::vector<mpq_class> NewtonPolygon::root_valuations() const {
    std::vector<mpq_class> out;
    for (const auto& s : slopes()) out.push_back(-s);
    return out;
}

mpq_class NewtonPolygon::max_slope() const {
    if (segments.empty()) throw std::logic_error("Newton polygon has no segments");
    return segments.back().slope;
}

NewtonPolygon newton_polygon(const UniPolynomial& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    NewtonPolygon np;
    const auto& c = f.coeffs();
    std::size_t first = 0;
    while (c[first].is_zero()) ++first;
    np.zero_roots = static_cast<std::int64_t>(first);

    // Monotone-chain lower hull; abscissas are already increasing.
    using V = NewtonPolygon::Vertex;
    std::vector<V> hull;
    for (std::size_t i = first; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        V pt{static_cast<std::int64_t>(i), c[i].valuation().value()};
        while (hull.size() >= 2) {
            const V& a = hull[hull.size() - 2];
            const V& b = hull.back();
            // Drop b unless it lies strictly below segment a--pt.
            __int128 cross = static_cast<__int128>(b.abscissa - a.abscissa) * (pt.ordinate - a.ordinate) -
                             static_cast<__int128>(b.ordinate - a.ordinate) * (pt.abscissa - a.abscissa);
            if (cross <= 0) hull.pop_back();
            else break;
        }
        hull.push_back(pt);
    }
    np.vertices = hull;
    for (std::size_t k = 1; k < hull.size(); ++k) {
        std::int64_t dx = hull[k].abscissa - hull[k - 1].abscissa;
        std::int64_t dy = hull[k].ordinate - hull[k - 1].ordinate;
        mpq_class slope(mpz_class(static_cast<long>(dy)), mpz_class(static_cast<long>(dx)));
        slope.canonicalize();
        np.segments.push_back({slope, dx});
    }
    return np;
}

} // namespace valfield
