#include "valfield/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "valfield/errors.hpp"

namespace valfield {

MPoly::MPoly(Field field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

MPoly MPoly::constant(const Scalar& c, std::size_t nvars) {
    MPoly p(c.field(), nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MPoly MPoly::variable(const Field& field, std::size_t nvars, std::size_t var) {
    if (var >= nvars) throw DimensionMismatch("variable index out of range");
    MPoly p(field, nvars);
    Exponents e(nvars, 0);
    e[var] = 1;
    p.add_term(e, Scalar(field, 1L));
    return p;
}

void MPoly::add_term(const Exponents& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

std::size_t MPoly::total_degree() const {
    std::size_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max<std::size_t>(d, std::accumulate(e.begin(), e.end(), 0u));
    return d;
}

Scalar MPoly::evaluate(const Vec& x) const {
    if (x.size() != nvars_) throw DimensionMismatch("evaluation point has wrong dimension");
    Scalar acc(field_);
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
        acc += t;
    }
    return acc;
}

std::string MPoly::to_string(const std::string& prefix) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool is_const = std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
        std::string cs = c.to_string();
        bool compound = cs.find_first_of("+ ") != std::string::npos || cs.find('-', 1) != std::string::npos;
        // a plain negative coefficient is printed as a subtraction
        bool negative = !compound && cs[0] == '-';
        if (negative) cs.erase(0, 1);
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (is_const) {
            os << cs;
            continue;
        }
        bool need_star = false;
        if (cs != "1") {
            os << (compound ? "(" + cs + ")" : cs);
            need_star = true;
        }
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << prefix << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch();
    if (a.nvars_ != b.nvars_) throw DimensionMismatch("polynomials in different numbers of variables");
    MPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch();
    if (a.nvars_ != b.nvars_) throw DimensionMismatch("polynomials in different numbers of variables");
    MPoly r(a.field_, a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            MPoly::Exponents e(a.nvars_);
            for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MPoly operator*(const MPoly& a, const Scalar& s) {
    MPoly r(a.field_, a.nvars_);
    for (const auto& [e, c] : a.terms_) r.add_term(e, c * s);
    return r;
}

} // namespace valfield
