#include "valfield/rational_function.hpp"

#include <algorithm>
#include <sstream>

#include "valfield/errors.hpp"

namespace valfield {

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    for (auto& c : c_) c.canonicalize();
    trim();
}

QPoly QPoly::constant(const mpq_class& c) { return QPoly(std::vector<mpq_class>{c}); }

QPoly QPoly::monomial(const mpq_class& c, std::size_t degree) {
    std::vector<mpq_class> v(degree + 1, mpq_class(0));
    v[degree] = c;
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t QPoly::order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return i;
    throw std::logic_error("order of the zero polynomial");
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    mpq_class inv = 1 / leading();
    return *this * inv;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<mpq_class> r(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    QPoly out;
    out.c_ = std::move(r);
    out.trim();
    return out;
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    QPoly out;
    out.c_ = std::move(r);
    out.trim();
    return out;
}

QPoly operator*(const QPoly& a, const mpq_class& s) {
    if (s == 0) return {};
    QPoly r = a;
    for (auto& c : r.c_) c *= s;
    return r;
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    if (b.is_zero()) throw DivisionByZero();
    std::vector<mpq_class> rem = a.c_;
    const std::size_t db = b.c_.size() - 1;
    std::vector<mpq_class> quo;
    if (rem.size() > db) quo.assign(rem.size() - db, mpq_class(0));
    mpq_class lead_inv = 1 / b.leading();
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k] == 0) continue;
        mpq_class f = rem[k] * lead_inv;
        quo[k - db] = f;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
    }
    q = QPoly(std::move(quo));
    r = QPoly(std::move(rem));
}

QPoly QPoly::divexact(const QPoly& a, const QPoly& b) {
    QPoly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

std::string QPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        mpq_class c = c_[i];
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (i == 0) {
            os << c.get_str();
            continue;
        }
        if (c != 1) os << c.get_str() << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

namespace {

bool is_monomial(const QPoly& a) { return !a.is_zero() && a.order() == static_cast<std::size_t>(a.degree()); }

using ZPoly = std::vector<mpz_class>;

// Divides out the content; leading coefficient made positive.
void make_primitive(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.empty()) return;
    mpz_class content = 0;
    for (const auto& c : a) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (a.back() < 0) content = -content;
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
}

// Clears denominators.
ZPoly to_integer(const QPoly& a) {
    mpz_class den = 1;
    for (const auto& c : a.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    ZPoly out;
    out.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) out.push_back(c.get_num() * (den / c.get_den()));
    make_primitive(out);
    return out;
}

// Primitive part of the pseudo-remainder of a by b (deg a >= deg b).
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
    const mpz_class& lb = b.back();
    while (a.size() >= b.size()) {
        const mpz_class la = a.back();
        const std::size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    make_primitive(a);
    return a;
}

} // namespace

QPoly gcd(QPoly a, QPoly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    // gcd with c*t^k is a power of t
    if (is_monomial(a) || is_monomial(b)) {
        std::size_t k = std::min(a.order(), b.order());
        return QPoly::monomial(1, k);
    }
    ZPoly x = to_integer(a), y = to_integer(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (y.size() > 1) {
        ZPoly r = pseudo_remainder(std::move(x), y);
        x = std::move(y);
        y = std::move(r);
    }
    if (!y.empty()) return QPoly::constant(1);
    std::vector<mpq_class> c(x.begin(), x.end());
    return QPoly(std::move(c)).monic();
}

RationalFunction::RationalFunction(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = QPoly::constant(1);
        return;
    }
    if (den_.degree() > 0) {
        QPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = QPoly::divexact(num_, g);
            den_ = QPoly::divexact(den_, g);
        }
    }
    if (den_.leading() != 1) {
        mpq_class inv = 1 / den_.leading();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

std::int64_t RationalFunction::order() const {
    return static_cast<std::int64_t>(num_.order()) - static_cast<std::int64_t>(den_.order());
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return coprime(den_, num_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::coprime(QPoly num, QPoly den) {
    RationalFunction r;
    if (num.is_zero()) return r;
    if (den.leading() != 1) {
        mpq_class inv = 1 / den.leading();
        num = num * inv;
        den = den * inv;
    }
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

// a/b + c/d with g = gcd(b, d): the sum is t / (b' d) with t = a d' + c b',
// and only gcd(t, g) can cancel.
RationalFunction operator+(const RationalFunction& x, const RationalFunction& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.den_.degree() == 0 && y.den_.degree() == 0) return RationalFunction::coprime(x.num_ + y.num_, x.den_);
    QPoly g = gcd(x.den_, y.den_);
    if (g.degree() == 0) return RationalFunction::coprime(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    QPoly xd = QPoly::divexact(x.den_, g), yd = QPoly::divexact(y.den_, g);
    QPoly t = x.num_ * yd + y.num_ * xd;
    if (t.is_zero()) return {};
    QPoly g2 = gcd(t, g);
    if (g2.degree() > 0) return RationalFunction::coprime(QPoly::divexact(t, g2), xd * QPoly::divexact(y.den_, g2));
    return RationalFunction::coprime(std::move(t), xd * y.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

// (a/b)(c/d): cancel gcd(a, d) and gcd(c, b) before multiplying.
RationalFunction operator*(const RationalFunction& x, const RationalFunction& y) {
    if (x.is_zero() || y.is_zero()) return {};
    QPoly a = x.num_, b = x.den_, c = y.num_, d = y.den_;
    if (d.degree() > 0) {
        QPoly g = gcd(a, d);
        if (g.degree() > 0) {
            a = QPoly::divexact(a, g);
            d = QPoly::divexact(d, g);
        }
    }
    if (b.degree() > 0) {
        QPoly g = gcd(c, b);
        if (g.degree() > 0) {
            c = QPoly::divexact(c, g);
            b = QPoly::divexact(b, g);
        }
    }
    return RationalFunction::coprime(a * c, b * d);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

} // namespace valfield
