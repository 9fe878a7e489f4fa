#include "valfield/scalar.hpp"

#include <cctype>
#include <limits>

#include "valfield/errors.hpp"

namespace valfield {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string strip_spaces(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!is_space(c)) out.push_back(c);
    return out;
}

mpq_class parse_rational(std::string_view s) {
    if (s.empty()) throw ParseError("empty number");
    std::string str(s);
    std::size_t slash = str.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::string num = str.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : str.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw ParseError("malformed rational '" + str + "'");
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) throw ParseError("zero denominator in '" + str + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

// Polynomial grammar (spaces already stripped):
//   poly := ['+'|'-'] term (('+'|'-') term)*
//   term := rational ['*' var ['^' int]] | var ['^' int]
QPoly parse_qpoly(const std::string& s, const std::string& var) {
    if (s.empty()) throw ParseError("empty polynomial");
    std::vector<mpq_class> coeffs;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw ParseError("expected '+' or '-' in polynomial '" + s + "'");
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        i = j;
        if (term.empty()) throw ParseError("empty term in polynomial '" + s + "'");

        mpq_class c(1);
        std::size_t degree = 0;
        std::size_t vpos = term.find(var);
        bool has_var = vpos != std::string::npos &&
                       (vpos + var.size() == term.size() || term[vpos + var.size()] == '^');
        if (has_var) {
            if (vpos > 0) {
                if (term[vpos - 1] != '*') throw ParseError("expected '*' before variable in '" + term + "'");
                c = parse_rational(term.substr(0, vpos - 1));
            }
            std::string rest = term.substr(vpos + var.size());
            degree = 1;
            if (!rest.empty()) {
                std::string e = rest.substr(1);
                if (e.empty()) throw ParseError("missing exponent in '" + term + "'");
                for (char ch : e)
                    if (!std::isdigit(static_cast<unsigned char>(ch)))
                        throw ParseError("malformed exponent in '" + term + "'");
                degree = std::stoul(e);
                if (degree > 100000) throw ParseError("exponent too large in '" + term + "'");
            }
        } else {
            c = parse_rational(term);
        }
        if (coeffs.size() <= degree) coeffs.resize(degree + 1, mpq_class(0));
        coeffs[degree] += sign * c;
    }
    return QPoly(std::move(coeffs));
}

// Matching close paren for the open paren at `open`.
std::size_t matching_paren(const std::string& s, std::size_t open) {
    int depth = 0;
    for (std::size_t i = open; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')' && --depth == 0) return i;
    }
    throw ParseError("unbalanced parentheses in '" + s + "'");
}

} // namespace

Scalar::Scalar(Field field) : field_(std::move(field)) {
    if (field_.is_laurent()) value_ = RationalFunction();
    else value_ = mpq_class(0);
}

Scalar::Scalar(Field field, long n) : Scalar(std::move(field), mpq_class(n)) {}

Scalar::Scalar(Field field, const mpq_class& q) : field_(std::move(field)) {
    mpq_class c = q;
    c.canonicalize();
    if (field_.is_laurent()) value_ = RationalFunction(QPoly::constant(c));
    else value_ = std::move(c);
}

Scalar::Scalar(Field field, RationalFunction f) : field_(std::move(field)) {
    if (!field_.is_laurent()) throw FieldMismatch();
    value_ = std::move(f);
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch();
}

bool Scalar::is_zero() const {
    if (auto q = std::get_if<mpq_class>(&value_)) return *q == 0;
    return std::get<RationalFunction>(value_).is_zero();
}

bool Scalar::is_one() const {
    if (auto q = std::get_if<mpq_class>(&value_)) return *q == 1;
    const auto& f = std::get<RationalFunction>(value_);
    return f.numerator().is_one() && f.denominator().is_one();
}

std::int64_t padic_valuation(const mpz_class& z, std::int64_t p) {
    if (z == 0) throw std::logic_error("valuation of zero integer");
    mpz_class rest, pz(static_cast<long>(p));
    return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t()));
}

ExtValuation Scalar::valuation() const {
    if (is_zero()) return ExtValuation::infinity();
    if (auto q = std::get_if<mpq_class>(&value_))
        return padic_valuation(q->get_num(), field_.prime()) - padic_valuation(q->get_den(), field_.prime());
    return std::get<RationalFunction>(value_).order();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Scalar r = *this;
    if (auto q = std::get_if<mpq_class>(&r.value_)) *q = 1 / *q;
    else r.value_ = std::get<RationalFunction>(value_).inverse();
    return r;
}

const mpq_class& Scalar::rational() const {
    if (auto q = std::get_if<mpq_class>(&value_)) return *q;
    throw FieldMismatch();
}

const RationalFunction& Scalar::rational_function() const {
    if (auto f = std::get_if<RationalFunction>(&value_)) return *f;
    throw FieldMismatch();
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (auto q = std::get_if<mpq_class>(&r.value_)) *q = -*q;
    else r.value_ = -std::get<RationalFunction>(value_);
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same_field(o);
    if (auto q = std::get_if<mpq_class>(&value_)) *q += std::get<mpq_class>(o.value_);
    else value_ = std::get<RationalFunction>(value_) + std::get<RationalFunction>(o.value_);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same_field(o);
    if (auto q = std::get_if<mpq_class>(&value_)) *q -= std::get<mpq_class>(o.value_);
    else value_ = std::get<RationalFunction>(value_) - std::get<RationalFunction>(o.value_);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same_field(o);
    if (auto q = std::get_if<mpq_class>(&value_)) *q *= std::get<mpq_class>(o.value_);
    else value_ = std::get<RationalFunction>(value_) * std::get<RationalFunction>(o.value_);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same_field(o);
    if (o.is_zero()) throw DivisionByZero();
    if (auto q = std::get_if<mpq_class>(&value_)) *q /= std::get<mpq_class>(o.value_);
    else value_ = std::get<RationalFunction>(value_) / std::get<RationalFunction>(o.value_);
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
    if (auto q = std::get_if<mpq_class>(&value_)) return q->get_str();
    const auto& f = std::get<RationalFunction>(value_);
    if (f.denominator().is_one()) return f.numerator().to_string(field_.variable());
    return "(" + f.numerator().to_string(field_.variable()) + ")/(" +
           f.denominator().to_string(field_.variable()) + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

ExtValuation valuation(const Scalar& x) { return x.valuation(); }
bool is_integral(const Scalar& x) { return x.is_integral(); }

Scalar uniformizer(const Field& field) {
    if (field.is_padic()) return Scalar(field, mpq_class(static_cast<long>(field.prime())));
    return Scalar(field, RationalFunction(QPoly::monomial(1, 1)));
}

Scalar power_of_uniformizer(const Field& field, std::int64_t k) {
    std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
    Scalar r(field, 0L);
    if (field.is_padic()) {
        mpz_class pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(field.prime()), e);
        r = Scalar(field, mpq_class(pk));
    } else {
        r = Scalar(field, RationalFunction(QPoly::monomial(1, e)));
    }
    return k < 0 ? r.inverse() : r;
}

Scalar parse_scalar(const Field& field, std::string_view text) {
    std::string s = strip_spaces(text);
    if (s.empty()) throw ParseError("empty scalar");
    if (field.is_padic()) return Scalar(field, parse_rational(s));

    const std::string& var = field.variable();
    if (s[0] != '(') return Scalar(field, RationalFunction(parse_qpoly(s, var)));
    std::size_t close = matching_paren(s, 0);
    QPoly num = parse_qpoly(s.substr(1, close - 1), var);
    if (close + 1 == s.size()) return Scalar(field, RationalFunction(num));
    if (s[close + 1] != '/' || close + 2 >= s.size())
        throw ParseError("expected '/(' after numerator in '" + s + "'");
    std::string rest = s.substr(close + 2);
    QPoly den;
    if (rest[0] == '(') {
        std::size_t c2 = matching_paren(rest, 0);
        if (c2 + 1 != rest.size()) throw ParseError("trailing characters in '" + s + "'");
        den = parse_qpoly(rest.substr(1, c2 - 1), var);
    } else {
        den = parse_qpoly(rest, var);
    }
    if (den.is_zero()) throw ParseError("zero denominator in '" + s + "'");
    return Scalar(field, RationalFunction(num, den));
}

Vec zero_vector(const Field& field, std::size_t n) { return Vec(n, Scalar(field)); }

Scalar dot(const Field& field, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot product of vectors of different lengths");
    Scalar s(field);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sum of different lengths");
    Vec r = a;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector difference of different lengths");
    Vec r = a;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
    return r;
}

Vec operator*(const Scalar& s, const Vec& a) {
    Vec r = a;
    for (auto& x : r) x = s * x;
    return r;
}

bool is_integral(const Vec& x) {
    for (const auto& c : x)
        if (!c.is_integral()) return false;
    return true;
}

} // namespace valfield
