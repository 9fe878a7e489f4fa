#include "valfield/field.hpp"

#include <cctype>
#include <stdexcept>

#include "valfield/errors.hpp"

namespace valfield {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::padic(std::int64_t p) {
    if (!is_prime(p))
        throw InvalidField("p-adic field requires a prime, got " + std::to_string(p));
    return Field(FieldKind::PAdic, p, {});
}

Field Field::laurent(std::string var) {
    bool ok = !var.empty() && std::isalpha(static_cast<unsigned char>(var[0]));
    for (char c : var) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!ok) throw InvalidField("invalid Laurent variable name '" + var + "'");
    return Field(FieldKind::Laurent, 0, std::move(var));
}

std::string Field::describe() const {
    if (is_padic()) return "Q_" + std::to_string(p_);
    return "Q((" + var_ + "))";
}

std::int64_t ExtValuation::value() const {
    if (inf_) throw std::logic_error("infinite valuation has no integer value");
    return v_;
}

std::string ExtValuation::to_string() const {
    return inf_ ? std::string("inf") : std::to_string(v_);
}

std::ostream& operator<<(std::ostream& os, const ExtValuation& v) { return os << v.to_string(); }

} // namespace valfield
