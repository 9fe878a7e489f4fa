#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace valfield {

enum class FieldKind { PAdic, Laurent };

/**
 * Descriptor of a complete discretely valued field K.
 *
 * Two families are supported: Q_p (uniformizer p, scalars are rationals)
 * and Q((t)) (uniformizer t, scalars are rational functions in t).
 * All scalars taking part in one computation must share a descriptor.
 */
class Field {
public:
    /// Throws InvalidField unless p is prime.
    static Field padic(std::int64_t p);
    /// Throws InvalidField unless var is a non-empty identifier.
    static Field laurent(std::string var = "t");

    FieldKind kind() const { return kind_; }
    bool is_padic() const { return kind_ == FieldKind::PAdic; }
    bool is_laurent() const { return kind_ == FieldKind::Laurent; }

    /// Only meaningful for p-adic fields.
    std::int64_t prime() const { return p_; }
    /// Only meaningful for Laurent fields.
    const std::string& variable() const { return var_; }

    std::string describe() const;

    bool operator==(const Field&) const = default;

private:
    Field(FieldKind kind, std::int64_t p, std::string var)
        : kind_(kind), p_(p), var_(std::move(var)) {}

    FieldKind kind_;
    std::int64_t p_;
    std::string var_;
};

bool is_prime(std::int64_t n);

/// An element of Z u {+inf}.
class ExtValuation {
public:
    constexpr ExtValuation(std::int64_t v) : inf_(false), v_(v) {}  // NOLINT: implicit by intent
    static constexpr ExtValuation infinity() { return ExtValuation(); }

    constexpr bool is_finite() const { return !inf_; }
    constexpr bool is_infinite() const { return inf_; }
    /// Throws std::logic_error on infinity.
    std::int64_t value() const;

    constexpr bool operator==(const ExtValuation& o) const {
        return inf_ == o.inf_ && (inf_ || v_ == o.v_);
    }
    constexpr std::strong_ordering operator<=>(const ExtValuation& o) const {
        if (inf_ || o.inf_) return inf_ <=> o.inf_;
        return v_ <=> o.v_;
    }

    friend constexpr ExtValuation operator+(ExtValuation a, ExtValuation b) {
        if (a.inf_ || b.inf_) return infinity();
        return ExtValuation(a.v_ + b.v_);
    }

    std::string to_string() const;

private:
    constexpr ExtValuation() : inf_(true), v_(0) {}
    bool inf_;
    std::int64_t v_;
};

inline ExtValuation min(ExtValuation a, ExtValuation b) { return a < b ? a : b; }
inline ExtValuation max(ExtValuation a, ExtValuation b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const ExtValuation& v);

} // namespace valfield
