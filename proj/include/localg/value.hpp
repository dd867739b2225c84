#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "localg/rational.hpp"

namespace localg {

/// The two concrete value algebras: exact scalars (commutative) and
/// 2x2 rational matrices (non-commutative).
enum class ValueKind { scalar, mat2 };

std::string_view to_string(ValueKind kind);
ValueKind parse_value_kind(std::string_view text);

/// True exactly for the commutative instance.
constexpr bool is_commutative(ValueKind kind) noexcept
{
    return kind == ValueKind::scalar;
}

/// Row-major 2x2 rational matrix.
struct Mat2 {
    std::array<Rational, 4> e{};

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// An element of the value algebra. Binary operations require both
/// operands to be of the same kind and throw StructuralError otherwise.
class Value {
public:
    Value() : v_(Rational(0)) {}
    Value(Rational r) : v_(std::move(r)) {}     // NOLINT(google-explicit-constructor)
    Value(Mat2 m) : v_(std::move(m)) {}         // NOLINT(google-explicit-constructor)
    Value(long r) : v_(Rational(r)) {}          // NOLINT(google-explicit-constructor)

    static Value zero(ValueKind kind);
    static Value unit(ValueKind kind);
    static Value mat2(Rational a, Rational b, Rational c, Rational d);

    ValueKind kind() const noexcept { return v_.index() == 0 ? ValueKind::scalar : ValueKind::mat2; }
    const Rational& scalar() const;
    const Mat2& matrix() const;

    bool is_zero() const;
    /// Multiplication by a scalar from the ground field (always commutes).
    Value scaled(const Rational& s) const;
    /// Largest absolute entry; the scalar itself for the scalar instance.
    Rational max_abs() const;

    Value& operator+=(const Value& o);
    Value& operator-=(const Value& o);
    friend Value operator+(Value a, const Value& b) { return a += b; }
    friend Value operator-(Value a, const Value& b) { return a -= b; }
    friend Value operator*(const Value& a, const Value& b);
    Value operator-() const;

    friend bool operator==(const Value&, const Value&) = default;

private:
    std::variant<Rational, Mat2> v_;
};

std::ostream& operator<<(std::ostream& os, const Value& v);

} // namespace localg
