#include "localg/value.hpp"

#include <ostream>

#include "localg/error.hpp"

namespace localg {

std::string_view to_string(ValueKind kind)
{
    return kind == ValueKind::scalar ? "scalar" : "mat2";
}

ValueKind parse_value_kind(std::string_view text)
{
    if (text == "scalar")
        return ValueKind::scalar;
    if (text == "mat2")
        return ValueKind::mat2;
    throw ParseError("unknown value kind '" + std::string(text) + "'");
}

namespace {

void require_same_kind(const Value& a, const Value& b, const char* op)
{
    if (a.kind() != b.kind())
        throw StructuralError(std::string("value kind mismatch in ") + op);
}

} // namespace

Value Value::zero(ValueKind kind)
{
    return kind == ValueKind::scalar ? Value(Rational(0)) : Value(Mat2{});
}

Value Value::unit(ValueKind kind)
{
    return kind == ValueKind::scalar ? Value(Rational(1)) : mat2(1, 0, 0, 1);
}

Value Value::mat2(Rational a, Rational b, Rational c, Rational d)
{
    return Value(Mat2{{std::move(a), std::move(b), std::move(c), std::move(d)}});
}

const Rational& Value::scalar() const
{
    if (const auto* r = std::get_if<Rational>(&v_))
        return *r;
    throw StructuralError("value is not a scalar");
}

const Mat2& Value::matrix() const
{
    if (const auto* m = std::get_if<Mat2>(&v_))
        return *m;
    throw StructuralError("value is not a 2x2 matrix");
}

bool Value::is_zero() const
{
    if (const auto* r = std::get_if<Rational>(&v_))
        return r->is_zero();
    for (const auto& x : std::get<Mat2>(v_).e)
        if (!x.is_zero())
            return false;
    return true;
}

Value Value::scaled(const Rational& s) const
{
    if (const auto* r = std::get_if<Rational>(&v_))
        return Value(*r * s);
    Mat2 m = std::get<Mat2>(v_);
    for (auto& x : m.e)
        x *= s;
    return Value(std::move(m));
}

Rational Value::max_abs() const
{
    if (const auto* r = std::get_if<Rational>(&v_))
        return r->abs();
    Rational best;
    for (const auto& x : std::get<Mat2>(v_).e)
        if (x.abs() > best)
            best = x.abs();
    return best;
}

Value& Value::operator+=(const Value& o)
{
    require_same_kind(*this, o, "addition");
    if (auto* r = std::get_if<Rational>(&v_)) {
        *r += std::get<Rational>(o.v_);
    } else {
        auto& m = std::get<Mat2>(v_);
        const auto& n = std::get<Mat2>(o.v_);
        for (int i = 0; i < 4; ++i)
            m.e[i] += n.e[i];
    }
    return *this;
}

Value& Value::operator-=(const Value& o)
{
    return *this += -o;
}

Value operator*(const Value& a, const Value& b)
{
    require_same_kind(a, b, "multiplication");
    if (a.kind() == ValueKind::scalar)
        return Value(a.scalar() * b.scalar());
    const auto& x = a.matrix().e;
    const auto& y = b.matrix().e;
    return Value::mat2(x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                       x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]);
}

Value Value::operator-() const
{
    return scaled(Rational(-1));
}

std::ostream& operator<<(std::ostream& os, const Value& v)
{
    if (v.kind() == ValueKind::scalar)
        return os << v.scalar();
    const auto& e = v.matrix().e;
    return os << "[[" << e[0] << ", " << e[1] << "], [" << e[2] << ", " << e[3] << "]]";
}

} // namespace localg
