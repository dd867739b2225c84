#include "localg/terms.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "localg/error.hpp"

namespace localg {

MultiIndex MultiIndex::unit(std::size_t dim, std::size_t i)
{
    MultiIndex m(dim);
    m.e_.at(i) = 1;
    return m;
}

unsigned MultiIndex::order() const noexcept
{
    return std::accumulate(e_.begin(), e_.end(), 0U);
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b)
{
    if (a.dim() != b.dim())
        throw StructuralError("multi-index dimension mismatch");
    MultiIndex r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i)
        r.e_[i] += b.e_[i];
    return r;
}

SmoothGrade SmoothGrade::lowered(unsigned order) const
{
    if (!cap_)
        return *this;
    return finite(*cap_ > order ? *cap_ - order : 0);
}

std::strong_ordering operator<=>(const SmoothGrade& a, const SmoothGrade& b)
{
    if (a.is_infinite() || b.is_infinite())
        return a.is_infinite() <=> b.is_infinite();
    return *a.cap_ <=> *b.cap_;
}

std::ostream& operator<<(std::ostream& os, const SmoothGrade& g)
{
    if (g.is_infinite())
        return os << "inf";
    return os << *g.cap();
}

PolyTerm PolyTerm::constant(std::size_t dim, const Value& c)
{
    PolyTerm t(dim, c.kind());
    t.add_monomial(MultiIndex(dim), c);
    return t;
}

PolyTerm PolyTerm::variable(std::size_t dim, std::size_t i, ValueKind kind)
{
    if (i >= dim)
        throw StructuralError("variable index out of range");
    PolyTerm t(dim, kind);
    t.add_monomial(MultiIndex::unit(dim, i), Value::unit(kind));
    return t;
}

PolyTerm PolyTerm::monomial(const MultiIndex& p, const Value& c)
{
    PolyTerm t(p.dim(), c.kind());
    t.add_monomial(p, c);
    return t;
}

PolyTerm PolyTerm::with_grade(SmoothGrade g) const
{
    PolyTerm t = *this;
    t.grade_ = g;
    return t;
}

unsigned PolyTerm::total_degree() const noexcept
{
    unsigned d = 0;
    for (const auto& [p, c] : mono_)
        d = std::max(d, p.order());
    return d;
}

void PolyTerm::add_monomial(const MultiIndex& p, const Value& c)
{
    if (p.dim() != dim_)
        throw StructuralError("monomial dimension mismatch");
    if (c.kind() != kind_)
        throw StructuralError("coefficient kind mismatch");
    auto it = mono_.find(p);
    if (it == mono_.end()) {
        if (!c.is_zero())
            mono_.emplace(p, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        mono_.erase(it);
}

Value PolyTerm::evaluate(std::span<const Rational> x) const
{
    if (x.size() != dim_)
        throw StructuralError("evaluation point dimension mismatch");
    Value acc = Value::zero(kind_);
    for (const auto& [p, c] : mono_) {
        Rational m(1);
        for (std::size_t i = 0; i < dim_; ++i)
            if (p[i] != 0)
                m *= x[i].pow(p[i]);
        acc += c.scaled(m);
    }
    return acc;
}

PolyTerm PolyTerm::derivative(const MultiIndex& p) const
{
    if (p.dim() != dim_)
        throw StructuralError("derivative multi-index dimension mismatch");
    PolyTerm r(dim_, kind_);
    r.grade_ = grade_.lowered(p.order());
    for (const auto& [q, c] : mono_) {
        std::vector<unsigned> e = q.entries();
        Rational factor(1);
        bool vanishes = false;
        for (std::size_t i = 0; i < dim_ && !vanishes; ++i) {
            if (p[i] > e[i]) {
                vanishes = true;
                break;
            }
            for (unsigned k = 0; k < p[i]; ++k)
                factor *= Rational(static_cast<long>(e[i] - k));
            e[i] -= p[i];
        }
        if (!vanishes)
            r.add_monomial(MultiIndex(std::move(e)), c.scaled(factor));
    }
    return r;
}

void PolyTerm::require_compatible(const PolyTerm& o, const char* op) const
{
    if (dim_ != o.dim_)
        throw StructuralError(std::string("term dimension mismatch in ") + op);
    if (kind_ != o.kind_)
        throw StructuralError(std::string("term value kind mismatch in ") + op);
}

PolyTerm& PolyTerm::operator+=(const PolyTerm& o)
{
    require_compatible(o, "addition");
    for (const auto& [p, c] : o.mono_)
        add_monomial(p, c);
    grade_ = std::min(grade_, o.grade_);
    return *this;
}

PolyTerm& PolyTerm::operator-=(const PolyTerm& o)
{
    return *this += -o;
}

PolyTerm operator*(const PolyTerm& a, const PolyTerm& b)
{
    a.require_compatible(b, "multiplication");
    PolyTerm r(a.dim_, a.kind_);
    r.grade_ = std::min(a.grade_, b.grade_);
    for (const auto& [p, c] : a.mono_)
        for (const auto& [q, d] : b.mono_)
            r.add_monomial(p + q, c * d);
    return r;
}

PolyTerm PolyTerm::operator-() const
{
    PolyTerm r = *this;
    for (auto& [p, c] : r.mono_)
        c = -c;
    return r;
}

std::ostream& operator<<(std::ostream& os, const PolyTerm& t)
{
    if (t.is_zero())
        return os << "0";
    bool first = true;
    for (const auto& [p, c] : t.monomials()) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c << ")";
        for (std::size_t i = 0; i < p.dim(); ++i) {
            if (p[i] == 1)
                os << "*X" << (i + 1);
            else if (p[i] > 1)
                os << "*X" << (i + 1) << "^" << p[i];
        }
    }
    return os;
}

} // namespace localg
