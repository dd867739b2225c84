#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "localg/rational.hpp"
#include "localg/value.hpp"

namespace localg {

/// Multi-index p in N^n of a partial derivative D^p or a monomial X^p.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t dim) : e_(dim, 0) {}
    explicit MultiIndex(std::vector<unsigned> entries) : e_(std::move(entries)) {}

    /// The i-th unit multi-index e_i.
    static MultiIndex unit(std::size_t dim, std::size_t i);

    std::size_t dim() const noexcept { return e_.size(); }
    unsigned order() const noexcept;
    unsigned operator[](std::size_t i) const { return e_[i]; }
    const std::vector<unsigned>& entries() const noexcept { return e_; }

    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<unsigned> e_;
};

/// Smoothness class C^l, 0 <= l <= infinity. Infinity compares greatest.
class SmoothGrade {
public:
    SmoothGrade() = default; // infinity
    static SmoothGrade infinity() { return {}; }
    static SmoothGrade finite(unsigned l)
    {
        SmoothGrade g;
        g.cap_ = l;
        return g;
    }

    bool is_infinite() const noexcept { return !cap_; }
    std::optional<unsigned> cap() const noexcept { return cap_; }
    /// Grade left after differentiating `order` times (floored at 0).
    SmoothGrade lowered(unsigned order) const;

    friend bool operator==(const SmoothGrade&, const SmoothGrade&) = default;
    friend std::strong_ordering operator<=>(const SmoothGrade& a, const SmoothGrade& b);

private:
    std::optional<unsigned> cap_;
};

std::ostream& operator<<(std::ostream& os, const SmoothGrade& g);

/// Sparse multivariate polynomial in X_1..X_n with coefficients in the value
/// algebra. Zero coefficients are never stored, so the zero polynomial is the
/// empty map and structural equality is polynomial equality.
///
/// Every term carries a value kind even when it has no monomials, and an
/// optional artificial grade cap used to model C^l membership.
class PolyTerm {
public:
    using MonomialMap = std::map<MultiIndex, Value>;

    PolyTerm() = default;
    PolyTerm(std::size_t dim, ValueKind kind) : dim_(dim), kind_(kind) {}

    static PolyTerm constant(std::size_t dim, const Value& c);
    /// The coordinate function X_{i+1} (zero-based i) with unit coefficient.
    static PolyTerm variable(std::size_t dim, std::size_t i, ValueKind kind = ValueKind::scalar);
    static PolyTerm monomial(const MultiIndex& p, const Value& c);

    std::size_t dim() const noexcept { return dim_; }
    ValueKind kind() const noexcept { return kind_; }
    const MonomialMap& monomials() const noexcept { return mono_; }
    const SmoothGrade& grade() const noexcept { return grade_; }
    PolyTerm with_grade(SmoothGrade g) const;

    bool is_zero() const noexcept { return mono_.empty(); }
    /// Total degree; 0 for constants and for the zero polynomial.
    unsigned total_degree() const noexcept;

    /// Adds c * X^p in place, dropping the monomial if it cancels.
    void add_monomial(const MultiIndex& p, const Value& c);

    Value evaluate(std::span<const Rational> x) const;
    /// Formal partial derivative D^p; a finite grade cap drops by |p|.
    PolyTerm derivative(const MultiIndex& p) const;

    /// Equality as polynomials; the grade cap is ignored.
    bool same_function(const PolyTerm& o) const
    {
        return dim_ == o.dim_ && kind_ == o.kind_ && mono_ == o.mono_;
    }

    PolyTerm& operator+=(const PolyTerm& o);
    PolyTerm& operator-=(const PolyTerm& o);
    friend PolyTerm operator+(PolyTerm a, const PolyTerm& b) { return a += b; }
    friend PolyTerm operator-(PolyTerm a, const PolyTerm& b) { return a -= b; }
    /// Order-sensitive product: coefficient products are taken as a*b.
    friend PolyTerm operator*(const PolyTerm& a, const PolyTerm& b);
    PolyTerm operator-() const;

    /// Structural equality including the grade cap.
    friend bool operator==(const PolyTerm&, const PolyTerm&) = default;

private:
    void require_compatible(const PolyTerm& o, const char* op) const;

    std::size_t dim_ = 0;
    ValueKind kind_ = ValueKind::scalar;
    MonomialMap mono_;
    SmoothGrade grade_;
};

std::ostream& operator<<(std::ostream& os, const PolyTerm& t);

} // namespace localg
