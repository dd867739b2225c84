#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "localg/local_fun.hpp"

namespace localg {

/// Fixed enumeration x_0, x_1, ... of the rationals of a 1-D open domain.
///
/// The rationals t = p/q of (0,1) are listed by increasing denominator q and
/// then increasing p (1/2, 1/3, 2/3, 1/4, 3/4, 1/5, ...), and carried onto
/// the domain by an order-preserving rational bijection: affine for bounded
/// domains, t/(1-t) for half-lines, u/(1-|u|) with u = 2t-1 for the line.
/// Both directions are computed in closed form through totient sums, so
/// index_of works for rationals deep in the sequence.
class RationalEnumeration {
public:
    explicit RationalEnumeration(OpenBox domain);

    const OpenBox& domain() const noexcept { return domain_; }
    Rational at(std::uint64_t n) const;
    /// Position of a rational of the domain; throws DomainError outside it.
    std::uint64_t index_of(const Rational& x) const;
    /// Denominator q of the unit-interval preimage of x_n.
    std::uint64_t height(std::uint64_t n) const;
    /// Distance from x_n to the nearest of x_0..x_{n-1}; n must be positive.
    Rational earlier_distance(std::uint64_t n) const;
    /// The same for a rational of the domain, given by value.
    Rational earlier_distance(const Rational& x) const;

private:
    Rational to_unit(const Rational& x) const;
    Rational from_unit(const Rational& t) const;

    OpenBox domain_;
};

/// Sum of Euler's totient over 1..m.
std::uint64_t totient_sum(std::uint64_t m);

/// The constants c_n attached to the anchors.
struct ConstantSequence {
    enum class Kind { zero, index, factorial, enumerated };

    Kind kind = Kind::index;
    /// Multiplier for zero/index/factorial: c_n = g(n) * unit.
    Value unit = Value(1);
    /// Cycled for `enumerated`: c_n = values[n mod size].
    std::vector<Value> values;

    Value at(std::uint64_t n) const;
    ValueKind value_kind() const;
    /// Whether n -> c_n is injective.
    bool injective() const;

    friend bool operator==(const ConstantSequence&, const ConstantSequence&) = default;
};

/// Shape of the component on the chart of anchor x_n.
enum class AtlasProfile {
    constant, ///< c_n
    anchored, ///< c_n * (X_1 - x_n), vanishing exactly at its anchor
};

struct AtlasParams {
    Rational epsilon = Rational(1, 1000);
    ConstantSequence constants;
    OpenBox domain = OpenBox::whole(1);
    AtlasProfile profile = AtlasProfile::constant;
    /// Charts of anchors x_n with n <= vanish_upto carry the zero term.
    std::optional<std::uint64_t> vanish_upto;

    friend bool operator==(const AtlasParams&, const AtlasParams&) = default;
};

/// Countable atlas over the rationals of a 1-D domain, singular on the
/// co-rational set: anchor x_n gets the open interval of radius
///
///     r_n = min(epsilon / ((n+1)(n+2)), d_n / 2),
///
/// d_n being the distance from x_n to x_0..x_{n-1}. Hence x_m is outside U_n
/// for every m < n, weak compatibility holds vacuously, and the radii sum to
/// at most epsilon.
class CountableAtlas final : public ChartRule {
public:
    explicit CountableAtlas(AtlasParams params);

    const AtlasParams& params() const noexcept { return params_; }
    const RationalEnumeration& enumeration() const noexcept { return enum_; }

    Rational anchor(std::uint64_t n) const { return enum_.at(n); }
    Rational radius(std::uint64_t n) const;
    Chart chart(std::uint64_t n) const;

    std::optional<Chart> chart_at(std::span<const Rational> x) const override;
    SmoothGrade grade() const override { return SmoothGrade::infinity(); }
    nlohmann::json encode() const override;

private:
    Rational radius(std::uint64_t n, const Rational& x) const;
    Chart chart(std::uint64_t n, const Rational& x) const;

    AtlasParams params_;
    RationalEnumeration enum_;
};

/// The atlas as a local function over the co-rational singularity set.
LocalFun make_atlas(AtlasParams params);

/// The atlas rule behind f, if f is an atlas family.
const CountableAtlas* as_atlas(const LocalFun& f);

nlohmann::json encode(const ConstantSequence& c);
nlohmann::json encode(const AtlasParams& p);
ConstantSequence decode_constants(const nlohmann::json& j);
AtlasParams decode_atlas_params(const nlohmann::json& j);

} // namespace localg
