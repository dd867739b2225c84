#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "localg/regions.hpp"

namespace localg {

/// Descriptor of a singularity set Sigma with membership decidable at every
/// rational point. `corational` is the set of points with at least one
/// irrational coordinate: it contains no rational point, so every rational
/// point is regular for it, yet its complement is dense. No descriptor of this
/// language equals the whole space.
class SingSet {
public:
    enum class Kind { empty, finite, corational, union_of };

    SingSet() = default;
    static SingSet empty() { return {}; }
    static SingSet finite(std::vector<Point> points);
    static SingSet corational();
    static SingSet union_of(std::vector<SingSet> parts);

    Kind kind() const noexcept { return kind_; }
    const std::vector<Point>& points() const noexcept { return points_; }
    const std::vector<SingSet>& parts() const noexcept { return parts_; }

    /// Membership of a rational point.
    bool contains(std::span<const Rational> x) const;

    friend bool operator==(const SingSet&, const SingSet&) = default;

private:
    Kind kind_ = Kind::empty;
    std::vector<Point> points_;
    std::vector<SingSet> parts_;
};

std::ostream& operator<<(std::ostream& os, const SingSet& s);

inline bool is_singular(const SingSet& s, std::span<const Rational> x)
{
    return s.contains(x);
}

/// Canonical form: nested unions flattened, finite parts merged into one
/// sorted point list, empties dropped. The result is one of Empty, Finite,
/// CoRational or Union[Finite, CoRational].
SingSet normalized(const SingSet& s);

/// Normalized descriptor of s u t.
SingSet set_union(const SingSet& s, const SingSet& t);

/// Sound, incomplete containment: true only when s is certainly a subset of t.
bool subset_leq(const SingSet& s, const SingSet& t);

/// k distinct regular rational points of b, deterministic for a fixed seed.
/// Singular draws are skipped; throws DomainError if none can be found.
std::vector<Point> regular_sample(const SingSet& s, const OpenBox& b, std::size_t k, std::uint64_t seed);

/// Finite directed family of singularity sets, closed under pairwise union at
/// construction, so every pair of members has a member above both.
class SFamily {
public:
    /// Closure of the generators (normalized) under pairwise union.
    explicit SFamily(const std::vector<SingSet>& generators);
    static SFamily singleton(const SingSet& s) { return SFamily({s}); }

    const std::vector<SingSet>& members() const noexcept { return members_; }
    bool contains(const SingSet& s) const;
    /// A member containing s u t; both must be members.
    const SingSet& join(const SingSet& s, const SingSet& t) const;
    /// The member above every other member.
    const SingSet& top() const;

    friend bool operator==(const SFamily&, const SFamily&) = default;

private:
    SFamily() = default;
    friend SFamily family_from_members(std::vector<SingSet> members);

    std::vector<SingSet> members_;
};

/// Rebuilds a family from an explicit member list (decoding); throws
/// DomainError if the list is not closed under union.
SFamily family_from_members(std::vector<SingSet> members);

} // namespace localg
