#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "localg/rational.hpp"

namespace localg {

/// A point with rational coordinates.
using Point = std::vector<Rational>;

std::ostream& operator<<(std::ostream& os, const Point& p);
/// Parses "p/q[,p/q...]".
Point parse_point(std::string_view text);

/// Open interval; an absent endpoint is the matching infinity.
struct Interval {
    std::optional<Rational> lo;
    std::optional<Rational> hi;

    bool bounded() const noexcept { return lo && hi; }
    bool contains(const Rational& x) const { return (!lo || *lo < x) && (!hi || x < *hi); }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Axis-aligned open box in Q^n with possibly infinite sides; never empty.
class OpenBox {
public:
    OpenBox() = default;
    /// Throws DomainError unless lo < hi in every coordinate.
    explicit OpenBox(std::vector<Interval> intervals);

    static OpenBox whole(std::size_t dim);
    static OpenBox interval(Rational lo, Rational hi);
    /// Open cube of the given radius around a centre.
    static OpenBox around(const Point& centre, const Rational& radius);

    std::size_t dim() const noexcept { return iv_.size(); }
    const std::vector<Interval>& intervals() const noexcept { return iv_; }
    const Interval& operator[](std::size_t i) const { return iv_[i]; }
    bool is_whole() const noexcept;
    bool bounded() const noexcept;

    /// Strict coordinatewise containment.
    bool contains(std::span<const Rational> x) const;

    friend bool operator==(const OpenBox&, const OpenBox&) = default;

private:
    std::vector<Interval> iv_;
};

std::ostream& operator<<(std::ostream& os, const OpenBox& b);

/// Coordinatewise max(lo)/min(hi); nullopt when the intersection is empty.
std::optional<OpenBox> intersect(const OpenBox& a, const OpenBox& b);

/// Disjoint open boxes covering a minus closure(b), up to the boundary
/// hyperplanes of b.
std::vector<OpenBox> box_difference(const OpenBox& a, const OpenBox& b);

/// Sum of the lengths of bounded 1-D boxes, an upper bound for the measure of
/// their union. Throws DomainError on unbounded or non-1-D boxes.
Rational length_sum(std::span<const OpenBox> boxes);

/// Deterministic stream of rational points inside a box. Coordinates are
/// j/D-fractions of a bounded proxy of each side, with the grid D growing
/// whenever draws keep repeating, so any number of distinct points is
/// available.
class PointSampler {
public:
    PointSampler(const OpenBox& box, std::size_t expected, std::uint64_t seed);

    Point next();

private:
    struct Side {
        Rational lo;
        Rational width;
    };
    std::vector<Side> sides_;
    std::uint64_t grid_;
    std::uint64_t period_;
    std::uint64_t seed_;
    std::uint64_t stream_ = 0;
};

/// k pairwise distinct rational points of b, deterministic for a fixed seed.
std::vector<Point> sample(const OpenBox& b, std::size_t k, std::uint64_t seed);

/// k pairwise distinct points of b accepted by `keep`; throws DomainError if
/// the sampler cannot find them within its attempt budget.
template <class Pred>
std::vector<Point> sample_filtered(const OpenBox& b, std::size_t k, std::uint64_t seed, Pred keep);

} // namespace localg

#include "localg/detail/regions_impl.hpp"
