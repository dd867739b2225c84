#include "localg/regions.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <string>

#include "localg/error.hpp"
#include "localg/random.hpp"

namespace localg {

std::ostream& operator<<(std::ostream& os, const Point& p)
{
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i)
        os << (i ? ", " : "") << p[i];
    return os << ")";
}

Point parse_point(std::string_view text)
{
    Point p;
    while (true) {
        const auto comma = text.find(',');
        p.push_back(Rational::parse(text.substr(0, comma)));
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return p;
}

OpenBox::OpenBox(std::vector<Interval> intervals) : iv_(std::move(intervals))
{
    for (const auto& iv : iv_)
        if (iv.lo && iv.hi && !(*iv.lo < *iv.hi))
            throw DomainError("open box side with lo >= hi");
}

OpenBox OpenBox::whole(std::size_t dim)
{
    return OpenBox(std::vector<Interval>(dim));
}

OpenBox OpenBox::interval(Rational lo, Rational hi)
{
    return OpenBox({Interval{std::move(lo), std::move(hi)}});
}

OpenBox OpenBox::around(const Point& centre, const Rational& radius)
{
    if (radius.sign() <= 0)
        throw DomainError("box radius must be positive");
    std::vector<Interval> iv;
    iv.reserve(centre.size());
    for (const auto& c : centre)
        iv.push_back({c - radius, c + radius});
    return OpenBox(std::move(iv));
}

bool OpenBox::is_whole() const noexcept
{
    return std::all_of(iv_.begin(), iv_.end(), [](const Interval& i) { return !i.lo && !i.hi; });
}

bool OpenBox::bounded() const noexcept
{
    return std::all_of(iv_.begin(), iv_.end(), [](const Interval& i) { return i.bounded(); });
}

bool OpenBox::contains(std::span<const Rational> x) const
{
    if (x.size() != iv_.size())
        throw StructuralError("point/box dimension mismatch");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!iv_[i].contains(x[i]))
            return false;
    return true;
}

std::ostream& operator<<(std::ostream& os, const OpenBox& b)
{
    for (std::size_t i = 0; i < b.dim(); ++i) {
        if (i)
            os << " x ";
        os << "(" << (b[i].lo ? b[i].lo->str() : "-inf") << ", " << (b[i].hi ? b[i].hi->str() : "+inf") << ")";
    }
    return os;
}

std::optional<OpenBox> intersect(const OpenBox& a, const OpenBox& b)
{
    if (a.dim() != b.dim())
        throw StructuralError("box dimension mismatch in intersection");
    std::vector<Interval> iv(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const auto& x = a[i];
        const auto& y = b[i];
        if (x.lo && y.lo)
            iv[i].lo = std::max(*x.lo, *y.lo);
        else
            iv[i].lo = x.lo ? x.lo : y.lo;
        if (x.hi && y.hi)
            iv[i].hi = std::min(*x.hi, *y.hi);
        else
            iv[i].hi = x.hi ? x.hi : y.hi;
        if (iv[i].lo && iv[i].hi && !(*iv[i].lo < *iv[i].hi))
            return std::nullopt;
    }
    return OpenBox(std::move(iv));
}

std::vector<OpenBox> box_difference(const OpenBox& a, const OpenBox& b)
{
    const auto meet = intersect(a, b);
    if (!meet)
        return {a};
    std::vector<OpenBox> pieces;
    std::vector<Interval> core = a.intervals();
    for (std::size_t k = 0; k < a.dim(); ++k) {
        const Interval& m = (*meet)[k];
        if (m.lo && (!a[k].lo || *a[k].lo < *m.lo)) {
            auto iv = core;
            iv[k] = {a[k].lo, m.lo};
            pieces.emplace_back(std::move(iv));
        }
        if (m.hi && (!a[k].hi || *m.hi < *a[k].hi)) {
            auto iv = core;
            iv[k] = {m.hi, a[k].hi};
            pieces.emplace_back(std::move(iv));
        }
        core[k] = m;
    }
    return pieces;
}

Rational length_sum(std::span<const OpenBox> boxes)
{
    Rational total;
    for (const auto& b : boxes) {
        if (b.dim() != 1)
            throw DomainError("length_sum expects 1-D boxes");
        if (!b.bounded())
            throw DomainError("length_sum of an unbounded box");
        total += *b[0].hi - *b[0].lo;
    }
    return total;
}

namespace {

constexpr long unbounded_proxy_width = 16;
constexpr std::uint64_t max_grid = std::uint64_t{1} << 62;

} // namespace

PointSampler::PointSampler(const OpenBox& box, std::size_t expected, std::uint64_t seed)
    : grid_(4 * std::bit_ceil(std::max<std::uint64_t>(expected, 2))), period_(64 + 2 * expected), seed_(seed)
{
    const Rational w(unbounded_proxy_width);
    for (const auto& iv : box.intervals()) {
        if (iv.lo && iv.hi)
            sides_.push_back({*iv.lo, *iv.hi - *iv.lo});
        else if (iv.lo)
            sides_.push_back({*iv.lo, w});
        else if (iv.hi)
            sides_.push_back({*iv.hi - w, w});
        else
            sides_.push_back({Rational(-unbounded_proxy_width / 2), w});
    }
}

Point PointSampler::next()
{
    // The grid doubles every period.
    const std::uint64_t draw = stream_++;
    if (draw > 0 && draw % period_ == 0 && grid_ < max_grid)
        grid_ *= 2;
    Rng rng = Rng(seed_).split(draw);
    Point p;
    p.reserve(sides_.size());
    const mpz_class den(std::to_string(grid_));
    for (const auto& s : sides_) {
        const std::uint64_t j = 1 + rng.below(grid_ - 1);
        p.push_back(s.lo + s.width * Rational(mpz_class(std::to_string(j)), den));
    }
    return p;
}

std::vector<Point> sample(const OpenBox& b, std::size_t k, std::uint64_t seed)
{
    return sample_filtered(b, k, seed, [](const Point&) { return true; });
}

} // namespace localg
