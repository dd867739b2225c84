#include "localg/sing_sets.hpp"

#include <algorithm>
#include <ostream>

#include "localg/error.hpp"

namespace localg {

SingSet SingSet::finite(std::vector<Point> points)
{
    for (const auto& p : points)
        if (!points.empty() && p.size() != points.front().size())
            throw StructuralError("finite singularity set with mixed dimensions");
    SingSet s;
    s.kind_ = Kind::finite;
    s.points_ = std::move(points);
    return s;
}

SingSet SingSet::corational()
{
    SingSet s;
    s.kind_ = Kind::corational;
    return s;
}

SingSet SingSet::union_of(std::vector<SingSet> parts)
{
    SingSet s;
    s.kind_ = Kind::union_of;
    s.parts_ = std::move(parts);
    return s;
}

bool SingSet::contains(std::span<const Rational> x) const
{
    switch (kind_) {
    case Kind::empty:
    case Kind::corational:
        return false;
    case Kind::finite:
        for (const auto& p : points_) {
            if (p.size() != x.size())
                throw StructuralError("singular point dimension mismatch");
            if (std::equal(p.begin(), p.end(), x.begin()))
                return true;
        }
        return false;
    case Kind::union_of:
        return std::any_of(parts_.begin(), parts_.end(), [&](const SingSet& s) { return s.contains(x); });
    }
    return false;
}

std::ostream& operator<<(std::ostream& os, const SingSet& s)
{
    switch (s.kind()) {
    case SingSet::Kind::empty:
        return os << "Empty";
    case SingSet::Kind::corational:
        return os << "CoRational";
    case SingSet::Kind::finite:
        os << "Finite{";
        for (std::size_t i = 0; i < s.points().size(); ++i)
            os << (i ? ", " : "") << s.points()[i];
        return os << "}";
    case SingSet::Kind::union_of:
        os << "Union[";
        for (std::size_t i = 0; i < s.parts().size(); ++i)
            os << (i ? ", " : "") << s.parts()[i];
        return os << "]";
    }
    return os;
}

namespace {

void collect(const SingSet& s, std::vector<Point>& points, bool& corational)
{
    switch (s.kind()) {
    case SingSet::Kind::empty:
        break;
    case SingSet::Kind::finite:
        points.insert(points.end(), s.points().begin(), s.points().end());
        break;
    case SingSet::Kind::corational:
        corational = true;
        break;
    case SingSet::Kind::union_of:
        for (const auto& p : s.parts())
            collect(p, points, corational);
        break;
    }
}

} // namespace

SingSet normalized(const SingSet& s)
{
    std::vector<Point> points;
    bool corational = false;
    collect(s, points, corational);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.empty())
        return corational ? SingSet::corational() : SingSet::empty();
    SingSet fin = SingSet::finite(std::move(points));
    if (!corational)
        return fin;
    return SingSet::union_of({std::move(fin), SingSet::corational()});
}

SingSet set_union(const SingSet& s, const SingSet& t)
{
    return normalized(SingSet::union_of({s, t}));
}

bool subset_leq(const SingSet& s, const SingSet& t)
{
    using K = SingSet::Kind;
    if (s.kind() == K::empty || s == t)
        return true;
    switch (s.kind()) {
    case K::union_of:
        return std::all_of(s.parts().begin(), s.parts().end(), [&](const SingSet& p) { return subset_leq(p, t); });
    case K::finite:
        // Rational points are decided exactly by membership.
        return std::all_of(s.points().begin(), s.points().end(), [&](const Point& p) { return t.contains(p); });
    case K::corational:
        if (t.kind() == K::corational)
            return true;
        if (t.kind() == K::union_of)
            return std::any_of(t.parts().begin(), t.parts().end(), [&](const SingSet& p) { return subset_leq(s, p); });
        return false;
    case K::empty:
        return true;
    }
    return false;
}

std::vector<Point> regular_sample(const SingSet& s, const OpenBox& b, std::size_t k, std::uint64_t seed)
{
    return sample_filtered(b, k, seed, [&](const Point& p) { return !s.contains(p); });
}

SFamily::SFamily(const std::vector<SingSet>& generators)
{
    if (generators.empty())
        throw DomainError("a family of singularity sets needs at least one member");
    for (const auto& g : generators) {
        SingSet n = normalized(g);
        if (!contains(n))
            members_.push_back(std::move(n));
    }
    for (std::size_t i = 0; i < members_.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            SingSet u = set_union(members_[i], members_[j]);
            if (!contains(u))
                members_.push_back(std::move(u));
        }
    }
}

bool SFamily::contains(const SingSet& s) const
{
    return std::find(members_.begin(), members_.end(), s) != members_.end();
}

const SingSet& SFamily::join(const SingSet& s, const SingSet& t) const
{
    if (!contains(s) || !contains(t))
        throw DomainError("join of a singularity set outside the family");
    const SingSet u = set_union(s, t);
    auto it = std::find(members_.begin(), members_.end(), u);
    if (it != members_.end())
        return *it;
    // Unreachable for families built by closure.
    for (const auto& m : members_)
        if (subset_leq(s, m) && subset_leq(t, m))
            return m;
    throw DomainError("family is not directed");
}

const SingSet& SFamily::top() const
{
    const SingSet* best = &members_.front();
    for (const auto& m : members_)
        best = &join(*best, m);
    return *best;
}

SFamily family_from_members(std::vector<SingSet> members)
{
    SFamily f;
    for (auto& m : members) {
        SingSet n = normalized(m);
        if (!f.contains(n))
            f.members_.push_back(std::move(n));
    }
    if (f.members_.empty())
        throw DomainError("a family of singularity sets needs at least one member");
    for (const auto& a : f.members_)
        for (const auto& b : f.members_)
            if (!f.contains(set_union(a, b)))
                throw DomainError("decoded family is not closed under union");
    return f;
}

} // namespace localg
