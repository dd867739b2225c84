#include "localg/generators.hpp"

#include <algorithm>
#include <set>

#include "localg/error.hpp"

namespace localg {

Rational random_rational(Rng& rng, long max_num, long max_den)
{
    return Rational(rng.between(-max_num, max_num), rng.between(1, max_den));
}

Value random_value(Rng& rng, ValueKind kind)
{
    if (kind == ValueKind::scalar)
        return random_rational(rng);
    const long m = 4;
    return Value::mat2(random_rational(rng, m, 3), random_rational(rng, m, 3), random_rational(rng, m, 3),
                       random_rational(rng, m, 3));
}

Value random_nonzero_value(Rng& rng, ValueKind kind)
{
    for (;;) {
        Value v = random_value(rng, kind);
        if (!v.is_zero())
            return v;
    }
}

PolyTerm random_term(Rng& rng, std::size_t dim, ValueKind kind, unsigned max_degree, std::size_t max_monomials)
{
    PolyTerm t(dim, kind);
    const std::size_t count = rng.below(max_monomials + 1);
    for (std::size_t k = 0; k < count; ++k) {
        std::vector<unsigned> e(dim, 0);
        unsigned budget = static_cast<unsigned>(rng.below(max_degree + 1));
        for (std::size_t i = 0; i < dim && budget > 0; ++i) {
            const unsigned d = i + 1 == dim ? budget : static_cast<unsigned>(rng.below(budget + 1));
            e[i] = d;
            budget -= d;
        }
        t.add_monomial(MultiIndex(std::move(e)), random_nonzero_value(rng, kind));
    }
    return t;
}

PolyTerm random_nonzero_term(Rng& rng, std::size_t dim, ValueKind kind, unsigned max_degree, std::size_t max_monomials)
{
    for (;;) {
        PolyTerm t = random_term(rng, dim, kind, max_degree, std::max<std::size_t>(max_monomials, 1));
        if (!t.is_zero())
            return t;
    }
}

namespace {

Rational grid_point(Rng& rng)
{
    return Rational(rng.between(-32, 32), 8);
}

Interval random_side(Rng& rng)
{
    Rational a = grid_point(rng);
    Rational b = grid_point(rng);
    while (a == b)
        b = grid_point(rng);
    if (b < a)
        std::swap(a, b);
    return {a, b};
}

} // namespace

LocalFun random_local_fun(Rng& rng, const SingSet& sigma, std::size_t dim, ValueKind kind, std::size_t max_boxes)
{
    const std::size_t boxes = rng.below(max_boxes + 1);
    std::set<Rational> cuts;
    while (cuts.size() < 2 * boxes)
        cuts.insert(grid_point(rng));
    std::vector<Rational> c(cuts.begin(), cuts.end());
    std::vector<Chart> charts;
    for (std::size_t k = 0; k < boxes; ++k) {
        std::vector<Interval> sides{{c[2 * k], c[2 * k + 1]}};
        for (std::size_t i = 1; i < dim; ++i)
            sides.push_back(rng.coin() ? Interval{} : random_side(rng));
        charts.push_back({OpenBox(std::move(sides)), random_term(rng, dim, kind)});
    }
    charts.push_back({OpenBox::whole(dim), random_term(rng, dim, kind)});
    return LocalFun(sigma, dim, kind, std::move(charts));
}

LocalFun perturbed(Rng& rng, const LocalFun& f, const SFamily& family)
{
    LocalFun g = restrict(f, random_member_above(rng, family, f.sigma()));
    if (!g.is_finite() || g.charts().empty())
        return g;
    const Chart& first = g.charts().front();
    std::vector<Interval> sides;
    for (const auto& iv : first.box.intervals()) {
        const Interval r = random_side(rng);
        Interval s{iv.lo && (!r.lo || *r.lo < *iv.lo) ? iv.lo : r.lo, iv.hi && (!r.hi || *iv.hi < *r.hi) ? iv.hi : r.hi};
        if (s.lo && s.hi && !(*s.lo < *s.hi))
            s = iv;
        sides.push_back(s);
    }
    std::vector<Chart> charts{{OpenBox(std::move(sides)), first.term}};
    charts.insert(charts.end(), g.charts().begin(), g.charts().end());
    return LocalFun(g.sigma(), g.dim(), g.kind(), std::move(charts));
}

SFamily standard_family(std::size_t dim)
{
    return SFamily({SingSet::empty(), SingSet::finite({Point(dim, Rational(0))}), SingSet::corational()});
}

const SingSet& random_member(Rng& rng, const SFamily& family)
{
    return family.members()[rng.below(family.members().size())];
}

const SingSet& random_member_above(Rng& rng, const SFamily& family, const SingSet& s)
{
    std::vector<const SingSet*> above;
    for (const auto& m : family.members())
        if (subset_leq(s, m))
            above.push_back(&m);
    if (above.empty())
        throw DomainError("no family member contains the given singularity set");
    return *above[rng.below(above.size())];
}

} // namespace localg
