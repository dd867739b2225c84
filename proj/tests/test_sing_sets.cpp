#include "doctest.h"

#include <set>

#include "localg/error.hpp"
#include "localg/generators.hpp"
#include "localg/sing_sets.hpp"

using namespace localg;

namespace {

SingSet fin(std::initializer_list<long> xs)
{
    std::vector<Point> pts;
    for (long x : xs)
        pts.push_back(Point{Rational(x)});
    return SingSet::finite(pts);
}

const OpenBox unit_box = OpenBox::interval(Rational(0), Rational(1));

} // namespace

TEST_SUITE("sing_sets")
{
    TEST_CASE("membership of rational points")
    {
        CHECK_FALSE(is_singular(SingSet::corational(), Point{Rational(1, 3)}));
        CHECK(is_singular(fin({0}), Point{Rational(0)}));
        CHECK_FALSE(is_singular(fin({0}), Point{Rational(1)}));
        CHECK_FALSE(is_singular(SingSet::empty(), Point{Rational(5)}));
        CHECK(is_singular(SingSet::union_of({SingSet::corational(), fin({2})}), Point{Rational(2)}));
    }

    TEST_CASE("regular sampling")
    {
        const auto a = regular_sample(SingSet::corational(), unit_box, 10, 1);
        CHECK(a.size() == 10);
        for (const auto& p : a)
            CHECK(unit_box.contains(p));
        const SingSet half = SingSet::finite({Point{Rational(1, 2)}});
        for (const auto& p : regular_sample(half, unit_box, 5, 1))
            CHECK_FALSE(p == Point{Rational(1, 2)});
        CHECK(regular_sample(half, unit_box, 5, 9) == regular_sample(half, unit_box, 5, 9));
        const auto many = regular_sample(fin({0}), unit_box, 1000, 4);
        CHECK(std::set<Point>(many.begin(), many.end()).size() == 1000);
    }

    TEST_CASE("certified containment")
    {
        CHECK(subset_leq(SingSet::empty(), SingSet::corational()));
        CHECK(subset_leq(fin({0}), SingSet::union_of({fin({0, 1}), SingSet::corational()})));
        CHECK_FALSE(subset_leq(SingSet::corational(), fin({0})));
        CHECK(subset_leq(SingSet::corational(), SingSet::union_of({fin({3}), SingSet::corational()})));
        CHECK_FALSE(subset_leq(fin({0, 2}), fin({0, 1})));
        const std::vector<SingSet> sets{SingSet::empty(), fin({0}), fin({0, 1}), SingSet::corational(),
                                        SingSet::union_of({fin({0}), SingSet::corational()}),
                                        SingSet::union_of({fin({0, 1}), SingSet::corational()})};
        for (const auto& a : sets) {
            CHECK(subset_leq(a, a));
            for (const auto& b : sets)
                for (const auto& c : sets)
                    if (subset_leq(a, b) && subset_leq(b, c))
                        CHECK(subset_leq(a, c));
        }
    }

    TEST_CASE("normal form")
    {
        const SingSet nested = SingSet::union_of(
            {fin({1}), SingSet::union_of({SingSet::empty(), fin({0}), SingSet::corational()})});
        CHECK(normalized(nested) == SingSet::union_of({fin({0, 1}), SingSet::corational()}));
        CHECK(normalized(SingSet::union_of({SingSet::empty()})) == SingSet::empty());
        CHECK(set_union(fin({1}), fin({0})) == fin({0, 1}));
    }

    TEST_CASE("directed families")
    {
        const SFamily single = SFamily::singleton(SingSet::corational());
        CHECK(single.join(SingSet::corational(), SingSet::corational()) == SingSet::corational());
        const SFamily fam({SingSet::empty(), fin({0}), SingSet::corational()});
        CHECK(fam.members().size() == 4);
        CHECK(fam.join(fin({0}), SingSet::corational()) == normalized(SingSet::union_of({fin({0}), SingSet::corational()})));
        CHECK(fam.top() == fam.join(fin({0}), SingSet::corational()));
        CHECK(fam == standard_family(1));
        for (const auto& s : fam.members())
            for (const auto& t : fam.members()) {
                const SingSet& j = fam.join(s, t);
                CHECK(fam.contains(j));
                CHECK(subset_leq(s, j));
                CHECK(subset_leq(t, j));
            }
        CHECK_THROWS_AS(family_from_members({fin({0}), fin({1})}), DomainError);
        CHECK(family_from_members(fam.members()) == fam);
    }
}
