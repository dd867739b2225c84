#include "doctest.h"

#include <set>

#include "localg/error.hpp"
#include "localg/generators.hpp"
#include "localg/regions.hpp"

using namespace localg;

namespace {

OpenBox iv(long a, long b)
{
    return OpenBox::interval(Rational(a), Rational(b));
}

OpenBox random_box(Rng& rng)
{
    Rational a = random_rational(rng), b = random_rational(rng);
    while (a == b)
        b = random_rational(rng);
    if (b < a)
        std::swap(a, b);
    return OpenBox::interval(a, b);
}

} // namespace

TEST_SUITE("regions")
{
    TEST_CASE("membership is strict")
    {
        CHECK(iv(0, 1).contains(Point{Rational(1, 2)}));
        CHECK_FALSE(iv(0, 1).contains(Point{Rational(1)}));
        CHECK_FALSE(iv(0, 1).contains(Point{Rational(0)}));
        CHECK(OpenBox::whole(2).contains(Point{Rational(-1000), Rational(7, 3)}));
        CHECK_THROWS_AS(iv(0, 1).contains(Point{1, 2}), StructuralError);
        CHECK_THROWS_AS(iv(1, 1), DomainError);
    }

    TEST_CASE("intersection")
    {
        CHECK(intersect(iv(0, 2), iv(1, 3)) == iv(1, 2));
        CHECK_FALSE(intersect(iv(0, 1), iv(2, 3)).has_value());
        CHECK_FALSE(intersect(iv(0, 1), iv(1, 3)).has_value());
        CHECK(intersect(iv(0, 1), OpenBox::whole(1)) == iv(0, 1));
    }

    TEST_CASE("intersection laws and pointwise characterisation")
    {
        Rng rng(41);
        for (int i = 0; i < 300; ++i) {
            const OpenBox a = random_box(rng), b = random_box(rng), c = random_box(rng);
            CHECK(intersect(a, b) == intersect(b, a));
            CHECK(intersect(a, a) == a);
            const auto ab = intersect(a, b);
            const auto bc = intersect(b, c);
            const auto left = ab ? intersect(*ab, c) : std::nullopt;
            const auto right = bc ? intersect(a, *bc) : std::nullopt;
            CHECK(left == right);
            for (int k = 0; k < 10; ++k) {
                const Point x{random_rational(rng)};
                CHECK((ab && ab->contains(x)) == (a.contains(x) && b.contains(x)));
            }
        }
    }

    TEST_CASE("box difference keeps only points outside the removed box")
    {
        Rng rng(43);
        for (int i = 0; i < 200; ++i) {
            const OpenBox a = random_box(rng), b = random_box(rng);
            const auto pieces = box_difference(a, b);
            for (int k = 0; k < 20; ++k) {
                const Point x{random_rational(rng)};
                bool in_piece = false;
                for (const auto& p : pieces)
                    in_piece = in_piece || p.contains(x);
                const bool on_boundary = x[0] == *b[0].lo || x[0] == *b[0].hi;
                if (!on_boundary)
                    CHECK(in_piece == (a.contains(x) && !b.contains(x)));
            }
        }
    }

    TEST_CASE("length sums")
    {
        const std::vector<OpenBox> boxes{iv(0, 1), OpenBox::interval(Rational(2), Rational(5, 2))};
        CHECK(length_sum(boxes) == Rational(3, 2));
        CHECK(length_sum(std::vector<OpenBox>{}) == Rational(0));
        CHECK_THROWS_AS(length_sum(std::vector<OpenBox>{OpenBox::whole(1)}), DomainError);
    }

    TEST_CASE("sampling is deterministic, inside and distinct")
    {
        CHECK(sample(iv(0, 1), 3, 7) == sample(iv(0, 1), 3, 7));
        const auto pts = sample(iv(0, 1), 100, 7);
        CHECK(std::set<Point>(pts.begin(), pts.end()).size() == 100);
        for (const auto& p : pts)
            CHECK(iv(0, 1).contains(p));
        const auto big = sample(OpenBox::interval(Rational(0), Rational(1, 1000000)), 2000, 1);
        CHECK(std::set<Point>(big.begin(), big.end()).size() == 2000);
        const OpenBox half({Interval{Rational(3), std::nullopt}, Interval{}});
        for (const auto& p : sample(half, 50, 2))
            CHECK(half.contains(p));
        CHECK_FALSE(sample(iv(0, 1), 5, 1) == sample(iv(0, 1), 5, 2));
    }
}
