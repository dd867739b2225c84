#include "doctest.h"

#include <numeric>

#include "localg/atlas.hpp"
#include "localg/error.hpp"
#include "localg/local_fun.hpp"

using namespace localg;

namespace {

// Reference listing of the rationals of (0,1) by denominator, then numerator.
std::vector<Rational> unit_listing(std::size_t count)
{
    std::vector<Rational> out;
    for (long q = 2; out.size() < count; ++q)
        for (long p = 1; p < q && out.size() < count; ++p)
            if (std::gcd(p, q) == 1)
                out.emplace_back(p, q);
    return out;
}

Rational min_distance(const CountableAtlas& a, std::uint64_t n)
{
    Rational best = (a.anchor(0) - a.anchor(n)).abs();
    for (std::uint64_t m = 1; m < n; ++m) {
        const Rational d = (a.anchor(m) - a.anchor(n)).abs();
        if (d < best)
            best = d;
    }
    return best;
}

AtlasParams injective_params()
{
    AtlasParams p;
    p.constants.kind = ConstantSequence::Kind::index;
    return p;
}

std::vector<Point> anchors(const CountableAtlas& a, std::uint64_t count)
{
    std::vector<Point> out;
    for (std::uint64_t n = 0; n < count; ++n)
        out.push_back(Point{a.anchor(n)});
    return out;
}

} // namespace

TEST_SUITE("atlas")
{
    TEST_CASE("totient sums")
    {
        for (std::uint64_t m = 0; m <= 300; ++m) {
            std::uint64_t brute = 0;
            for (std::uint64_t k = 1; k <= m; ++k)
                for (std::uint64_t j = 1; j <= k; ++j)
                    brute += std::gcd(j, k) == 1 ? 1 : 0;
            CHECK(totient_sum(m) == brute);
        }
        CHECK(totient_sum(1000000) == 303963552392ULL);
    }

    TEST_CASE("enumeration of the unit interval")
    {
        const RationalEnumeration e(OpenBox::interval(Rational(0), Rational(1)));
        const auto ref = unit_listing(3000);
        for (std::uint64_t n = 0; n < ref.size(); ++n) {
            CHECK(e.at(n) == ref[n]);
            CHECK(e.index_of(ref[n]) == n);
        }
        CHECK(e.at(0) == Rational(1, 2));
        CHECK(e.at(5) == Rational(1, 5));
        CHECK_THROWS_AS(e.index_of(Rational(2)), DomainError);
    }

    TEST_CASE("enumeration round trips on other domains")
    {
        for (const OpenBox& d : {OpenBox::whole(1), OpenBox::interval(Rational(-3), Rational(1, 2)),
                                 OpenBox({Interval{Rational(1), std::nullopt}})}) {
            const RationalEnumeration e(d);
            for (std::uint64_t n = 0; n < 2000; n += 7) {
                CHECK(d.contains(Point{e.at(n)}));
                CHECK(e.index_of(e.at(n)) == n);
            }
            const std::uint64_t deep = 123456789;
            CHECK(e.index_of(e.at(deep)) == deep);
        }
        CHECK(RationalEnumeration(OpenBox::whole(1)).at(0) == Rational(0));
    }

    TEST_CASE("distance to earlier anchors against brute force")
    {
        for (const OpenBox& d : {OpenBox::whole(1), OpenBox::interval(Rational(-3), Rational(1, 2)),
                                 OpenBox({Interval{std::nullopt, Rational(2)}})}) {
            const RationalEnumeration e(d);
            std::vector<Rational> xs;
            for (std::uint64_t n = 0; n < 600; ++n)
                xs.push_back(e.at(n));
            for (std::uint64_t n = 1; n < xs.size(); ++n) {
                Rational best = (xs[0] - xs[n]).abs();
                for (std::uint64_t m = 1; m < n; ++m)
                    if ((xs[m] - xs[n]).abs() < best)
                        best = (xs[m] - xs[n]).abs();
                CHECK(e.earlier_distance(n) == best);
            }
        }
        CHECK_THROWS_AS(RationalEnumeration(OpenBox::whole(1)).earlier_distance(0), DomainError);
    }

    TEST_CASE("radii follow the closed form")
    {
        const CountableAtlas a(injective_params());
        const Rational eps = a.params().epsilon;
        for (std::uint64_t n = 1; n < 200; ++n) {
            const Rational budget = eps / Rational(static_cast<long>((n + 1) * (n + 2)));
            const Rational half = min_distance(a, n) / Rational(2);
            CHECK(a.radius(n) == (budget < half ? budget : half));
        }
        CHECK(a.radius(0) == eps / Rational(2));
    }

    TEST_CASE("the five facts on 200 charts")
    {
        AtlasParams p = injective_params();
        const LocalFun f = make_atlas(p);
        const CountableAtlas& a = *as_atlas(f);
        CHECK(f.sigma() == SingSet::corational());
        std::vector<OpenBox> boxes;
        for (std::uint64_t m = 0; m < 200; ++m) {
            const Chart c = a.chart(m);
            boxes.push_back(c.box);
            CHECK(c.box.contains(Point{a.anchor(m)}));
            CHECK(c.term.total_degree() == 0);
            CHECK(c.term.grade().is_infinite());
            CHECK(f.chart_at(Point{a.anchor(m)}) == c);
            CHECK(f.eval(Point{a.anchor(m)}) == Value(Rational(static_cast<long>(m))));
            for (std::uint64_t n = 0; n < m; ++n)
                CHECK_FALSE(c.box.contains(Point{a.anchor(n)}));
        }
        CHECK(length_sum(boxes) <= Rational(2) * p.epsilon);
        const auto w = anchors(a, 200);
        const CompatReport weak = check_compat(f, w);
        CHECK(weak.holds);
        CHECK(weak.pairs_checked == 200 * 199 / 2);
        const Point y = overlap_witness(f, w[0]);
        CHECK_FALSE(f.eval(y) == f.eval(w[0]));
        std::vector<Point> pair{w[0], y};
        CHECK_FALSE(check_strong_compat(f, pair).holds);
    }

    TEST_CASE("smaller budget and arbitrary constants")
    {
        AtlasParams p = injective_params();
        p.epsilon = Rational(1, 1000000);
        p.constants.kind = ConstantSequence::Kind::factorial;
        const LocalFun f = make_atlas(p);
        const CountableAtlas& a = *as_atlas(f);
        std::vector<OpenBox> boxes;
        for (std::uint64_t m = 0; m < 200; ++m)
            boxes.push_back(a.chart(m).box);
        CHECK(length_sum(boxes) <= Rational(2, 1000000));
        CHECK(f.eval(Point{a.anchor(10)}) == Value(Rational(3628800)));
        long fact = 1;
        for (long n = 1; n <= 20; ++n) {
            fact *= n;
            CHECK(f.eval(Point{a.anchor(static_cast<std::uint64_t>(n))}) == Value(Rational(fact)));
        }
    }

    TEST_CASE("constant sequences")
    {
        ConstantSequence c;
        c.kind = ConstantSequence::Kind::enumerated;
        c.values = {Value(1), Value(2)};
        CHECK(c.at(3) == Value(2));
        CHECK_FALSE(c.injective());
        ConstantSequence z;
        z.kind = ConstantSequence::Kind::zero;
        CHECK(z.at(7).is_zero());
        ConstantSequence m;
        m.unit = Value::mat2(1, 0, 0, 2);
        CHECK(m.at(3) == Value::mat2(3, 0, 0, 6));
        CHECK(m.injective());
    }
}
