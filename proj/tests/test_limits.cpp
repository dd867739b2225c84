#include "doctest.h"

#include "localg/atlas.hpp"
#include "localg/error.hpp"
#include "localg/generators.hpp"
#include "localg/limits.hpp"

using namespace localg;

namespace {

PolyTerm x1()
{
    return PolyTerm::variable(1, 0);
}

PolyTerm one()
{
    return PolyTerm::constant(1, Value(1));
}

const SingSet origin = SingSet::finite({Point{Rational(0)}});

} // namespace

TEST_SUITE("limits")
{
    TEST_CASE("equivalence of representatives")
    {
        const SFamily fam = standard_family(1);
        const auto w = witness_points(fam.top(), 1, 20, 1);
        const LocalFun f = lc_embed(x1(), SingSet::empty());
        CHECK(approx_equiv(f, f, fam, w));
        CHECK(approx_equiv(f, lc_embed(x1(), SingSet::corational()), fam, w));
        CHECK(approx_equiv(lc_embed(x1(), origin), lc_embed(x1(), SingSet::corational()), fam, w));
        CHECK_FALSE(approx_equiv(f, lc_embed(x1() + one(), SingSet::empty()), fam, w));
        const LocalFun outside = lc_embed(x1(), SingSet::finite({Point{Rational(5)}}));
        CHECK_THROWS_AS(approx_equiv(f, outside, fam, w), DomainError);

        // Representatives that differ only at the origin agree once it is excluded.
        const LocalFun patched(origin, 1, ValueKind::scalar,
                               {Chart{OpenBox::interval(Rational(0), Rational(1)), x1()},
                                Chart{OpenBox::whole(1), x1()}});
        CHECK(approx_equiv(patched, f, fam, w));
    }

    TEST_CASE("class arithmetic")
    {
        const SFamily fam = standard_family(1);
        const auto w = witness_points(fam.top(), 1, 20, 2);
        Rng rng(79);
        for (int i = 0; i < 100; ++i) {
            const PolyTerm a = random_term(rng, 1, ValueKind::scalar), b = random_term(rng, 1, ValueKind::scalar);
            const EquivClass ca = class_of(lc_embed(a, random_member(rng, fam)), fam);
            const EquivClass cb = class_of(lc_embed(b, random_member(rng, fam)), fam);
            CHECK(class_equal(class_mul(ca, cb), class_of(lc_embed(a * b, SingSet::empty()), fam), w));
            CHECK(class_equal(class_add(ca, cb), class_of(lc_embed(a + b, SingSet::corational()), fam), w));
            CHECK(class_equal(class_add(ca, class_neg(ca)), class_of(lc_embed(PolyTerm(1, ValueKind::scalar), SingSet::empty()), fam), w));
            CHECK(class_equal(class_mul(ca, cb), class_mul(cb, ca), w));
            if (!(a == b))
                CHECK_FALSE(class_equal(ca, cb, w));
        }
        const EquivClass e12 = class_of(lc_embed(PolyTerm::constant(1, Value::mat2(0, 1, 0, 0)), SingSet::empty()), fam);
        const EquivClass e21 = class_of(lc_embed(PolyTerm::constant(1, Value::mat2(0, 0, 1, 0)), origin), fam);
        CHECK_FALSE(class_equal(class_mul(e12, e21), class_mul(e21, e12), w));
        const EquivClass other = class_of(lc_embed(x1(), SingSet::empty()), SFamily::singleton(SingSet::empty()));
        CHECK_THROWS_AS(class_add(e12, other), StructuralError);
        CHECK_THROWS_AS(class_of(lc_embed(x1(), SingSet::finite({Point{Rational(7)}})), fam), DomainError);
    }

    TEST_CASE("a singleton family reduces to local function arithmetic")
    {
        const SFamily single = SFamily::singleton(SingSet::corational());
        const auto w = witness_points(SingSet::corational(), 1, 20, 3);
        Rng rng(83);
        for (int i = 0; i < 50; ++i) {
            const LocalFun f = random_local_fun(rng, SingSet::corational(), 1, ValueKind::mat2);
            const LocalFun g = random_local_fun(rng, SingSet::corational(), 1, ValueKind::mat2);
            const EquivClass p = class_mul(class_of(f, single), class_of(g, single));
            for (const auto& x : w)
                CHECK(p.rep.eval(x) == (f * g).eval(x));
        }
    }

    TEST_CASE("global classes")
    {
        const SFamily fam = standard_family(1);
        const auto w = witness_points(fam.top(), 1, 20, 4);
        CHECK(class_in_U(class_of(lc_embed(x1(), origin), fam), w));
        CHECK(class_in_U(class_of(lc_embed(PolyTerm(1, ValueKind::scalar), SingSet::empty()), fam), w));
        AtlasParams p;
        CHECK_FALSE(class_in_U(class_of(make_atlas(p), fam), w));
        const LocalFun split(SingSet::empty(), 1, ValueKind::scalar,
                             {Chart{OpenBox::interval(Rational(-9), Rational(9)), x1()}, Chart{OpenBox::whole(1), x1()}});
        CHECK(global_term(class_of(split, fam), w) == x1());
    }

    TEST_CASE("ideal classes")
    {
        const SFamily fam = standard_family(1);
        const OpenBox z12 = OpenBox::interval(Rational(1), Rational(2));
        const auto w = regular_sample(fam.top(), z12, 20, 5);
        CHECK(class_in_I(class_of(lc_embed(PolyTerm(1, ValueKind::scalar), SingSet::empty()), fam), z12, w));
        CHECK_FALSE(class_in_I(class_of(lc_embed(x1(), SingSet::empty()), fam), z12, w));
        AtlasParams p;
        p.profile = AtlasProfile::anchored;
        CHECK(class_in_I(class_of(make_atlas(p), fam), z12, w));
        const Zone at_origin(std::vector<Point>{Point{Rational(0)}});
        CHECK_THROWS_AS(class_in_I(class_of(lc_embed(x1(), SingSet::empty()), fam), at_origin, w), DomainError);
        const auto w01 = regular_sample(fam.top(), OpenBox::interval(Rational(0), Rational(1)), 20, 6);
        CHECK_FALSE(class_in_I(class_of(lc_embed(x1() * x1() + one(), SingSet::empty()), fam),
                               OpenBox::interval(Rational(0), Rational(1)), w01));
    }

    TEST_CASE("smoothness grades")
    {
        const SFamily fam = standard_family(1);
        const auto w = witness_points(fam.top(), 1, 20, 8);
        const EquivClass smooth = class_of(lc_embed(x1(), SingSet::empty()), fam);
        CHECK(class_grade(smooth) == SmoothGrade::infinity());
        const LocalFun capped(SingSet::empty(), 1, ValueKind::scalar,
                              {Chart{OpenBox::interval(Rational(0), Rational(1)), x1().with_grade(SmoothGrade::finite(2))},
                               Chart{OpenBox::whole(1), x1()}});
        const EquivClass c = class_of(capped, fam);
        CHECK(class_grade(c) == SmoothGrade::finite(2));
        CHECK(class_grade(class_mul(c, smooth)) >= SmoothGrade::finite(2));
        CHECK(in_A_l(c, SmoothGrade::finite(2)));
        CHECK_FALSE(in_A_l(c, SmoothGrade::finite(3)));
        CHECK(in_U_l(smooth, SmoothGrade::infinity(), w));
        CHECK_FALSE(in_U_l(c, SmoothGrade::infinity(), w));
        const OpenBox z = OpenBox::interval(Rational(0), Rational(1));
        const auto wz = regular_sample(fam.top(), z, 20, 9);
        CHECK(in_I_l(class_of(lc_embed(PolyTerm(1, ValueKind::scalar), SingSet::empty()), fam), SmoothGrade::infinity(), z, wz));
    }

    TEST_CASE("class encoding round trip")
    {
        const SFamily fam = standard_family(1);
        const EquivClass c = class_of(lc_embed(x1(), origin), fam);
        const EquivClass d = decode_class(encode(c));
        CHECK(d.family == c.family);
        CHECK(d.rep == c.rep);
    }

    TEST_CASE("campaigns at reduced size")
    {
        SuiteConfig cfg;
        cfg.seed = 12345;
        cfg.cases = 40;
        const SuiteReport ax = algebra_axioms_suite(cfg);
        CHECK(ax.passed());
        CHECK(ax.cases == 80);
        CHECK(ax.counters.at("commutativityRefutations.mat2") > 0);
        CHECK(off_diagonality_suite(cfg).passed());
        CHECK(restriction_suite(cfg).passed());
        const SuiteReport eq = equivalence_suite(cfg);
        CHECK(eq.passed());
        CHECK(eq.counters.at("transitivityChains") > 0);
        CHECK(algebra_axioms_suite(cfg).to_json() == ax.to_json());
    }
}
