#include "doctest.h"

#include <vector>

#include "localg/error.hpp"
#include "localg/generators.hpp"
#include "localg/terms.hpp"

using namespace localg;

namespace {

MultiIndex mi(std::vector<unsigned> e)
{
    return MultiIndex(std::move(e));
}

PolyTerm x_pow(unsigned k, const Value& c = Value(1))
{
    return PolyTerm::monomial(mi({k}), c);
}

// Dense univariate oracle: coefficient vectors with their own product and
// derivative, independent of the sparse implementation.
using Dense = std::vector<Rational>;

Dense dense_of(const PolyTerm& t)
{
    Dense d;
    for (const auto& [p, c] : t.monomials()) {
        if (d.size() <= p[0])
            d.resize(p[0] + 1);
        d[p[0]] = c.scalar();
    }
    return d;
}

Dense dense_mul(const Dense& a, const Dense& b)
{
    if (a.empty() || b.empty())
        return {};
    Dense r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

Dense dense_derive(const Dense& a)
{
    Dense r;
    for (std::size_t i = 1; i < a.size(); ++i)
        r.push_back(a[i] * Rational(static_cast<long>(i)));
    return r;
}

Dense trimmed(Dense d)
{
    while (!d.empty() && d.back().is_zero())
        d.pop_back();
    return d;
}

} // namespace

TEST_SUITE("terms")
{
    TEST_CASE("evaluation")
    {
        const PolyTerm t = x_pow(2) + PolyTerm::constant(1, Value(1));
        const Point x{Rational(3, 2)};
        CHECK(t.evaluate(x) == Value(Rational(13, 4)));
        CHECK(PolyTerm(1, ValueKind::scalar).evaluate(x) == Value(0));
        CHECK(PolyTerm::constant(1, Value(Rational(7, 3))).evaluate(x) == Value(Rational(7, 3)));
        CHECK_THROWS_AS(t.evaluate(Point{1, 2}), StructuralError);
    }

    TEST_CASE("formal derivatives")
    {
        CHECK(x_pow(3).derivative(mi({1})) == x_pow(2, Value(3)));
        const PolyTerm xy = PolyTerm::monomial(mi({1, 1}), Value(1));
        CHECK(xy.derivative(mi({1, 1})) == PolyTerm::constant(2, Value(1)));
        CHECK(x_pow(2).derivative(mi({3})).is_zero());
        const PolyTerm capped = x_pow(4).with_grade(SmoothGrade::finite(3));
        CHECK(capped.derivative(mi({2})).grade() == SmoothGrade::finite(1));
        CHECK(capped.derivative(mi({5})).grade() == SmoothGrade::finite(0));
        CHECK(x_pow(4).derivative(mi({2})).grade() == SmoothGrade::infinity());
    }

    TEST_CASE("derivatives beyond the degree vanish")
    {
        Rng rng(50);
        for (int i = 0; i < 50; ++i) {
            const PolyTerm t = random_term(rng, 2, ValueKind::scalar, 4, 4);
            const unsigned d = t.total_degree();
            CHECK(t.derivative(mi({d + 1, 0})).is_zero());
            CHECK(t.derivative(mi({0, d + 1})).is_zero());
            CHECK(t.derivative(mi({d, 1})).is_zero());
        }
    }

    TEST_CASE("ring operations")
    {
        const PolyTerm x = PolyTerm::variable(1, 0), one = PolyTerm::constant(1, Value(1));
        CHECK((x + one) * (x - one) == x_pow(2) - one);
        CHECK((x * PolyTerm(1, ValueKind::scalar)).is_zero());
        const PolyTerm a = PolyTerm::constant(1, Value::mat2(0, 1, 0, 0));
        const PolyTerm b = PolyTerm::constant(1, Value::mat2(0, 0, 1, 0));
        CHECK_FALSE(a * b == b * a);
        CHECK_THROWS_AS(x + a, StructuralError);
        CHECK_THROWS_AS(x + PolyTerm::variable(2, 0), StructuralError);
        PolyTerm t = x;
        t.add_monomial(mi({1}), Value(-1));
        CHECK(t.is_zero());
        CHECK_FALSE(x.is_zero());
        Rng rng(9);
        for (int i = 0; i < 50; ++i) {
            const PolyTerm r = random_term(rng, 2, ValueKind::mat2);
            CHECK((r - r).is_zero());
        }
        CHECK(SmoothGrade::finite(2) < SmoothGrade::infinity());
        CHECK(SmoothGrade::finite(2) < SmoothGrade::finite(3));
        CHECK((x_pow(2).with_grade(SmoothGrade::finite(2)) * x).grade() == SmoothGrade::finite(2));
    }

    TEST_CASE("product and derivative agree with the dense oracle")
    {
        Rng rng(17);
        for (int i = 0; i < 200; ++i) {
            const PolyTerm t = random_term(rng, 1, ValueKind::scalar, 5, 4);
            const PolyTerm u = random_term(rng, 1, ValueKind::scalar, 5, 4);
            CHECK(trimmed(dense_of(t * u)) == trimmed(dense_mul(dense_of(t), dense_of(u))));
            CHECK(trimmed(dense_of(t.derivative(mi({1})))) == trimmed(dense_derive(dense_of(t))));
        }
    }

    TEST_CASE("Leibniz rule is syntactic on random pairs")
    {
        Rng rng(23);
        for (int i = 0; i < 200; ++i) {
            const ValueKind kind = i % 2 ? ValueKind::mat2 : ValueKind::scalar;
            const PolyTerm t = random_term(rng, 2, kind, 4, 4), u = random_term(rng, 2, kind, 4, 4);
            for (std::size_t k = 0; k < 2; ++k) {
                const MultiIndex e = MultiIndex::unit(2, k);
                CHECK((t * u).derivative(e) == t.derivative(e) * u + t * u.derivative(e));
            }
        }
    }

    TEST_CASE("evaluation is multiplicative")
    {
        Rng rng(29);
        for (int i = 0; i < 200; ++i) {
            const ValueKind kind = i % 2 ? ValueKind::mat2 : ValueKind::scalar;
            const PolyTerm t = random_term(rng, 2, kind), u = random_term(rng, 2, kind);
            const Point x{random_rational(rng), random_rational(rng)};
            CHECK((t * u).evaluate(x) == t.evaluate(x) * u.evaluate(x));
            CHECK((t + u).evaluate(x) == t.evaluate(x) + u.evaluate(x));
        }
    }

    TEST_CASE("all derivatives vanish at a point exactly for the zero term")
    {
        Rng rng(31);
        for (int i = 0; i < 100; ++i) {
            const PolyTerm t = random_term(rng, 2, ValueKind::scalar, 3, 3);
            const Point x{random_rational(rng), random_rational(rng)};
            bool all_zero = true;
            for (unsigned a = 0; a <= 3; ++a)
                for (unsigned b = 0; a + b <= 3; ++b)
                    all_zero = all_zero && t.derivative(mi({a, b})).evaluate(x).is_zero();
            CHECK(all_zero == t.is_zero());
        }
    }

    TEST_CASE("a non-zero univariate term cannot vanish at degree+1 points")
    {
        Rng rng(37);
        for (int i = 0; i < 100; ++i) {
            const PolyTerm t = random_nonzero_term(rng, 1, ValueKind::scalar, 5, 4);
            int zeros = 0;
            for (long k = 1; k <= static_cast<long>(t.total_degree()) + 1; ++k)
                zeros += t.evaluate(Point{Rational(k, 7)}).is_zero() ? 1 : 0;
            CHECK(zeros <= static_cast<int>(t.total_degree()));
        }
    }
}
