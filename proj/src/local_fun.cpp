#include "localg/local_fun.hpp"

#include <algorithm>
#include <sstream>

#include "localg/error.hpp"
#include "localg/io.hpp"

namespace localg {

namespace {

enum class BinaryOp { sum, product };

class BinaryRule final : public ChartRule {
public:
    BinaryRule(BinaryOp op, LocalFun lhs, LocalFun rhs) : op_(op), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

    std::optional<Chart> chart_at(std::span<const Rational> x) const override
    {
        auto a = lhs_.find_chart(x);
        auto b = rhs_.find_chart(x);
        if (!a || !b)
            return std::nullopt;
        auto box = intersect(a->box, b->box);
        if (!box) // both boxes contain x
            throw Error("internal: chart boxes around a common point do not meet");
        return Chart{std::move(*box), op_ == BinaryOp::sum ? a->term + b->term : a->term * b->term};
    }

    SmoothGrade grade() const override { return std::min(lhs_.grade(), rhs_.grade()); }

    json encode() const override
    {
        return json{{op_ == BinaryOp::sum ? "sum" : "product", json::array({localg::encode(lhs_), localg::encode(rhs_)})}};
    }

private:
    BinaryOp op_;
    LocalFun lhs_;
    LocalFun rhs_;
};

class NegRule final : public ChartRule {
public:
    explicit NegRule(LocalFun f) : f_(std::move(f)) {}

    std::optional<Chart> chart_at(std::span<const Rational> x) const override
    {
        auto c = f_.find_chart(x);
        if (c)
            c->term = -c->term;
        return c;
    }
    SmoothGrade grade() const override { return f_.grade(); }
    json encode() const override { return json{{"neg", localg::encode(f_)}}; }

private:
    LocalFun f_;
};

class DeriveRule final : public ChartRule {
public:
    DeriveRule(LocalFun f, MultiIndex p) : f_(std::move(f)), p_(std::move(p)) {}

    std::optional<Chart> chart_at(std::span<const Rational> x) const override
    {
        auto c = f_.find_chart(x);
        if (c)
            c->term = c->term.derivative(p_);
        return c;
    }
    SmoothGrade grade() const override { return f_.grade().lowered(p_.order()); }
    json encode() const override
    {
        return json{{"derive", {{"of", localg::encode(f_)}, {"p", localg::encode(p_)}}}};
    }

private:
    LocalFun f_;
    MultiIndex p_;
};

void require_same_space(const LocalFun& f, const LocalFun& g, const char* op)
{
    if (f.dim() != g.dim())
        throw StructuralError(std::string("dimension mismatch in local ") + op);
    if (f.kind() != g.kind())
        throw StructuralError(std::string("value kind mismatch in local ") + op);
    if (!(f.sigma() == g.sigma()))
        throw StructuralError(std::string("singularity set mismatch in local ") + op +
                              "; restrict both to a common member first");
}

LocalFun combine(BinaryOp op, const LocalFun& f, const LocalFun& g)
{
    require_same_space(f, g, op == BinaryOp::sum ? "sum" : "product");
    if (f.is_finite() && g.is_finite()) {
        // Lexicographic order over (i, j) reproduces first-match assignment:
        // the first i whose box holds x, then the first such j.
        std::vector<Chart> charts;
        for (const auto& a : f.charts())
            for (const auto& b : g.charts())
                if (auto box = intersect(a.box, b.box))
                    charts.push_back({std::move(*box), op == BinaryOp::sum ? a.term + b.term : a.term * b.term});
        return LocalFun(f.sigma(), f.dim(), f.kind(), std::move(charts));
    }
    return LocalFun(f.sigma(), f.dim(), f.kind(), std::make_shared<BinaryRule>(op, f, g));
}

} // namespace

LocalFun::LocalFun(SingSet sigma, std::size_t dim, ValueKind kind, std::vector<Chart> charts)
    : sigma_(std::move(sigma)), dim_(dim), kind_(kind), body_(std::move(charts))
{
    for (const auto& c : std::get<std::vector<Chart>>(body_)) {
        if (c.box.dim() != dim_ || c.term.dim() != dim_)
            throw StructuralError("chart dimension differs from the family dimension");
        if (c.term.kind() != kind_)
            throw StructuralError("chart value kind differs from the family kind");
    }
}

LocalFun::LocalFun(SingSet sigma, std::size_t dim, ValueKind kind, std::shared_ptr<const ChartRule> rule)
    : sigma_(std::move(sigma)), dim_(dim), kind_(kind), body_(std::move(rule))
{
    if (!std::get<std::shared_ptr<const ChartRule>>(body_))
        throw StructuralError("generated local function without a rule");
}

std::span<const Chart> LocalFun::charts() const
{
    if (const auto* c = std::get_if<std::vector<Chart>>(&body_))
        return *c;
    return {};
}

const std::shared_ptr<const ChartRule>& LocalFun::rule() const
{
    static const std::shared_ptr<const ChartRule> none;
    if (const auto* r = std::get_if<std::shared_ptr<const ChartRule>>(&body_))
        return *r;
    return none;
}

std::optional<std::size_t> LocalFun::chart_index(std::span<const Rational> x) const
{
    const auto* charts = std::get_if<std::vector<Chart>>(&body_);
    if (!charts)
        return std::nullopt;
    for (std::size_t i = 0; i < charts->size(); ++i)
        if ((*charts)[i].box.contains(x))
            return i;
    return std::nullopt;
}

std::optional<Chart> LocalFun::find_chart(std::span<const Rational> x) const
{
    if (x.size() != dim_)
        throw StructuralError("point dimension differs from the family dimension");
    if (const auto* r = std::get_if<std::shared_ptr<const ChartRule>>(&body_))
        return (*r)->chart_at(x);
    if (auto i = chart_index(x))
        return std::get<std::vector<Chart>>(body_)[*i];
    return std::nullopt;
}

Chart LocalFun::chart_at(std::span<const Rational> x) const
{
    if (x.size() != dim_)
        throw StructuralError("point dimension differs from the family dimension");
    if (sigma_.contains(x))
        throw SingularPoint("point " + (std::ostringstream() << Point(x.begin(), x.end())).str() +
                            " is singular");
    auto c = find_chart(x);
    if (!c)
        throw UncoveredPoint("no chart covers point " + (std::ostringstream() << Point(x.begin(), x.end())).str());
    return std::move(*c);
}

Value LocalFun::eval(std::span<const Rational> x) const
{
    return chart_at(x).term.evaluate(x);
}

SmoothGrade LocalFun::grade() const
{
    if (const auto* r = std::get_if<std::shared_ptr<const ChartRule>>(&body_))
        return (*r)->grade();
    SmoothGrade g = SmoothGrade::infinity();
    for (const auto& c : std::get<std::vector<Chart>>(body_))
        g = std::min(g, c.term.grade());
    return g;
}

LocalFun LocalFun::with_sigma(SingSet sigma) const
{
    LocalFun f = *this;
    f.sigma_ = std::move(sigma);
    return f;
}

bool operator==(const LocalFun& a, const LocalFun& b)
{
    if (!(a.sigma_ == b.sigma_) || a.dim_ != b.dim_ || a.kind_ != b.kind_ || a.is_finite() != b.is_finite())
        return false;
    if (a.is_finite())
        return std::get<std::vector<Chart>>(a.body_) == std::get<std::vector<Chart>>(b.body_);
    const auto& ra = std::get<std::shared_ptr<const ChartRule>>(a.body_);
    const auto& rb = std::get<std::shared_ptr<const ChartRule>>(b.body_);
    return ra == rb || ra->encode() == rb->encode();
}

LocalFun lc_embed(const PolyTerm& g, const SingSet& sigma)
{
    return LocalFun(sigma, g.dim(), g.kind(), std::vector<Chart>{{OpenBox::whole(g.dim()), g}});
}

std::optional<PolyTerm> is_global(const LocalFun& f)
{
    const auto charts = f.charts();
    if (!f.is_finite() || charts.size() != 1 || !charts.front().box.is_whole())
        return std::nullopt;
    return charts.front().term;
}

LocalFun operator+(const LocalFun& f, const LocalFun& g)
{
    return combine(BinaryOp::sum, f, g);
}

LocalFun operator*(const LocalFun& f, const LocalFun& g)
{
    return combine(BinaryOp::product, f, g);
}

LocalFun operator-(const LocalFun& f)
{
    if (f.is_finite()) {
        std::vector<Chart> charts(f.charts().begin(), f.charts().end());
        for (auto& c : charts)
            c.term = -c.term;
        return LocalFun(f.sigma(), f.dim(), f.kind(), std::move(charts));
    }
    return LocalFun(f.sigma(), f.dim(), f.kind(), std::make_shared<NegRule>(f));
}

LocalFun operator-(const LocalFun& f, const LocalFun& g)
{
    return f + (-g);
}

LocalFun derivative(const LocalFun& f, const MultiIndex& p)
{
    if (p.dim() != f.dim())
        throw StructuralError("derivative multi-index dimension mismatch");
    if (f.is_finite()) {
        std::vector<Chart> charts(f.charts().begin(), f.charts().end());
        for (auto& c : charts)
            c.term = c.term.derivative(p);
        return LocalFun(f.sigma(), f.dim(), f.kind(), std::move(charts));
    }
    return LocalFun(f.sigma(), f.dim(), f.kind(), std::make_shared<DeriveRule>(f, p));
}

LocalFun restrict(const LocalFun& f, const SingSet& sigma2)
{
    if (f.sigma() == sigma2)
        return f;
    if (!subset_leq(f.sigma(), sigma2))
        throw DomainError("restriction to a singularity set not certified to contain the current one");
    return f.with_sigma(sigma2);
}

namespace {

template <class Trigger>
CompatReport compat_scan(const LocalFun& f, std::span<const Point> witnesses, Trigger triggered)
{
    CompatReport r;
    std::vector<Chart> charts;
    charts.reserve(witnesses.size());
    for (const auto& w : witnesses)
        charts.push_back(f.chart_at(w));
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
        for (std::size_t j = i + 1; j < witnesses.size(); ++j) {
            ++r.pairs_checked;
            if (!triggered(witnesses[i], charts[i], witnesses[j], charts[j]))
                continue;
            ++r.pairs_triggered;
            if (!charts[i].term.same_function(charts[j].term)) {
                r.holds = false;
                r.violations.emplace_back(witnesses[i], witnesses[j]);
            }
        }
    }
    return r;
}

} // namespace

CompatReport check_compat(const LocalFun& f, std::span<const Point> witnesses)
{
    return compat_scan(f, witnesses, [](const Point& x, const Chart& cx, const Point& y, const Chart& cy) {
        return cy.box.contains(x) && cx.box.contains(y);
    });
}

CompatReport check_strong_compat(const LocalFun& f, std::span<const Point> witnesses)
{
    return compat_scan(f, witnesses, [](const Point&, const Chart& cx, const Point&, const Chart& cy) {
        return intersect(cx.box, cy.box).has_value();
    });
}

Point overlap_witness(const LocalFun& f, const Point& x)
{
    const Chart c = f.chart_at(x);
    Point y = x;
    // Walk the first coordinate towards the upper side of the box, keeping
    // the simplest rationals, until a regular point is found.
    std::optional<Rational> hi = c.box[0].hi;
    for (int attempt = 0; attempt < 64; ++attempt) {
        y[0] = simplest_between(x[0], hi);
        if (!f.sigma().contains(y))
            return y;
        hi = y[0];
    }
    throw DomainError("no regular overlap witness found near the anchor");
}

bool Zone::contains(std::span<const Rational> x) const
{
    if (is_box())
        return box().contains(x);
    return std::any_of(points().begin(), points().end(),
                       [&](const Point& p) { return std::equal(p.begin(), p.end(), x.begin(), x.end()); });
}

bool Zone::has_regular_point(const SingSet& sigma) const
{
    if (!is_box())
        return std::any_of(points().begin(), points().end(), [&](const Point& p) { return !sigma.contains(p); });
    try {
        (void)regular_sample(sigma, box(), 1, 0);
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

bool in_ideal(const LocalFun& f, const Zone& z, std::span<const Point> witnesses)
{
    if (!z.has_regular_point(f.sigma()))
        throw DomainError("Z \\ Sigma is empty");
    for (const auto& w : witnesses) {
        if (!z.contains(w) || f.sigma().contains(w))
            throw DomainError("ideal witness outside Z \\ Sigma");
    }
    for (const auto& w : witnesses)
        if (!f.eval(w).is_zero())
            return false;
    if (!f.is_finite() || !z.is_box())
        return true;
    const auto charts = f.charts();
    for (std::size_t i = 0; i < charts.size(); ++i) {
        if (charts[i].term.is_zero())
            continue;
        const auto meet = intersect(charts[i].box, z.box());
        if (!meet)
            continue;
        std::vector<OpenBox> owned{*meet};
        for (std::size_t j = 0; j < i && !owned.empty(); ++j) {
            std::vector<OpenBox> rest;
            for (const auto& piece : owned) {
                auto d = box_difference(piece, charts[j].box);
                rest.insert(rest.end(), d.begin(), d.end());
            }
            owned = std::move(rest);
        }
        if (owned.empty())
            continue;
        // deg+1 probes in the part of Z this chart is assigned to.
        const std::size_t probes = charts[i].term.total_degree() + 1;
        const auto pts = sample_filtered(owned.front(), probes, 0x5eedULL + i,
                                         [&](const Point& p) { return !f.sigma().contains(p); });
        for (const auto& p : pts)
            if (!charts[i].term.evaluate(p).is_zero())
                return false;
    }
    return true;
}

} // namespace localg
