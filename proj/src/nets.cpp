#include "localg/nets.hpp"

#include <algorithm>
#include <set>

#include "localg/error.hpp"
#include "localg/generators.hpp"
#include "localg/io.hpp"

namespace localg {

namespace {

LocalFun smooth_over(const LocalFun& f, const SingSet& sigma)
{
    if (!f.grade().is_infinite())
        throw DomainError("net components must have infinite grade");
    return restrict(f, sigma);
}

PolyTerm scaled_term(const PolyTerm& t, const Rational& s)
{
    PolyTerm out(t.dim(), t.kind());
    for (const auto& [p, c] : t.monomials())
        out.add_monomial(p, c.scaled(s));
    return out.with_grade(t.grade());
}

class ScaledRule final : public NetRule {
public:
    explicit ScaledRule(PolyTerm term) : term_(std::move(term)) {}
    LocalFun component(Index lambda) const override
    {
        return lc_embed(scaled_term(term_, Rational(static_cast<long>(lambda))), SingSet::empty());
    }
    json encode() const override { return {{"name", "scaled"}, {"params", {{"term", localg::encode(term_)}}}}; }

private:
    PolyTerm term_;
};

class StaircaseRule final : public NetRule {
public:
    explicit StaircaseRule(AtlasParams p) : params_(std::move(p)) { params_.vanish_upto.reset(); }
    LocalFun component(Index lambda) const override
    {
        AtlasParams p = params_;
        p.vanish_upto = lambda;
        return make_atlas(std::move(p));
    }
    json encode() const override { return {{"name", "staircase"}, {"params", localg::encode(params_)}}; }

private:
    AtlasParams params_;
};

enum class NetOp { sum, product };

class BinaryNetRule final : public NetRule {
public:
    BinaryNetRule(NetOp op, Net u, Net v) : op_(op), u_(std::move(u)), v_(std::move(v)) {}
    LocalFun component(Index lambda) const override
    {
        const LocalFun a = u_.component(lambda), b = v_.component(lambda);
        return op_ == NetOp::sum ? a + b : a * b;
    }
    json encode() const override
    {
        return {{"name", op_ == NetOp::sum ? "sum" : "product"},
                {"params", json::array({localg::encode(u_), localg::encode(v_)})}};
    }

private:
    NetOp op_;
    Net u_;
    Net v_;
};

class NegNetRule final : public NetRule {
public:
    explicit NegNetRule(Net u) : u_(std::move(u)) {}
    LocalFun component(Index lambda) const override { return -u_.component(lambda); }
    json encode() const override { return {{"name", "neg"}, {"params", localg::encode(u_)}}; }

private:
    Net u_;
};

class DeriveNetRule final : public NetRule {
public:
    DeriveNetRule(Net u, MultiIndex p) : u_(std::move(u)), p_(std::move(p)) {}
    LocalFun component(Index lambda) const override { return derivative(u_.component(lambda), p_); }
    json encode() const override
    {
        return {{"name", "derive"}, {"params", {{"of", localg::encode(u_)}, {"p", localg::encode(p_)}}}};
    }

private:
    Net u_;
    MultiIndex p_;
};

void require_same_space(const Net& u, const Net& v)
{
    if (u.dim() != v.dim() || u.kind() != v.kind())
        throw StructuralError("nets over different spaces or value algebras");
    if (!(u.sigma() == v.sigma()))
        throw StructuralError("nets over different singularity sets; restrict both to a common member first");
}

/// Constant bodies viewed as eventually-constant ones with an empty prefix.
std::optional<Net::Eventually> as_eventually(const Net& u)
{
    if (const auto* c = std::get_if<Net::Constant>(&u.body()))
        return Net::Eventually{{}, c->f};
    if (const auto* e = std::get_if<Net::Eventually>(&u.body()))
        return *e;
    return std::nullopt;
}

template <class Op>
Net combine(NetOp op, const Net& u, const Net& v, Op f)
{
    require_same_space(u, v);
    if (u.is_constant() && v.is_constant())
        return Net::constant(f(u.component(0), v.component(0)));
    const auto eu = as_eventually(u), ev = as_eventually(v);
    if (eu && ev) {
        std::set<Index> indices;
        for (const auto& [l, _] : eu->prefix)
            indices.insert(l);
        for (const auto& [l, _] : ev->prefix)
            indices.insert(l);
        std::vector<std::pair<Index, LocalFun>> prefix;
        for (const Index l : indices)
            prefix.emplace_back(l, f(u.component(l), v.component(l)));
        return Net::eventually(u.sigma(), std::move(prefix), f(eu->tail, ev->tail));
    }
    return Net::generated(u.sigma(), u.dim(), u.kind(), std::make_shared<BinaryNetRule>(op, u, v));
}

template <class Op>
Net map_structural(const Net& u, Op f, std::shared_ptr<const NetRule> rule)
{
    if (const auto* c = std::get_if<Net::Constant>(&u.body()))
        return Net::constant(f(c->f));
    if (const auto* e = std::get_if<Net::Eventually>(&u.body())) {
        std::vector<std::pair<Index, LocalFun>> prefix;
        for (const auto& [l, g] : e->prefix)
            prefix.emplace_back(l, f(g));
        return Net::eventually(u.sigma(), std::move(prefix), f(e->tail));
    }
    return Net::generated(u.sigma(), u.dim(), u.kind(), std::move(rule));
}

const SingSet& member_of(const SFamily& s, const SingSet& sigma)
{
    const SingSet n = normalized(sigma);
    auto it = std::find(s.members().begin(), s.members().end(), n);
    if (it == s.members().end())
        throw DomainError("singularity set is not a member of the family");
    return *it;
}

} // namespace

Net::Net(SingSet sigma, std::size_t dim, ValueKind kind, Body body)
    : sigma_(std::move(sigma)), dim_(dim), kind_(kind), body_(std::move(body))
{
}

Net Net::constant(LocalFun f)
{
    SingSet s = f.sigma();
    const std::size_t dim = f.dim();
    const ValueKind kind = f.kind();
    LocalFun g = smooth_over(f, s);
    return Net(std::move(s), dim, kind, Constant{std::move(g)});
}

Net Net::eventually(SingSet sigma, std::vector<std::pair<Index, LocalFun>> prefix, LocalFun tail)
{
    std::sort(prefix.begin(), prefix.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < prefix.size(); ++i)
        if (prefix[i].first == prefix[i - 1].first)
            throw StructuralError("repeated index in an eventually-constant net");
    for (auto& [l, f] : prefix) {
        if (f.dim() != tail.dim() || f.kind() != tail.kind())
            throw StructuralError("net components over different spaces");
        f = smooth_over(f, sigma);
    }
    const std::size_t dim = tail.dim();
    const ValueKind kind = tail.kind();
    tail = smooth_over(tail, sigma);
    return Net(std::move(sigma), dim, kind, Eventually{std::move(prefix), std::move(tail)});
}

Net Net::generated(SingSet sigma, std::size_t dim, ValueKind kind, std::shared_ptr<const NetRule> rule)
{
    if (!rule)
        throw StructuralError("generated net without a rule");
    return Net(std::move(sigma), dim, kind, std::move(rule));
}

LocalFun Net::component(Index lambda) const
{
    if (const auto* c = std::get_if<Constant>(&body_))
        return c->f;
    if (const auto* e = std::get_if<Eventually>(&body_)) {
        auto it = std::lower_bound(e->prefix.begin(), e->prefix.end(), lambda,
                                   [](const auto& entry, Index l) { return entry.first < l; });
        return it != e->prefix.end() && it->first == lambda ? it->second : e->tail;
    }
    return smooth_over(std::get<std::shared_ptr<const NetRule>>(body_)->component(lambda), sigma_);
}

Net Net::restricted(const SingSet& sigma2) const
{
    if (sigma_ == sigma2)
        return *this;
    if (!subset_leq(sigma_, sigma2))
        throw DomainError("restriction to a singularity set not certified to contain the current one");
    Net w = *this;
    w.sigma_ = sigma2;
    if (auto* c = std::get_if<Constant>(&w.body_)) {
        c->f = restrict(c->f, sigma2);
    } else if (auto* e = std::get_if<Eventually>(&w.body_)) {
        for (auto& [l, f] : e->prefix)
            f = restrict(f, sigma2);
        e->tail = restrict(e->tail, sigma2);
    }
    return w;
}

bool operator==(const Net& a, const Net& b)
{
    return encode(a) == encode(b);
}

Net operator+(const Net& u, const Net& v)
{
    return combine(NetOp::sum, u, v, [](const LocalFun& f, const LocalFun& g) { return f + g; });
}

Net operator*(const Net& u, const Net& v)
{
    return combine(NetOp::product, u, v, [](const LocalFun& f, const LocalFun& g) { return f * g; });
}

Net operator-(const Net& u)
{
    return map_structural(u, [](const LocalFun& f) { return -f; }, std::make_shared<NegNetRule>(u));
}

Net operator-(const Net& u, const Net& v)
{
    return u + (-v);
}

Net derivative(const Net& u, const MultiIndex& p)
{
    if (p.dim() != u.dim())
        throw StructuralError("derivative multi-index dimension mismatch");
    return map_structural(u, [&](const LocalFun& f) { return derivative(f, p); },
                          std::make_shared<DeriveNetRule>(u, p));
}

Net scaled_net(const PolyTerm& term, const SingSet& sigma)
{
    if (!term.grade().is_infinite())
        throw DomainError("net components must have infinite grade");
    return Net::generated(sigma, term.dim(), term.kind(), std::make_shared<ScaledRule>(term));
}

Net staircase_net(AtlasParams params)
{
    const ValueKind kind = params.constants.value_kind();
    return Net::generated(SingSet::corational(), 1, kind, std::make_shared<StaircaseRule>(std::move(params)));
}

Index VanishCert::threshold(std::span<const Rational> x) const
{
    for (const auto& [p, l] : thresholds)
        if (std::equal(p.begin(), p.end(), x.begin(), x.end()))
            return l;
    return fallback;
}

VanishCert cert_max(const VanishCert& a, const VanishCert& b)
{
    VanishCert c;
    c.fallback = std::max(a.fallback, b.fallback);
    c.probe_depth = std::max(a.probe_depth, b.probe_depth);
    std::set<Point> seen;
    for (const auto* src : {&a, &b}) {
        for (const auto& [p, _] : src->thresholds) {
            if (!seen.insert(p).second)
                continue;
            c.thresholds.emplace_back(p, std::max(a.threshold(p), b.threshold(p)));
        }
    }
    return c;
}

VanishCert staircase_cert(const AtlasParams& params, std::span<const Point> points, unsigned probe_depth)
{
    const RationalEnumeration en(params.domain);
    VanishCert c;
    c.probe_depth = probe_depth;
    for (const auto& p : points)
        if (p.size() == 1 && params.domain.contains(p))
            c.thresholds.emplace_back(p, en.index_of(p[0]));
    return c;
}

namespace {

bool zero_chart_at(const LocalFun& f, const Point& x)
{
    const auto c = f.find_chart(x);
    return c && c->term.is_zero();
}

} // namespace

bool in_N(const Net& w, const VanishCert& cert, std::span<const Point> witnesses)
{
    for (const auto& x : witnesses) {
        if (x.size() != w.dim())
            throw StructuralError("witness dimension differs from the net dimension");
        if (w.sigma().contains(x))
            throw DomainError("vanishing witness is singular for the net");
        const Index start = cert.threshold(x);
        if (const auto* c = std::get_if<Net::Constant>(&w.body())) {
            if (!zero_chart_at(c->f, x))
                return false;
        } else if (const auto* e = std::get_if<Net::Eventually>(&w.body())) {
            for (const auto& [l, f] : e->prefix)
                if (l >= start && !zero_chart_at(f, x))
                    return false;
            if (!zero_chart_at(e->tail, x))
                return false;
        } else {
            for (Index mu = start; mu <= start + cert.probe_depth; ++mu)
                if (!zero_chart_at(w.component(mu), x))
                    return false;
        }
    }
    return true;
}

LocalFun net_component(const Net& w, Index lambda)
{
    return w.component(lambda);
}

namespace {

void require_same_family(const GenFun& u, const GenFun& v)
{
    if (!(u.family == v.family))
        throw StructuralError("generalized functions over different families of singularity sets");
}

template <class Op>
GenFun gen_combine(const GenFun& u, const GenFun& v, Op op)
{
    require_same_family(u, v);
    const SingSet& joined = u.family.join(member_of(u.family, u.net.sigma()), member_of(v.family, v.net.sigma()));
    return {u.family, op(u.net.restricted(joined), v.net.restricted(joined))};
}

} // namespace

GenFun gen_add(const GenFun& u, const GenFun& v)
{
    return gen_combine(u, v, [](const Net& a, const Net& b) { return a + b; });
}

GenFun gen_mul(const GenFun& u, const GenFun& v)
{
    return gen_combine(u, v, [](const Net& a, const Net& b) { return a * b; });
}

GenFun gen_neg(const GenFun& u)
{
    return {u.family, -u.net};
}

GenFun gen_sub(const GenFun& u, const GenFun& v)
{
    return gen_add(u, gen_neg(v));
}

GenFun gen_derive(const GenFun& u, const MultiIndex& p)
{
    return {u.family, derivative(u.net, p)};
}

GenFun diagonal_embed(const LocalFun& f, const SFamily& family)
{
    if (!f.grade().is_infinite())
        throw DomainError("only smooth local functions embed diagonally");
    const SingSet& m = member_of(family, f.sigma());
    return {family, Net::constant(f.sigma() == m ? f : f.with_sigma(m))};
}

bool gen_equal(const GenFun& u, const GenFun& v, const VanishCert& cert, std::span<const Point> witnesses)
{
    return in_N(gen_sub(u, v).net, cert, witnesses);
}

GenFun build_dense_singular_demo(const Rational& epsilon, const ConstantSequence& growth)
{
    if (epsilon.sign() <= 0)
        throw DomainError("epsilon must be positive");
    AtlasParams p;
    p.epsilon = epsilon;
    p.constants = growth;
    return diagonal_embed(make_atlas(std::move(p)), SFamily::singleton(SingSet::corational()));
}

ModeratenessProbe moderateness_probe(const GenFun& u, std::span<const Point> points, unsigned degree)
{
    if (points.size() < 2)
        throw DomainError("moderateness probe needs at least two points");
    ModeratenessProbe r;
    r.degree = degree;
    const LocalFun f = u.net.component(0);
    const std::size_t half = points.size() / 2;
    for (std::size_t n = 0; n < points.size(); ++n) {
        const Rational ratio = f.eval(points[n]).max_abs() / Rational(static_cast<long>(n + 1)).pow(degree);
        Rational& slot = n < half ? r.first_half_max : r.second_half_max;
        slot = std::max(slot, ratio);
    }
    r.moderate = r.second_half_max <= Rational(2) * r.first_half_max;
    return r;
}

namespace {

constexpr ValueKind kinds[] = {ValueKind::scalar, ValueKind::mat2};

AtlasParams random_staircase_params(Rng& rng, ValueKind kind)
{
    AtlasParams p;
    p.constants.kind = ConstantSequence::Kind::index;
    p.constants.unit = random_nonzero_value(rng, kind);
    p.profile = rng.coin() ? AtlasProfile::constant : AtlasProfile::anchored;
    return p;
}

GenFun random_gen_fun(Rng& rng, const SFamily& fam, ValueKind kind)
{
    const SingSet& s = random_member(rng, fam);
    switch (rng.below(4)) {
    case 0:
        return {fam, Net::constant(random_local_fun(rng, s, 1, kind, 2))};
    case 1: {
        std::vector<std::pair<Index, LocalFun>> prefix;
        std::set<Index> used;
        const std::size_t m = rng.below(4);
        while (used.size() < m)
            used.insert(rng.below(7));
        for (const Index l : used)
            prefix.emplace_back(l, random_local_fun(rng, s, 1, kind, 2));
        return {fam, Net::eventually(s, std::move(prefix), random_local_fun(rng, s, 1, kind, 2))};
    }
    case 2:
        return {fam, scaled_net(random_term(rng, 1, kind), s)};
    default: {
        const Net w = staircase_net(random_staircase_params(rng, kind));
        return {fam, w.restricted(random_member_above(rng, fam, w.sigma()))};
    }
    }
}

struct IdealMember {
    GenFun u;
    VanishCert cert;
    std::string shape;
};

IdealMember random_ideal_member(Rng& rng, const SFamily& fam, ValueKind kind, std::span<const Point> witnesses,
                                unsigned depth)
{
    const SingSet& s = random_member(rng, fam);
    VanishCert cert;
    cert.probe_depth = depth;
    switch (rng.below(4)) {
    case 0: {
        const AtlasParams p = random_staircase_params(rng, kind);
        return {{fam, staircase_net(p)}, staircase_cert(p, witnesses, depth), "staircase"};
    }
    case 1: {
        const std::size_t m = 1 + rng.below(4);
        std::vector<std::pair<Index, LocalFun>> prefix;
        for (Index l = 0; l < m; ++l)
            prefix.emplace_back(l, random_local_fun(rng, s, 1, kind, 2));
        cert.fallback = m;
        return {{fam, Net::eventually(s, std::move(prefix), lc_embed(PolyTerm(1, kind), s))}, cert, "eventually-zero"};
    }
    case 2: {
        const GenFun a = random_gen_fun(rng, fam, kind);
        return {gen_sub(a, a), cert, "difference"};
    }
    default:
        return {{fam, Net::constant(lc_embed(PolyTerm(1, kind), s))}, cert, "zero"};
    }
}

} // namespace

SuiteReport net_ideal_suite(const SuiteConfig& cfg)
{
    SuiteReport r;
    r.suite = "ideal";
    r.seed = cfg.seed;
    const std::size_t cases = cfg.cases ? cfg.cases : 200;
    const SFamily fam = standard_family(1);
    const Rng root(cfg.seed);
    for (std::size_t idx = 0; idx < cases; ++idx) {
        Rng rng = root.split(idx);
        const std::size_t before = r.failures.size();
        const ValueKind kind = kinds[idx % 2];
        const auto wit = witness_points(fam.top(), 1, cfg.witnesses, rng.next());
        const IdealMember i = random_ideal_member(rng, fam, kind, wit, cfg.probe_depth);
        const IdealMember i2 = random_ideal_member(rng, fam, kind, wit, cfg.probe_depth);
        const GenFun a = random_gen_fun(rng, fam, kind);
        const GenFun v = random_gen_fun(rng, fam, kind);
        auto inputs = [&] {
            return json{{"ideal", encode(i.u)}, {"cert", encode(i.cert)}, {"ideal2", encode(i2.u)},
                        {"cert2", encode(i2.cert)}, {"a", encode(a)}, {"v", encode(v)}, {"witnesses", encode_points(wit)}};
        };

        r.check(in_N(i.u.net, i.cert, wit) && in_N(i2.u.net, i2.cert, wit), idx, "certified member accepted", inputs);
        r.check(in_N(gen_mul(a, i.u).net, i.cert, wit), idx, "absorbs products from the left", inputs);
        r.check(in_N(gen_mul(i.u, a).net, i.cert, wit), idx, "absorbs products from the right", inputs);
        const VanishCert both = cert_max(i.cert, i2.cert);
        r.check(in_N(gen_add(i.u, i2.u).net, both, wit), idx, "closed under sums", inputs);
        r.check(in_N(gen_mul(i.u, i2.u).net, both, wit), idx, "closed under products", inputs);
        const MultiIndex p(std::vector<unsigned>{static_cast<unsigned>(1 + rng.below(3))});
        r.check(in_N(gen_derive(i.u, p).net, i.cert, wit), idx, "derivatives keep the certificate", inputs);

        VanishCert trivial;
        trivial.probe_depth = cfg.probe_depth;
        r.check(gen_equal(a, a, trivial, wit) && in_N(gen_add(a, gen_neg(a)).net, trivial, wit), idx,
                "u - u vanishes from index 0", inputs);
        r.check(gen_equal(gen_add(a, i.u), a, i.cert, wit), idx, "adding an ideal member keeps the class", inputs);
        const GenFun target = rng.coin() ? v : gen_add(a, i2.u);
        r.check(gen_equal(gen_add(a, i.u), target, both, wit) == gen_equal(a, target, both, wit), idx,
                "quotient equality respects the ideal", inputs);
        r.count("shape." + i.shape);

        if (idx < std::min<std::size_t>(cases, 100)) {
            const PolyTerm g = random_nonzero_term(rng, 1, kind, 4, 3);
            const GenFun d = diagonal_embed(lc_embed(g, random_member(rng, fam)), fam);
            VanishCert any;
            any.fallback = rng.below(32);
            any.probe_depth = cfg.probe_depth;
            const bool refuted = !in_N(d.net, any, wit);
            r.check(refuted, idx, "non-zero constant net refuted", [&] {
                return json{{"net", encode(d)}, {"cert", encode(any)}, {"witnesses", encode_points(wit)}};
            });
            if (refuted)
                r.count("offDiagonalRefutations");
            const PolyTerm h = random_term(rng, 1, kind);
            const SingSet& s = random_member(rng, fam);
            r.check(gen_mul(diagonal_embed(lc_embed(g, s), fam), diagonal_embed(lc_embed(h, s), fam)).net ==
                            diagonal_embed(lc_embed(g * h, s), fam).net &&
                        gen_add(diagonal_embed(lc_embed(g, s), fam), diagonal_embed(lc_embed(h, s), fam)).net ==
                            diagonal_embed(lc_embed(g + h, s), fam).net,
                    idx, "diagonal embedding is a homomorphism");
        }
        r.case_log.push_back({{"case", idx}, {"shape", i.shape}, {"ok", r.failures.size() == before}});
    }
    const GenFun zero = diagonal_embed(lc_embed(PolyTerm(1, ValueKind::scalar), SingSet::empty()), fam);
    r.check(in_N(zero.net, VanishCert{}, witness_points(fam.top(), 1, cfg.witnesses, cfg.seed)), cases,
            "zero net is in the ideal");
    r.cases = cases;
    return r;
}

SuiteReport leibniz_suite(const SuiteConfig& cfg)
{
    SuiteReport r;
    r.suite = "leibniz";
    r.seed = cfg.seed;
    const std::size_t cases = cfg.cases ? cfg.cases : 200;
    const SFamily fam = standard_family(1);
    const Rng root(cfg.seed);
    const MultiIndex d1(std::vector<unsigned>{1});
    for (std::size_t idx = 0; idx < cases; ++idx) {
        Rng rng = root.split(idx);
        const std::size_t before = r.failures.size();
        const ValueKind kind = kinds[idx % 2];
        const auto wit = witness_points(fam.top(), 1, cfg.witnesses, rng.next());
        const GenFun u = random_gen_fun(rng, fam, kind);
        const GenFun v = random_gen_fun(rng, fam, kind);
        const GenFun lhs = gen_derive(gen_mul(u, v), d1);
        const GenFun rhs = gen_add(gen_mul(gen_derive(u, d1), v), gen_mul(u, gen_derive(v, d1)));
        bool exact = true;
        for (Index l = 0; l <= cfg.probe_depth && exact; ++l) {
            const LocalFun a = lhs.net.component(l), b = rhs.net.component(l);
            for (const auto& x : wit) {
                const auto ca = a.find_chart(x), cb = b.find_chart(x);
                r.count("componentCharts");
                if (!ca || !cb || !ca->term.same_function(cb->term)) {
                    exact = false;
                    break;
                }
            }
        }
        r.check(exact, idx, "Leibniz rule holds chartwise", [&] {
            return json{{"u", encode(u)}, {"v", encode(v)}, {"witnesses", encode_points(wit)}};
        });
        const LocalFun f = random_local_fun(rng, random_member(rng, fam), 1, kind, 2);
        r.check(gen_derive(diagonal_embed(f, fam), d1).net == diagonal_embed(derivative(f, d1), fam).net, idx,
                "derivative commutes with the diagonal");
        r.case_log.push_back({{"case", idx}, {"ok", r.failures.size() == before}});
    }
    r.cases = cases;
    return r;
}

json encode(const Net& w)
{
    json body;
    if (const auto* c = std::get_if<Net::Constant>(&w.body())) {
        body = {{"constant", encode(c->f)}};
    } else if (const auto* e = std::get_if<Net::Eventually>(&w.body())) {
        json prefix = json::array();
        for (const auto& [l, f] : e->prefix)
            prefix.push_back(json::array({l, encode(f)}));
        body = {{"eventually", {{"prefix", prefix}, {"tail", encode(e->tail)}}}};
    } else {
        body = {{"generated", std::get<std::shared_ptr<const NetRule>>(w.body())->encode()}};
    }
    return {{"sigma", encode(w.sigma())}, {"dim", w.dim()}, {"kind", to_string(w.kind())}, {"body", body}};
}

json encode(const VanishCert& c)
{
    json t = json::array();
    for (const auto& [p, l] : c.thresholds)
        t.push_back(json::array({encode(p), l}));
    return {{"thresholds", t}, {"default", c.fallback}, {"probeDepth", c.probe_depth}};
}

json encode(const GenFun& u)
{
    return {{"family", encode(u.family)}, {"net", encode(u.net)}};
}

namespace {

template <class F>
auto parse_guard(F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("net: ") + e.what());
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    } catch (const StructuralError& e) {
        throw ParseError(e.what());
    }
}

Net decode_generated(const json& g, const SingSet& sigma, std::size_t dim, ValueKind kind)
{
    const std::string name = g.at("name").get<std::string>();
    const json& p = g.at("params");
    Net w = [&]() -> Net {
        if (name == "scaled")
            return scaled_net(decode_term(p.at("term")), sigma);
        if (name == "staircase")
            return staircase_net(decode_atlas_params(p));
        if (name == "sum")
            return decode_net(p.at(0)) + decode_net(p.at(1));
        if (name == "product")
            return decode_net(p.at(0)) * decode_net(p.at(1));
        if (name == "neg")
            return -decode_net(p);
        if (name == "derive")
            return derivative(decode_net(p.at("of")), decode_multi_index(p.at("p")));
        throw ParseError("unknown net rule \"" + name + "\"");
    }();
    if (w.dim() != dim || w.kind() != kind)
        throw ParseError("net rule does not match the declared dimension or kind");
    return w.restricted(sigma);
}

} // namespace

Net decode_net(const json& j)
{
    return parse_guard([&]() -> Net {
        const SingSet sigma = decode_sing_set(j.at("sigma"));
        const json& body = j.at("body");
        if (body.contains("constant"))
            return Net::constant(decode_local_fun(body.at("constant"))).restricted(sigma);
        if (body.contains("eventually")) {
            const json& e = body.at("eventually");
            std::vector<std::pair<Index, LocalFun>> prefix;
            for (const auto& entry : e.at("prefix"))
                prefix.emplace_back(entry.at(0).get<Index>(), decode_local_fun(entry.at(1)));
            return Net::eventually(sigma, std::move(prefix), decode_local_fun(e.at("tail")));
        }
        if (body.contains("generated"))
            return decode_generated(body.at("generated"), sigma, j.at("dim").get<std::size_t>(),
                                    parse_value_kind(j.at("kind").get<std::string>()));
        throw ParseError("unknown net body");
    });
}

VanishCert decode_cert(const json& j)
{
    return parse_guard([&] {
        VanishCert c;
        for (const auto& t : j.at("thresholds"))
            c.thresholds.emplace_back(decode_point(t.at(0)), t.at(1).get<Index>());
        if (j.contains("default"))
            c.fallback = j.at("default").get<Index>();
        if (j.contains("probeDepth"))
            c.probe_depth = j.at("probeDepth").get<unsigned>();
        if (c.probe_depth == 0)
            throw ParseError("probe depth must be positive");
        return c;
    });
}

GenFun decode_gen_fun(const json& j)
{
    return parse_guard([&] {
        GenFun u{decode_family(j.at("family")), decode_net(j.at("net"))};
        (void)member_of(u.family, u.net.sigma());
        return u;
    });
}

} // namespace localg
