#include "localg/limits.hpp"

#include <algorithm>

#include "localg/error.hpp"
#include "localg/generators.hpp"
#include "localg/io.hpp"

namespace localg {

namespace {

const SingSet& member_of(const SFamily& s, const SingSet& sigma)
{
    if (s.contains(sigma))
        return *std::find(s.members().begin(), s.members().end(), sigma);
    const SingSet n = normalized(sigma);
    auto it = std::find(s.members().begin(), s.members().end(), n);
    if (it == s.members().end())
        throw DomainError("singularity set is not a member of the family");
    return *it;
}

void require_same_family(const EquivClass& a, const EquivClass& b)
{
    if (!(a.family == b.family))
        throw StructuralError("classes over different families of singularity sets");
}

} // namespace

std::vector<Point> witness_points(const SingSet& sigma, std::size_t dim, std::size_t k, std::uint64_t seed)
{
    return regular_sample(sigma, OpenBox::whole(dim), k, seed);
}

bool approx_equiv(const LocalFun& f, const LocalFun& g, const SFamily& s, std::span<const Point> witnesses)
{
    const SingSet& joined = s.join(member_of(s, f.sigma()), member_of(s, g.sigma()));
    const LocalFun rf = restrict(f, joined);
    const LocalFun rg = restrict(g, joined);
    if (rf == rg)
        return true;
    if (rf.dim() != rg.dim() || rf.kind() != rg.kind())
        return false;
    for (const auto& w : witnesses) {
        if (joined.contains(w))
            continue;
        const auto a = rf.find_chart(w);
        const auto b = rg.find_chart(w);
        if (!a && !b)
            continue;
        if (!a || !b || !a->term.same_function(b->term))
            return false;
    }
    return true;
}

json encode(const EquivClass& a)
{
    return json{{"family", encode(a.family)}, {"rep", encode(a.rep)}};
}

EquivClass decode_class(const json& j)
{
    if (!j.is_object() || !j.contains("family") || !j.contains("rep"))
        throw ParseError("class needs \"family\" and \"rep\"");
    try {
        return class_of(decode_local_fun(j.at("rep")), decode_family(j.at("family")));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

EquivClass class_of(const LocalFun& f, const SFamily& s)
{
    const SingSet& m = member_of(s, f.sigma());
    return {s, f.sigma() == m ? f : f.with_sigma(m)};
}

namespace {

template <class Op>
EquivClass combine(const EquivClass& a, const EquivClass& b, Op op)
{
    require_same_family(a, b);
    const SingSet& joined = a.family.join(a.rep.sigma(), b.rep.sigma());
    return {a.family, op(restrict(a.rep, joined), restrict(b.rep, joined))};
}

} // namespace

EquivClass class_add(const EquivClass& a, const EquivClass& b)
{
    return combine(a, b, [](const LocalFun& f, const LocalFun& g) { return f + g; });
}

EquivClass class_mul(const EquivClass& a, const EquivClass& b)
{
    return combine(a, b, [](const LocalFun& f, const LocalFun& g) { return f * g; });
}

EquivClass class_neg(const EquivClass& a)
{
    return {a.family, -a.rep};
}

EquivClass class_sub(const EquivClass& a, const EquivClass& b)
{
    return class_add(a, class_neg(b));
}

bool class_equal(const EquivClass& a, const EquivClass& b, std::span<const Point> witnesses)
{
    require_same_family(a, b);
    return approx_equiv(a.rep, b.rep, a.family, witnesses);
}

std::optional<PolyTerm> global_term(const EquivClass& a, std::span<const Point> witnesses)
{
    if (auto t = is_global(a.rep))
        return t;
    std::optional<PolyTerm> common;
    for (const auto& w : witnesses) {
        if (a.rep.sigma().contains(w))
            continue;
        const auto c = a.rep.find_chart(w);
        if (!c)
            return std::nullopt;
        if (!common)
            common = c->term;
        else if (!common->same_function(c->term))
            return std::nullopt;
    }
    return common;
}

bool class_in_U(const EquivClass& a, std::span<const Point> witnesses)
{
    return global_term(a, witnesses).has_value();
}

bool class_in_I(const EquivClass& a, const Zone& z, std::span<const Point> witnesses)
{
    for (const auto& m : a.family.members())
        if (!z.has_regular_point(m))
            throw DomainError("Z \\ Sigma is empty for a member of the family");
    std::vector<Point> inside;
    for (const auto& w : witnesses)
        if (z.contains(w) && !a.rep.sigma().contains(w))
            inside.push_back(w);
    if (inside.empty())
        throw DomainError("no witness lies in Z \\ Sigma");
    return in_ideal(a.rep, z, inside);
}

SmoothGrade class_grade(const EquivClass& a)
{
    return a.rep.grade();
}

bool in_A_l(const EquivClass& a, const SmoothGrade& l)
{
    return class_grade(a) >= l;
}

bool in_U_l(const EquivClass& a, const SmoothGrade& l, std::span<const Point> witnesses)
{
    return in_A_l(a, l) && class_in_U(a, witnesses);
}

bool in_I_l(const EquivClass& a, const SmoothGrade& l, const Zone& z, std::span<const Point> witnesses)
{
    return in_A_l(a, l) && class_in_I(a, z, witnesses);
}

namespace {

constexpr ValueKind kinds[] = {ValueKind::scalar, ValueKind::mat2};

std::size_t or_default(std::size_t n, std::size_t d)
{
    return n ? n : d;
}

json encode_classes(std::initializer_list<const EquivClass*> cs, std::span<const Point> witnesses)
{
    json reps = json::array();
    for (const auto* c : cs)
        reps.push_back(encode(c->rep));
    return {{"reps", reps}, {"witnesses", encode_points(witnesses)}};
}

EquivClass global_class(const PolyTerm& t, const SingSet& sigma, const SFamily& fam)
{
    return class_of(lc_embed(t, sigma), fam);
}

} // namespace

SuiteReport algebra_axioms_suite(const SuiteConfig& cfg)
{
    SuiteReport r;
    r.suite = "axioms";
    r.seed = cfg.seed;
    const std::size_t cases = or_default(cfg.cases, 500);
    const SFamily fam = standard_family(1);
    const Rng root(cfg.seed);
    std::size_t idx = 0;
    for (const ValueKind kind : kinds) {
        const std::string tag(to_string(kind));
        const EquivClass one = global_class(PolyTerm::constant(1, Value::unit(kind)), SingSet::empty(), fam);
        const EquivClass zero = global_class(PolyTerm(1, kind), SingSet::empty(), fam);
        bool refuted = false;
        for (std::size_t i = 0; i < cases; ++i, ++idx) {
            Rng rng = root.split(idx);
            auto make = [&] { return class_of(random_local_fun(rng, random_member(rng, fam), 1, kind, 2), fam); };
            const EquivClass a = make(), b = make(), c = make();
            const auto wit = witness_points(fam.top(), 1, cfg.witnesses, rng.next());
            const std::size_t before = r.failures.size();
            auto eq = [&](const EquivClass& x, const EquivClass& y) { return class_equal(x, y, wit); };
            auto inputs = [&] { return encode_classes({&a, &b, &c}, wit); };
            auto check = [&](bool ok, const char* prop) { r.check(ok, idx, tag + ": " + prop, inputs); };

            check(eq(class_add(class_add(a, b), c), class_add(a, class_add(b, c))), "additive associativity");
            check(eq(class_add(a, b), class_add(b, a)), "additive commutativity");
            check(eq(class_add(a, zero), a), "additive identity");
            check(eq(class_add(a, class_neg(a)), zero), "additive inverse");
            check(eq(class_mul(class_mul(a, b), c), class_mul(a, class_mul(b, c))), "multiplicative associativity");
            check(eq(class_mul(a, class_add(b, c)), class_add(class_mul(a, b), class_mul(a, c))), "left distributivity");
            check(eq(class_mul(class_add(a, b), c), class_add(class_mul(a, c), class_mul(b, c))), "right distributivity");
            check(eq(class_mul(one, a), a) && eq(class_mul(a, one), a), "unit");

            const EquivClass a2 = class_of(perturbed(rng, a.rep, fam), fam);
            check(eq(a2, a), "perturbed representative stays in its class");
            check(eq(class_mul(a2, b), class_mul(a, b)) && eq(class_mul(b, a2), class_mul(b, a)) &&
                      eq(class_add(a2, b), class_add(a, b)),
                  "operations independent of the representative");

            const PolyTerm f = random_term(rng, 1, kind), g = random_term(rng, 1, kind);
            const SingSet& sf = random_member(rng, fam);
            const SingSet& sg = random_member(rng, fam);
            const SingSet& sfg = random_member(rng, fam);
            check(eq(class_mul(global_class(f, sf, fam), global_class(g, sg, fam)), global_class(f * g, sfg, fam)) &&
                      eq(class_add(global_class(f, sf, fam), global_class(g, sg, fam)), global_class(f + g, sfg, fam)),
                  "global functions embed homomorphically");

            const bool commutes = eq(class_mul(a, b), class_mul(b, a));
            if (is_commutative(kind))
                check(commutes, "multiplicative commutativity");
            else if (!commutes) {
                refuted = true;
                r.count("commutativityRefutations." + tag);
            }
            r.count("triples." + tag);
            r.case_log.push_back({{"case", idx}, {"kind", tag}, {"ok", r.failures.size() == before}});
        }
        if (!is_commutative(kind)) {
            const EquivClass e12 = global_class(PolyTerm::constant(1, Value::mat2(0, 1, 0, 0)), SingSet::empty(), fam);
            const EquivClass e21 = global_class(PolyTerm::constant(1, Value::mat2(0, 0, 1, 0)), SingSet::empty(), fam);
            const auto wit = witness_points(fam.top(), 1, cfg.witnesses, cfg.seed);
            if (!class_equal(class_mul(e12, e21), class_mul(e21, e12), wit)) {
                refuted = true;
                r.count("commutativityRefutations." + tag);
            }
        }
        r.check(refuted == !is_commutative(kind), idx, tag + ": commutative iff the value algebra is commutative");
    }
    r.cases = idx;
    return r;
}

SuiteReport off_diagonality_suite(const SuiteConfig& cfg)
{
    SuiteReport r;
    r.suite = "offdiag";
    r.seed = cfg.seed;
    const std::size_t cases = or_default(cfg.cases, 500);
    const SFamily fam = standard_family(1);
    const OpenBox zbox = OpenBox::interval(0, 1);
    const Zone z(zbox);
    const Rng root(cfg.seed);
    std::size_t idx = 0;
    for (const ValueKind kind : kinds) {
        const std::string tag(to_string(kind));
        for (std::size_t i = 0; i < cases; ++i, ++idx) {
            Rng rng = root.split(idx);
            const std::size_t before = r.failures.size();
            const PolyTerm g = random_nonzero_term(rng, 1, kind, 4, 3);
            const std::size_t k = std::max<std::size_t>(cfg.witnesses, g.total_degree() + 1);
            const auto wz = regular_sample(fam.top(), zbox, k, rng.next());
            auto wall = witness_points(fam.top(), 1, cfg.witnesses, rng.next());
            wall.insert(wall.end(), wz.begin(), wz.end());

            const EquivClass a = class_of(lc_embed(g, random_member(rng, fam)), fam);
            r.check(!class_in_I(a, z, wz), idx, tag + ": non-zero global function outside the ideal",
                    [&] { return encode_classes({&a}, wz); });

            // Members of the ideal: the zero class, a - a, a family vanishing
            // on a neighbourhood of Z, and its products with random classes.
            const SingSet& s = random_member(rng, fam);
            std::vector<Chart> charts{{OpenBox::interval(Rational(-rng.between(0, 8), 4), Rational(4 + rng.between(0, 8), 4)),
                                       PolyTerm(1, kind)},
                                      {OpenBox::whole(1), random_term(rng, 1, kind)}};
            const EquivClass v = class_of(LocalFun(s, 1, kind, std::move(charts)), fam);
            const EquivClass other = class_of(random_local_fun(rng, random_member(rng, fam), 1, kind, 2), fam);
            const EquivClass members[] = {
                class_of(lc_embed(PolyTerm(1, kind), random_member(rng, fam)), fam),
                class_sub(a, a),
                v,
                class_mul(v, other),
                class_mul(other, v),
            };
            for (const auto& m : members) {
                const bool in_i = class_in_I(m, z, wz);
                r.check(in_i, idx, tag + ": constructed ideal member accepted",
                        [&] { return encode_classes({&m}, wz); });
                const auto t = global_term(m, wall);
                if (in_i && t) {
                    r.count("idealAndGlobal." + tag);
                    r.check(t->is_zero(), idx, tag + ": ideal meets the global functions only in zero",
                            [&] { return encode_classes({&m}, wall); });
                }
            }
            r.count("cases." + tag);
            r.case_log.push_back({{"case", idx}, {"kind", tag}, {"degree", g.total_degree()},
                                  {"ok", r.failures.size() == before}});
        }
    }
    r.cases = idx;
    return r;
}

SuiteReport restriction_suite(const SuiteConfig& cfg)
{
    SuiteReport r;
    r.suite = "restrict";
    r.seed = cfg.seed;
    const std::size_t cases = or_default(cfg.cases, 200);
    const Rng root(cfg.seed);
    for (std::size_t idx = 0; idx < cases; ++idx) {
        Rng rng = root.split(idx);
        const std::size_t before = r.failures.size();
        const std::size_t dim = 1 + idx % 2;
        const ValueKind kind = kinds[(idx / 2) % 2];
        const SFamily fam = standard_family(dim);
        const SingSet& s0 = random_member(rng, fam);
        const SingSet& s1 = random_member_above(rng, fam, s0);
        const SingSet& s2 = random_member_above(rng, fam, s1);
        const LocalFun f = random_local_fun(rng, s0, dim, kind);
        const auto wit = witness_points(s2, dim, cfg.witnesses, rng.next());
        auto inputs = [&] {
            return json{{"f", encode(f)}, {"chain", {encode(s0), encode(s1), encode(s2)}}, {"witnesses", encode_points(wit)}};
        };

        r.check(restrict(f, s0) == f, idx, "identity restriction", inputs);
        const LocalFun direct = restrict(f, s2);
        r.check(restrict(restrict(f, s1), s2) == direct, idx, "composition of restrictions", inputs);
        bool pointwise = true;
        for (const auto& w : wit)
            pointwise = pointwise && direct.chart_at(w) == f.chart_at(w) && direct.eval(w) == f.eval(w);
        r.check(pointwise, idx, "restriction keeps every regular component", inputs);
        for (const auto& m : fam.members()) {
            if (subset_leq(s0, m))
                continue;
            bool refused = false;
            try {
                (void)restrict(f, m);
            } catch (const DomainError&) {
                refused = true;
            }
            r.check(refused, idx, "restriction to a non-containing set refused", inputs);
        }
        r.case_log.push_back({{"case", idx}, {"dim", dim}, {"ok", r.failures.size() == before}});
    }
    r.cases = cases;
    return r;
}

SuiteReport equivalence_suite(const SuiteConfig& cfg)
{
    SuiteReport r;
    r.suite = "equiv";
    r.seed = cfg.seed;
    const std::size_t cases = or_default(cfg.cases, 200);
    const SFamily fam = standard_family(1);
    const Rng root(cfg.seed);
    for (std::size_t idx = 0; idx < cases; ++idx) {
        Rng rng = root.split(idx);
        const std::size_t before = r.failures.size();
        const ValueKind kind = kinds[idx % 2];
        const auto wit = witness_points(fam.top(), 1, cfg.witnesses, rng.next());
        auto fresh = [&] { return random_local_fun(rng, random_member(rng, fam), 1, kind, 2); };
        const LocalFun f = fresh();
        const bool g_near = rng.below(4) != 0;
        const LocalFun g = g_near ? perturbed(rng, f, fam) : fresh();
        const bool h_near = rng.below(4) != 0;
        const LocalFun h = h_near ? perturbed(rng, g, fam) : fresh();
        auto inputs = [&] {
            return json{{"reps", {encode(f), encode(g), encode(h)}}, {"witnesses", encode_points(wit)}};
        };
        auto eqv = [&](const LocalFun& x, const LocalFun& y) { return approx_equiv(x, y, fam, wit); };

        r.check(eqv(f, f) && eqv(g, g) && eqv(h, h), idx, "reflexivity", inputs);
        const bool fg = eqv(f, g), gh = eqv(g, h), fh = eqv(f, h);
        r.check(fg == eqv(g, f) && gh == eqv(h, g) && fh == eqv(h, f), idx, "symmetry", inputs);
        if (g_near)
            r.check(fg, idx, "perturbed representative equivalent", inputs);
        if (fg && gh) {
            r.count("transitivityChains");
            r.check(fh, idx, "transitivity", inputs);
        }

        // Global functions: passing to classes commutes with the embedding,
        // and distinct terms stay distinct.
        const PolyTerm t = random_term(rng, 1, kind);
        const SingSet& s1 = random_member(rng, fam);
        const SingSet& s2 = random_member(rng, fam);
        const EquivClass via1 = class_of(lc_embed(t, s1), fam);
        const EquivClass via2 = class_of(lc_embed(t, s2), fam);
        bool agrees = class_equal(via1, via2, wit);
        for (const auto& w : wit)
            agrees = agrees && via1.rep.eval(w) == t.evaluate(w);
        r.check(agrees, idx, "global embedding commutes with classes", [&] {
            return json{{"term", encode(t)}, {"witnesses", encode_points(wit)}};
        });
        const PolyTerm u = t + PolyTerm::constant(1, random_nonzero_value(rng, kind));
        r.check(!class_equal(via1, class_of(lc_embed(u, s2), fam), wit), idx, "distinct globals give distinct classes");

        // A singleton family is the algebra of its member.
        const SFamily single = SFamily::singleton(s1);
        const LocalFun p = random_local_fun(rng, s1, 1, kind, 2), q = random_local_fun(rng, s1, 1, kind, 2);
        r.check(class_add(class_of(p, single), class_of(q, single)).rep == p + q &&
                    class_mul(class_of(p, single), class_of(q, single)).rep == p * q,
                idx, "singleton family reduces to the local algebra");

        r.case_log.push_back({{"case", idx}, {"ok", r.failures.size() == before}});
    }
    r.cases = cases;
    return r;
}

} // namespace localg
