#include "localg/io.hpp"

#include "localg/atlas.hpp"
#include "localg/error.hpp"

namespace localg {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

json encode_endpoint(const std::optional<Rational>& r, const char* infinity)
{
    return r ? encode(*r) : json(infinity);
}

std::optional<Rational> decode_endpoint(const json& j, const char* infinity)
{
    if (j.is_string() && j.get<std::string>() == infinity)
        return std::nullopt;
    return decode_rational(j);
}

} // namespace

json encode(const Rational& r)
{
    return r.fraction_str();
}

Rational decode_rational(const json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (!j.is_string())
        throw ParseError("rational must be a \"p/q\" string");
    return Rational::parse(j.get<std::string>());
}

json encode(const Value& v)
{
    if (v.kind() == ValueKind::scalar)
        return json{{"scalar", encode(v.scalar())}};
    json m = json::array();
    for (const auto& e : v.matrix().e)
        m.push_back(encode(e));
    return json{{"mat2", std::move(m)}};
}

Value decode_value(const json& j)
{
    return guarded("value", [&] {
        if (j.contains("scalar"))
            return Value(decode_rational(j.at("scalar")));
        const json& m = j.at("mat2");
        if (!m.is_array() || m.size() != 4)
            throw ParseError("mat2 value needs four entries");
        return Value::mat2(decode_rational(m[0]), decode_rational(m[1]), decode_rational(m[2]),
                           decode_rational(m[3]));
    });
}

json encode(const MultiIndex& p)
{
    return json(p.entries());
}

MultiIndex decode_multi_index(const json& j)
{
    return guarded("multi-index", [&] { return MultiIndex(j.get<std::vector<unsigned>>()); });
}

json encode(const SmoothGrade& g)
{
    return g.is_infinite() ? json("inf") : json(*g.cap());
}

SmoothGrade decode_grade(const json& j)
{
    if (j.is_string() && j.get<std::string>() == "inf")
        return SmoothGrade::infinity();
    if (j.is_number_unsigned())
        return SmoothGrade::finite(j.get<unsigned>());
    throw ParseError("grade must be \"inf\" or a non-negative integer");
}

// {"dim": n, "kind": k, "grade": "inf"|l, "monomials": [{"p": [...], "c": V}]}
// with monomials in lexicographic order of p.
json encode(const PolyTerm& t)
{
    json monos = json::array();
    for (const auto& [p, c] : t.monomials())
        monos.push_back(json{{"p", encode(p)}, {"c", encode(c)}});
    return json{{"dim", t.dim()}, {"kind", to_string(t.kind())}, {"grade", encode(t.grade())}, {"monomials", monos}};
}

PolyTerm decode_term(const json& j)
{
    return guarded("term", [&] {
        const auto dim = j.at("dim").get<std::size_t>();
        std::optional<ValueKind> kind;
        if (j.contains("kind"))
            kind = parse_value_kind(j.at("kind").get<std::string>());
        std::vector<std::pair<MultiIndex, Value>> monos;
        for (const auto& m : j.at("monomials"))
            monos.emplace_back(decode_multi_index(m.at("p")), decode_value(m.at("c")));
        if (!kind)
            kind = monos.empty() ? ValueKind::scalar : monos.front().second.kind();
        PolyTerm t(dim, *kind);
        for (const auto& [p, c] : monos)
            t.add_monomial(p, c);
        if (j.contains("grade"))
            t = t.with_grade(decode_grade(j.at("grade")));
        return t;
    });
}

json encode(const Point& p)
{
    json a = json::array();
    for (const auto& x : p)
        a.push_back(encode(x));
    return a;
}

json encode_points(std::span<const Point> pts)
{
    json a = json::array();
    for (const auto& p : pts)
        a.push_back(encode(p));
    return a;
}

Point decode_point(const json& j)
{
    if (!j.is_array())
        throw ParseError("point must be an array of rationals");
    Point p;
    for (const auto& x : j)
        p.push_back(decode_rational(x));
    return p;
}

// [["lo", "hi"], ...] with "-inf" / "+inf" for unbounded sides.
json encode(const OpenBox& b)
{
    json a = json::array();
    for (const auto& iv : b.intervals())
        a.push_back(json::array({encode_endpoint(iv.lo, "-inf"), encode_endpoint(iv.hi, "+inf")}));
    return a;
}

OpenBox decode_box(const json& j)
{
    return guarded("box", [&] {
        if (!j.is_array())
            throw ParseError("box must be an array of [lo, hi] pairs");
        std::vector<Interval> iv;
        for (const auto& side : j) {
            if (!side.is_array() || side.size() != 2)
                throw ParseError("box side must be a [lo, hi] pair");
            iv.push_back({decode_endpoint(side[0], "-inf"), decode_endpoint(side[1], "+inf")});
        }
        try {
            return OpenBox(std::move(iv));
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
    });
}

json encode(const SingSet& s)
{
    switch (s.kind()) {
    case SingSet::Kind::empty:
        return json{{"empty", json::object()}};
    case SingSet::Kind::corational:
        return json{{"corational", json::object()}};
    case SingSet::Kind::finite: {
        json pts = json::array();
        for (const auto& p : s.points())
            pts.push_back(encode(p));
        return json{{"finite", pts}};
    }
    case SingSet::Kind::union_of: {
        json parts = json::array();
        for (const auto& p : s.parts())
            parts.push_back(encode(p));
        return json{{"union", parts}};
    }
    }
    return json();
}

SingSet decode_sing_set(const json& j)
{
    return guarded("singularity set", [&] {
        if (j.contains("empty"))
            return SingSet::empty();
        if (j.contains("corational"))
            return SingSet::corational();
        if (j.contains("finite")) {
            std::vector<Point> pts;
            for (const auto& p : j.at("finite"))
                pts.push_back(decode_point(p));
            return SingSet::finite(std::move(pts));
        }
        if (j.contains("union")) {
            std::vector<SingSet> parts;
            for (const auto& p : j.at("union"))
                parts.push_back(decode_sing_set(p));
            return SingSet::union_of(std::move(parts));
        }
        throw ParseError("unknown singularity set descriptor");
    });
}

json encode(const SFamily& f)
{
    json m = json::array();
    for (const auto& s : f.members())
        m.push_back(encode(s));
    return json{{"members", m}};
}

SFamily decode_family(const json& j)
{
    return guarded("family", [&] {
        std::vector<SingSet> members;
        for (const auto& m : j.at("members"))
            members.push_back(decode_sing_set(m));
        try {
            return family_from_members(std::move(members));
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
    });
}

json encode(const Chart& c)
{
    return json{{"box", encode(c.box)}, {"term", encode(c.term)}};
}

// Finite: {"sigma", "dim", "kind", "charts": [...]}; generated families carry
// their rule's named constructor instead of "charts".
json encode(const LocalFun& f)
{
    json j{{"sigma", encode(f.sigma())}, {"dim", f.dim()}, {"kind", to_string(f.kind())}};
    if (f.is_finite()) {
        json charts = json::array();
        for (const auto& c : f.charts())
            charts.push_back(encode(c));
        j["charts"] = std::move(charts);
    } else {
        j.update(f.rule()->encode());
    }
    return j;
}

LocalFun decode_local_fun(const json& j)
{
    return guarded("local function", [&]() -> LocalFun {
        const SingSet sigma = j.contains("sigma") ? decode_sing_set(j.at("sigma")) : SingSet::empty();
        if (j.contains("charts")) {
            std::vector<Chart> charts;
            for (const auto& c : j.at("charts"))
                charts.push_back({decode_box(c.at("box")), decode_term(c.at("term"))});
            std::size_t dim = j.contains("dim") ? j.at("dim").get<std::size_t>()
                                                : (charts.empty() ? 0 : charts.front().term.dim());
            ValueKind kind = j.contains("kind") ? parse_value_kind(j.at("kind").get<std::string>())
                                                : (charts.empty() ? ValueKind::scalar : charts.front().term.kind());
            try {
                return LocalFun(sigma, dim, kind, std::move(charts));
            } catch (const StructuralError& e) {
                throw ParseError(e.what());
            }
        }
        if (j.contains("countableAtlas"))
            return make_atlas(decode_atlas_params(j.at("countableAtlas"))).with_sigma(sigma);
        if (j.contains("sum")) {
            const json& ops = j.at("sum");
            return (decode_local_fun(ops.at(0)) + decode_local_fun(ops.at(1))).with_sigma(sigma);
        }
        if (j.contains("product")) {
            const json& ops = j.at("product");
            return (decode_local_fun(ops.at(0)) * decode_local_fun(ops.at(1))).with_sigma(sigma);
        }
        if (j.contains("neg"))
            return (-decode_local_fun(j.at("neg"))).with_sigma(sigma);
        if (j.contains("derive")) {
            const json& d = j.at("derive");
            return derivative(decode_local_fun(d.at("of")), decode_multi_index(d.at("p"))).with_sigma(sigma);
        }
        throw ParseError("unknown local function encoding");
    });
}

json encode(const CompatReport& r)
{
    json v = json::array();
    for (const auto& [x, y] : r.violations)
        v.push_back(json::array({encode(x), encode(y)}));
    return json{{"holds", r.holds},
                {"pairsChecked", r.pairs_checked},
                {"pairsTriggered", r.pairs_triggered},
                {"violations", v}};
}

} // namespace localg
