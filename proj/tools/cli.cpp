#include "cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "localg/atlas.hpp"
#include "localg/error.hpp"
#include "localg/generators.hpp"
#include "localg/io.hpp"
#include "localg/limits.hpp"
#include "localg/nets.hpp"

namespace localg::cli {

namespace {

struct RunConfig {
    std::uint64_t seed = 0;
    std::size_t cases = 0;
    std::size_t witnesses = 20;
    unsigned probe_depth = 8;
    std::string epsilon = "1/1000";
    std::string json_path;
};

struct Outcome {
    int code = ok;
    json report;
};

std::string verdict(bool pass)
{
    return pass ? "PASS" : "FAIL";
}

Outcome demo_atlas(const RunConfig& cfg, std::size_t count, std::ostream& out)
{
    AtlasParams params;
    params.epsilon = Rational::parse(cfg.epsilon);
    if (params.epsilon.sign() <= 0)
        throw DomainError("epsilon must be positive");
    params.constants.kind = ConstantSequence::Kind::index;
    const LocalFun f = make_atlas(params);
    const CountableAtlas& atlas = *as_atlas(f);

    std::vector<Point> anchors;
    std::vector<Chart> charts;
    std::vector<OpenBox> boxes;
    for (std::uint64_t n = 0; n < count; ++n) {
        anchors.push_back({atlas.anchor(n)});
        charts.push_back(atlas.chart(n));
        boxes.push_back(charts.back().box);
    }

    json facts = json::array();
    auto fact = [&](const char* name, bool pass, json detail) {
        facts.push_back({{"fact", name}, {"pass", pass}, {"detail", std::move(detail)}});
        out << "  [" << verdict(pass) << "] " << name << "\n";
        return pass;
    };
    out << "countable atlas over the rationals, epsilon = " << params.epsilon << ", " << count << " charts\n";

    Rng rng(cfg.seed);
    json probes = json::array();
    bool dense = true;
    for (std::size_t k = 0; k < 20; ++k) {
        const Point centre{random_rational(rng, 64, 8)};
        const OpenBox box = OpenBox::around(centre, params.epsilon / Rational(static_cast<long>(k + 1)));
        const Point x = regular_sample(f.sigma(), box, 1, rng.next()).front();
        const Chart c = f.chart_at(x);
        dense = dense && box.contains(x) && c.box.contains(x);
        probes.push_back({{"box", encode(box)}, {"point", encode(x)}, {"index", atlas.enumeration().index_of(x[0])}});
    }
    bool all_pass = fact("regular points are dense", dense, probes);

    bool constants_ok = true;
    for (std::uint64_t n = 0; n < count; ++n)
        constants_ok = constants_ok && f.eval(anchors[n]) == params.constants.at(n);
    all_pass &= fact("anchors carry arbitrary prescribed constants", constants_ok,
                     {{"checked", count}, {"injective", params.constants.injective()}});

    const Rational total = length_sum(boxes);
    const Rational bound = Rational(2) * params.epsilon;
    all_pass &= fact("total neighbourhood length is at most 2 epsilon", total <= bound,
                     {{"lengthSum", encode(total)}, {"bound", encode(bound)}});

    bool open = true;
    for (std::uint64_t n = 0; n < count; ++n)
        open = open && boxes[n].bounded() && boxes[n].contains(anchors[n]);
    all_pass &= fact("each anchor has an open neighbourhood", open, {{"checked", count}});

    bool constant = true;
    for (std::uint64_t n = 0; n < count; ++n)
        constant = constant && charts[n].term.total_degree() == 0 &&
                   charts[n].term.same_function(PolyTerm::constant(1, params.constants.at(n)));
    all_pass &= fact("components are constant functions", constant, {{"checked", count}});

    std::size_t violations = 0;
    json first_violation;
    for (std::uint64_t m = 0; m < count; ++m)
        for (std::uint64_t n = 0; n < m; ++n)
            if (boxes[m].contains(anchors[n]) && violations++ == 0)
                first_violation = {{"n", n}, {"m", m}};
    out << "  [" << verdict(violations == 0) << "] earlier anchors avoid later neighbourhoods (" << violations
        << " violations)\n";
    all_pass &= violations == 0;

    const CompatReport weak = check_compat(f, anchors);
    out << "  [" << verdict(weak.holds) << "] weak compatibility (" << weak.pairs_checked << " pairs, "
        << weak.pairs_triggered << " triggered)\n";
    all_pass &= weak.holds;

    const Point y = overlap_witness(f, anchors.front());
    const std::vector<Point> pair{anchors.front(), y};
    const CompatReport strong = check_strong_compat(f, pair);
    const bool expected = params.constants.injective() ? !strong.holds : true;
    out << "  [" << (strong.holds ? "HOLDS" : "FAIL") << (expected ? " as expected" : " unexpectedly")
        << "] strong compatibility on the pair (" << anchors.front() << ", " << y << ")\n";
    all_pass &= expected;

    json report{{"command", "demo-atlas"},
                {"epsilon", encode(params.epsilon)},
                {"charts", count},
                {"facts", facts},
                {"avoidance", {{"pairs", count * (count - 1) / 2}, {"violations", violations}, {"first", first_violation}}},
                {"weakCompatibility", encode(weak)},
                {"strongCompatibility", {{"pair", encode_points(pair)}, {"report", encode(strong)}, {"failsAsExpected", expected}}},
                {"passed", all_pass}};
    out << (all_pass ? "all checks passed" : "some checks failed") << "\n";
    return {all_pass ? ok : property_failure, std::move(report)};
}

Outcome demo_dense(const RunConfig& cfg, std::size_t count, std::ostream& out)
{
    const Rational eps = Rational::parse(cfg.epsilon);
    ConstantSequence growth;
    growth.kind = ConstantSequence::Kind::factorial;
    const GenFun demo = build_dense_singular_demo(eps, growth);
    const LocalFun f = demo.net.component(0);
    const CountableAtlas& atlas = *as_atlas(f);
    out << "dense singular demo: diagonal of the atlas with constants n!, epsilon = " << eps << "\n";

    json evals = json::array();
    bool exact = true;
    for (std::uint64_t n = 0; n < 20; ++n) {
        const Point x{atlas.anchor(n)};
        const Value v = f.eval(x);
        const bool good = v == Value(Rational::factorial(n));
        exact = exact && good;
        evals.push_back({{"n", n}, {"point", encode(x)}, {"value", encode(v)}, {"exact", good}});
        out << "  x_" << n << " = " << x << "  ->  " << v << "\n";
    }

    std::vector<OpenBox> boxes;
    for (std::uint64_t n = 0; n < count; ++n)
        boxes.push_back(atlas.chart(n).box);
    const Rational total = length_sum(boxes);
    const bool bounded = total <= Rational(2) * eps;
    out << "  [" << verdict(bounded) << "] length sum of " << count << " neighbourhoods = " << total << " (~"
        << total.raw().get_d() << ") <= " << Rational(2) * eps << "\n";

    std::vector<Point> points;
    for (std::uint64_t n = 0; n < 64; ++n)
        points.push_back({atlas.anchor(n)});
    json probes = json::array();
    bool none_moderate = true;
    for (unsigned d = 0; d <= 6; ++d) {
        const ModeratenessProbe p = moderateness_probe(demo, points, d);
        none_moderate = none_moderate && !p.moderate;
        probes.push_back({{"degree", d},
                          {"firstHalfMax", encode(p.first_half_max)},
                          {"secondHalfMax", encode(p.second_half_max)},
                          {"moderate", p.moderate}});
        out << "  polynomial bound of degree " << d << ": " << (p.moderate ? "moderate" : "violated") << "\n";
    }
    const bool pass = exact && bounded && none_moderate;
    out << (pass ? "all checks passed" : "some checks failed") << "\n";
    return {pass ? ok : property_failure,
            {{"command", "demo-dense"},
             {"epsilon", encode(eps)},
             {"evaluations", evals},
             {"lengthSum", encode(total)},
             {"boundHolds", bounded},
             {"moderatenessProbes", probes},
             {"passed", pass}}};
}

Outcome check_suite(const RunConfig& cfg, const std::string& suite, std::ostream& out)
{
    static const std::map<std::string, std::function<SuiteReport(const SuiteConfig&)>> suites{
        {"axioms", algebra_axioms_suite}, {"offdiag", off_diagonality_suite}, {"ideal", net_ideal_suite},
        {"leibniz", leibniz_suite},       {"restrict", restriction_suite},    {"equiv", equivalence_suite},
    };
    const auto it = suites.find(suite);
    if (it == suites.end())
        throw CLI::ValidationError("suite", "unknown suite \"" + suite +
                                                "\" (expected axioms, offdiag, ideal, leibniz, restrict or equiv)");
    const SuiteReport r = it->second({cfg.seed, cfg.cases, cfg.witnesses, cfg.probe_depth});
    out << r.suite << ": " << verdict(r.passed()) << " (" << r.cases << " cases, " << r.checks << " checks, "
        << r.failures.size() << " failures)\n";
    for (const auto& [k, v] : r.counters)
        out << "  " << k << " = " << v << "\n";
    for (std::size_t i = 0; i < r.failures.size() && i < 10; ++i)
        out << "  case " << r.failures[i]["case"] << ": " << r.failures[i]["property"].get<std::string>() << "\n";
    json report = r.to_json();
    report["command"] = "check";
    report["witnesses"] = cfg.witnesses;
    report["probeDepth"] = cfg.probe_depth;
    return {r.passed() ? ok : property_failure, std::move(report)};
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Outcome eval_file(const std::string& path, const std::string& point, const std::string& derive,
                  std::uint64_t lambda, std::ostream& out)
{
    const json doc = read_json_file(path);
    const Point x = parse_point(point);
    std::optional<MultiIndex> p;
    if (!derive.empty()) {
        std::vector<unsigned> e;
        std::stringstream ss(derive);
        std::string part;
        while (std::getline(ss, part, ',')) {
            try {
                std::size_t used = 0;
                const long k = std::stol(part, &used);
                if (used != part.size() || k < 0)
                    throw std::invalid_argument(part);
                e.push_back(static_cast<unsigned>(k));
            } catch (const std::logic_error&) {
                throw ParseError("bad derivative order \"" + part + "\"");
            }
        }
        p = MultiIndex(std::move(e));
    }

    LocalFun f;
    if (doc.contains("net") || doc.contains("body")) {
        Net w = doc.contains("net") ? decode_gen_fun(doc).net : decode_net(doc);
        if (p)
            w = derivative(w, *p);
        f = w.component(lambda);
    } else {
        f = doc.contains("rep") ? decode_class(doc).rep : decode_local_fun(doc);
        if (p)
            f = derivative(f, *p);
    }
    if (x.size() != f.dim())
        throw StructuralError("point has " + std::to_string(x.size()) + " coordinates, expected " +
                              std::to_string(f.dim()));
    const Value v = f.eval(x);
    out << v << "\n";
    return {ok,
            {{"command", "eval"},
             {"point", encode(x)},
             {"derive", p ? encode(*p) : json()},
             {"lambda", lambda},
             {"value", encode(v)}}};
}

Outcome export_fixture(const RunConfig& cfg, const std::string& name, std::ostream& out)
{
    json doc;
    const SFamily fam = standard_family(1);
    if (name == "atlas") {
        AtlasParams p;
        p.epsilon = Rational::parse(cfg.epsilon);
        doc = encode(make_atlas(p));
    } else if (name == "dense-demo") {
        ConstantSequence g;
        g.kind = ConstantSequence::Kind::factorial;
        doc = encode(build_dense_singular_demo(Rational::parse(cfg.epsilon), g));
    } else if (name == "square-diagonal") {
        doc = encode(diagonal_embed(lc_embed(PolyTerm::monomial(MultiIndex(std::vector<unsigned>{2}), Value(1)),
                                             SingSet::empty()),
                                    fam));
    } else if (name == "staircase") {
        AtlasParams p;
        p.epsilon = Rational::parse(cfg.epsilon);
        doc = encode(GenFun{fam, staircase_net(p)});
    } else if (name == "pole") {
        doc = encode(lc_embed(PolyTerm::variable(1, 0), SingSet::finite({Point{Rational(0)}})));
    } else {
        throw CLI::ValidationError("fixture", "unknown fixture \"" + name +
                                                  "\" (expected atlas, dense-demo, square-diagonal, staircase or pole)");
    }
    out << doc.dump(2) << "\n";
    return {ok, std::move(doc)};
}

void emit_json(const RunConfig& cfg, const json& report, std::ostream& out)
{
    if (cfg.json_path.empty())
        return;
    if (cfg.json_path == "-") {
        out << report.dump(2) << "\n";
        return;
    }
    std::ofstream f(cfg.json_path);
    if (!f)
        throw ParseError("cannot write " + cfg.json_path);
    f << report.dump(2) << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Local functions, direct limits and reduced-power algebras", "localg"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--seed", cfg.seed, "Seed of all random choices")->envname("LOCALG_SEED");
    app.add_option("--cases", cfg.cases, "Cases per campaign (0 = suite default)");
    app.add_option("--witnesses", cfg.witnesses, "Witness points per case")->check(CLI::PositiveNumber);
    app.add_option("--probe-depth", cfg.probe_depth, "Indices probed beyond a threshold")->check(CLI::PositiveNumber);
    app.add_option("--epsilon", cfg.epsilon, "Neighbourhood budget of the atlas fixtures");
    app.add_option("--json", cfg.json_path, "Write the JSON report to a path, or '-' for stdout");

    std::size_t charts = 200;
    auto* atlas_cmd = app.add_subcommand("demo-atlas", "Countable atlas fixture and its checklist");
    atlas_cmd->add_option("--charts", charts, "Number of materialized charts")->check(CLI::Range(2, 100000));
    auto* dense_cmd = app.add_subcommand("demo-dense", "Generalized function singular on a dense set");
    dense_cmd->add_option("--charts", charts, "Charts entering the length bound")->check(CLI::Range(2, 100000));

    std::string suite;
    auto* check_cmd = app.add_subcommand("check", "Run a property campaign");
    check_cmd->add_option("suite", suite, "axioms | offdiag | ideal | leibniz | restrict | equiv")->required();

    std::string file, point, derive;
    std::uint64_t lambda = 0;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a local or generalized function from a JSON file");
    eval_cmd->add_option("file", file, "JSON document")->required();
    eval_cmd->add_option("--point", point, "p/q[,p/q...]")->required();
    eval_cmd->add_option("--derive", derive, "Derivative orders k[,k...]");
    eval_cmd->add_option("--lambda", lambda, "Net index");

    std::string fixture;
    auto* export_cmd = app.add_subcommand("export", "Print a fixture as JSON");
    export_cmd->add_option("fixture", fixture, "atlas | dense-demo | square-diagonal | staircase | pole")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }

    std::ostringstream human;
    try {
        Outcome o;
        if (atlas_cmd->parsed())
            o = demo_atlas(cfg, charts, human);
        else if (dense_cmd->parsed())
            o = demo_dense(cfg, charts, human);
        else if (check_cmd->parsed())
            o = check_suite(cfg, suite, human);
        else if (eval_cmd->parsed())
            o = eval_file(file, point, derive, lambda, human);
        else
            o = export_fixture(cfg, fixture, human);
        if (cfg.json_path != "-")
            out << human.str();
        emit_json(cfg, o.report, out);
        return o.code;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return usage_error;
    } catch (const StructuralError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const SingularPoint& e) {
        err << "singular point: " << e.what() << "\n";
        return domain_error;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return domain_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return domain_error;
    }
}

} // namespace localg::cli
