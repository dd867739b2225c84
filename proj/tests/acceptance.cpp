#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "localg/atlas.hpp"
#include "localg/limits.hpp"
#include "localg/nets.hpp"

using namespace localg;

namespace {

// Every comparison below is exact rational arithmetic; no numeric tolerance
// enters any criterion.
constexpr std::uint64_t kSeed = 20240601;
constexpr std::size_t kAtlasCharts = 200;
constexpr std::size_t kWitnesses = 20;
constexpr unsigned kMaxDegree = 6;
constexpr std::size_t kProbePoints = 64;
const Rational kEpsilon(1, 1000);

struct Outcome {
    bool pass;
    std::string detail;
};

std::size_t counter(const SuiteReport& r, const std::string& key)
{
    const auto it = r.counters.find(key);
    return it == r.counters.end() ? 0 : it->second;
}

std::string summary(const SuiteReport& r)
{
    std::ostringstream s;
    s << r.suite << ": " << r.cases << " cases, " << r.checks << " checks, " << r.failures.size() << " failures";
    return s.str();
}

SuiteConfig config(std::size_t cases)
{
    SuiteConfig c;
    c.seed = kSeed;
    c.cases = cases;
    c.witnesses = kWitnesses;
    return c;
}

Outcome atlas_fixture()
{
    AtlasParams p;
    p.epsilon = kEpsilon;
    p.constants.kind = ConstantSequence::Kind::index;
    const LocalFun f = make_atlas(p);
    const CountableAtlas& a = *as_atlas(f);
    std::size_t avoidance_violations = 0;
    std::vector<OpenBox> boxes;
    std::vector<Point> anchors;
    for (std::uint64_t m = 0; m < kAtlasCharts; ++m) {
        const Chart c = a.chart(m);
        boxes.push_back(c.box);
        anchors.push_back(Point{a.anchor(m)});
        for (std::uint64_t n = 0; n < m; ++n)
            avoidance_violations += c.box.contains(Point{a.anchor(n)}) ? 1 : 0;
    }
    const CompatReport weak = check_compat(f, anchors);
    const Point y = overlap_witness(f, anchors[0]);
    const std::vector<Point> pair{anchors[0], y};
    const CompatReport strong = check_strong_compat(f, pair);
    const Rational total = length_sum(boxes);
    const bool pass = avoidance_violations == 0 && weak.holds && weak.violations.empty() && !strong.holds &&
                      !strong.violations.empty() && total <= Rational(2) * kEpsilon;
    std::ostringstream s;
    s << "avoidance violations " << avoidance_violations << ", weak violations " << weak.violations.size()
      << ", strong witness (" << anchors[0][0] << ", " << y[0] << "), length sum " << total << " <= "
      << Rational(2) * kEpsilon;
    return {pass, s.str()};
}

Outcome axioms()
{
    const SuiteReport r = algebra_axioms_suite(config(500));
    const bool pass = r.passed() && counter(r, "triples.scalar") >= 500 && counter(r, "triples.mat2") >= 500 &&
                      counter(r, "commutativityRefutations.scalar") == 0 &&
                      counter(r, "commutativityRefutations.mat2") > 0;
    return {pass, summary(r) + ", mat2 refutations " + std::to_string(counter(r, "commutativityRefutations.mat2"))};
}

Outcome off_diagonality()
{
    const SuiteReport r = off_diagonality_suite(config(500));
    return {r.passed() && r.cases >= 500, summary(r)};
}

Outcome restriction()
{
    const SuiteReport r = restriction_suite(config(200));
    return {r.passed() && r.cases >= 200, summary(r)};
}

Outcome net_ideal()
{
    const SuiteReport i = net_ideal_suite(config(200));
    const SuiteReport l = leibniz_suite(config(200));
    const std::size_t refuted = counter(i, "offDiagonalRefutations");
    return {i.passed() && l.passed() && i.cases >= 200 && l.cases >= 200 && refuted >= 100,
            summary(i) + "; " + summary(l) + "; off-diagonal refutations " + std::to_string(refuted)};
}

Outcome equivalence()
{
    const SuiteReport r = equivalence_suite(config(200));
    const std::size_t chains = counter(r, "transitivityChains");
    return {r.passed() && r.cases >= 200 && chains > 0, summary(r) + ", transitivity chains " + std::to_string(chains)};
}

Outcome dense_demo()
{
    ConstantSequence growth;
    growth.kind = ConstantSequence::Kind::factorial;
    const GenFun d = build_dense_singular_demo(kEpsilon, growth);
    const LocalFun f = d.net.component(0);
    const CountableAtlas& a = *as_atlas(f);
    bool exact = d.net.sigma() == SingSet::corational();
    Rational fact(1);
    for (std::uint64_t n = 0; n < 20; ++n) {
        if (n > 0)
            fact *= Rational(static_cast<long>(n));
        exact = exact && f.eval(Point{a.anchor(n)}) == Value(fact);
    }
    std::vector<OpenBox> boxes;
    for (std::uint64_t n = 0; n < kAtlasCharts; ++n)
        boxes.push_back(a.chart(n).box);
    const bool bound = length_sum(boxes) <= Rational(2) * kEpsilon;
    std::vector<Point> pts;
    for (std::uint64_t n = 0; n < kProbePoints; ++n)
        pts.push_back(Point{a.anchor(n)});
    std::size_t violated = 0;
    for (unsigned deg = 0; deg <= kMaxDegree; ++deg)
        violated += moderateness_probe(d, pts, deg).moderate ? 0 : 1;
    std::ostringstream s;
    s << "20 exact evaluations " << (exact ? "ok" : "wrong") << ", length bound " << (bound ? "ok" : "violated")
      << ", non-moderate degrees " << violated << "/" << kMaxDegree + 1;
    return {exact && bound && violated == kMaxDegree + 1, s.str()};
}

Outcome determinism()
{
    const std::vector<std::vector<std::string>> commands{
        {"--json", "-", "demo-atlas"},
        {"demo-atlas"},
        {"--json", "-", "demo-dense"},
        {"demo-dense"},
        {"--seed", "3", "--cases", "40", "--json", "-", "check", "axioms"},
        {"--seed", "3", "--cases", "40", "--json", "-", "check", "offdiag"},
        {"--seed", "3", "--cases", "40", "--json", "-", "check", "ideal"},
        {"--seed", "3", "--cases", "40", "--json", "-", "check", "leibniz"},
        {"--seed", "3", "--cases", "40", "--json", "-", "check", "restrict"},
        {"--seed", "3", "--cases", "40", "--json", "-", "check", "equiv"},
        {"export", "atlas"},
        {"export", "dense-demo"},
        {"export", "square-diagonal"},
        {"export", "staircase"},
        {"export", "pole"},
    };
    std::size_t identical = 0;
    for (const auto& args : commands) {
        std::ostringstream o1, e1, o2, e2;
        const int c1 = cli::run(args, o1, e1);
        const int c2 = cli::run(args, o2, e2);
        identical += c1 == c2 && o1.str() == o2.str() && e1.str() == e2.str() ? 1 : 0;
    }
    return {identical == commands.size(),
            std::to_string(identical) + "/" + std::to_string(commands.size()) + " commands byte-identical"};
}

} // namespace

int main()
{
    const std::vector<std::function<Outcome()>> criteria{atlas_fixture, axioms,      off_diagonality, restriction,
                                                         net_ideal,     equivalence, dense_demo,      determinism};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Outcome o = criteria[i]();
        std::printf("CRITERION %zu %s  %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
