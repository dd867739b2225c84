#include "localg/report.hpp"

namespace localg {

void SuiteReport::merge(const SuiteReport& other)
{
    cases += other.cases;
    checks += other.checks;
    case_log.insert(case_log.end(), other.case_log.begin(), other.case_log.end());
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    for (const auto& [k, v] : other.counters)
        counters[k] += v;
}

nlohmann::json SuiteReport::to_json() const
{
    return {{"suite", suite},   {"seed", seed},         {"cases", cases},       {"checks", checks},
            {"passed", passed()}, {"counters", counters}, {"failures", failures}, {"caseLog", case_log}};
}

} // namespace localg
