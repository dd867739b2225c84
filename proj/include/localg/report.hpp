#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace localg {

/// Outcome of a property campaign. Every case is logged by index; a failure
/// carries the property name and the encoded inputs.
struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t cases = 0;
    std::size_t checks = 0;
    std::vector<nlohmann::json> case_log;
    std::vector<nlohmann::json> failures;
    std::map<std::string, std::size_t> counters;

    bool passed() const noexcept { return failures.empty(); }

    /// Records one check; `inputs` is only evaluated on failure.
    template <class Inputs>
    bool check(bool ok, std::size_t case_index, const std::string& property, Inputs&& inputs)
    {
        ++checks;
        if (!ok)
            failures.push_back({{"case", case_index}, {"property", property}, {"inputs", inputs()}});
        return ok;
    }
    bool check(bool ok, std::size_t case_index, const std::string& property)
    {
        return check(ok, case_index, property, [] { return nlohmann::json::object(); });
    }
    void count(const std::string& key, std::size_t n = 1) { counters[key] += n; }

    void merge(const SuiteReport& other);
    nlohmann::json to_json() const;
};

} // namespace localg
