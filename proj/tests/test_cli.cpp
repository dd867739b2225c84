#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = localg::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content)
{
    const auto path = std::filesystem::temp_directory_path() / ("localg_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("exit codes")
    {
        CHECK(run({"check", "bogus"}).code == 2);
        CHECK(run({}).code == 2);
        CHECK(run({"eval"}).code == 2);
        CHECK(run({"export", "nothing"}).code == 2);
        CHECK(run({"--witnesses", "0", "check", "axioms"}).code == 2);
        const std::string broken = temp_file("broken.json", "{\"sigma\": ");
        CHECK(run({"eval", broken, "--point", "1/2"}).code == 2);
        CHECK(run({"eval", "/nonexistent/file.json", "--point", "1/2"}).code == 2);
        CHECK(run({"--help"}).code == 0);
    }

    TEST_CASE("evaluation of exported fixtures")
    {
        const Result sq = run({"export", "square-diagonal"});
        REQUIRE(sq.code == 0);
        const std::string sq_path = temp_file("square.json", sq.out);
        const Result d = run({"eval", sq_path, "--point", "3/2", "--derive", "1"});
        CHECK(d.code == 0);
        CHECK(d.out.find("3") != std::string::npos);
        const Result dj = run({"--json", "-", "eval", sq_path, "--point", "3/2", "--derive", "1"});
        CHECK(nlohmann::json::parse(dj.out).at("value") == nlohmann::json{{"scalar", "3/1"}});
        const Result v = run({"--json", "-", "eval", sq_path, "--point", "3/2"});
        CHECK(nlohmann::json::parse(v.out).at("value") == nlohmann::json{{"scalar", "9/4"}});

        const Result pole = run({"export", "pole"});
        const std::string pole_path = temp_file("pole.json", pole.out);
        CHECK(run({"eval", pole_path, "--point", "0"}).code == 3);
        CHECK(run({"eval", pole_path, "--point", "2"}).code == 0);
        CHECK(run({"eval", pole_path, "--point", "1,2"}).code == 2);

        const Result demo = run({"export", "dense-demo"});
        const std::string demo_path = temp_file("demo.json", demo.out);
        // x_5 of the whole-line enumeration: t = 1/5, u = -3/5, x = u / (1 - |u|) = -3/2.
        const Result x5 = run({"--json", "-", "eval", demo_path, "--point", "-3/2"});
        CHECK(x5.code == 0);
        CHECK(nlohmann::json::parse(x5.out).at("value") == nlohmann::json{{"scalar", "120/1"}});
    }

    TEST_CASE("commands are deterministic")
    {
        for (const std::vector<std::string>& args :
             {std::vector<std::string>{"--json", "-", "demo-atlas", "--charts", "50"},
              std::vector<std::string>{"--json", "-", "demo-dense"},
              std::vector<std::string>{"--seed", "5", "--cases", "10", "--json", "-", "check", "ideal"},
              std::vector<std::string>{"export", "staircase"}}) {
            const Result a = run(args), b = run(args);
            CHECK(a.code == 0);
            CHECK(a.out == b.out);
        }
        CHECK_FALSE(run({"--seed", "5", "--cases", "10", "--json", "-", "check", "axioms"}).out ==
                    run({"--seed", "6", "--cases", "10", "--json", "-", "check", "axioms"}).out);
    }

    TEST_CASE("demo checklists pass")
    {
        const Result a = run({"demo-atlas"});
        CHECK(a.code == 0);
        CHECK(a.out.find("FAIL as expected") != std::string::npos);
        const Result tight = run({"--epsilon", "1/1000000", "--json", "-", "demo-atlas"});
        CHECK(tight.code == 0);
        CHECK(run({"demo-dense"}).code == 0);
    }
}
