// Drives the built CLI binary end to end: output contracts, exit codes, and
// the batch surface.

#include "lensknot/report.hpp"
#include "lensknot/serialize.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout only
};

RunResult run_cli(const std::string &args)
{
    const std::string command = std::string(LENSKNOT_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE *pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer;
    while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe))
        result.output.append(buffer.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string trimmed(std::string s)
{
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r'))
        s.pop_back();
    return s;
}

} // namespace

TEST_CASE("gamma subcommand prints the polynomial")
{
    const RunResult r = run_cli("gamma --catalog km3 -n 2");
    CHECK(r.exit_code == 0);
    CHECK(trimmed(r.output) == "2 - t");
}

TEST_CASE("alexander subcommand prints delta")
{
    const RunResult r = run_cli("alexander --catalog km4");
    CHECK(r.exit_code == 0);
    CHECK(trimmed(r.output) == "1 + t^2");
}

TEST_CASE("cover subcommand prints group and order")
{
    const RunResult r = run_cli("cover --catalog km3 -n 3");
    CHECK(r.exit_code == 0);
    CHECK(trimmed(r.output) == "Z/2 ⊕ Z/2, order 4");
}

TEST_CASE("lift subcommand prints the cyclic presentation word")
{
    const RunResult r = run_cli("lift --catalog trefoil -n 2");
    CHECK(r.exit_code == 0);
    CHECK(trimmed(r.output) == "x1^2 x2^-1");
}

TEST_CASE("custom knots work through --p --q --relator")
{
    const RunResult r = run_cli("homology --p 5 --q 2 --relator a^5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("Z ⊕ Z/5") != std::string::npos);
}

TEST_CASE("text and json formats carry the same mathematics")
{
    const RunResult text = run_cli("gamma --catalog km3 -n 3");
    const RunResult js = run_cli("gamma --catalog km3 -n 3 --format json");
    CHECK(text.exit_code == 0);
    CHECK(js.exit_code == 0);
    const auto parsed = lensknot::json::parse(js.output);
    CHECK(parsed["result"]["text"] == trimmed(text.output));
    CHECK(parsed["status"] == "ok");
    CHECK(parsed["command"] == "gamma");
    CHECK(parsed["schema_version"] == 1);
    CHECK(lensknot::to_json(lensknot::report_from_json(parsed)) == parsed);
}

TEST_CASE("misuse exits with 2")
{
    CHECK(run_cli("gamma --catalog nope -n 2").exit_code == 2);
    CHECK(run_cli("gamma --catalog km3").exit_code == 2);          // missing -n
    CHECK(run_cli("gamma --catalog trivial_5_2 -n 10").exit_code == 2); // gcd != 1
    CHECK(run_cli("homology --p 4 --q 2 --relator a^4").exit_code == 2);
    CHECK(run_cli("homology --p 0 --q 0 --relator g").exit_code == 2);
    CHECK(run_cli("homology --p 2 --q 1 --relator 'a?g'").exit_code == 2);
    CHECK(run_cli("homology").exit_code == 2); // no knot spec at all
}

TEST_CASE("json mode reports errors as error reports")
{
    const RunResult r = run_cli("gamma --catalog nope -n 2 --format json");
    CHECK(r.exit_code == 2);
    const auto parsed = lensknot::json::parse(r.output);
    CHECK(parsed["status"] == "error");
    CHECK(parsed["result"]["error"].get<std::string>().find("nope") !=
          std::string::npos);
}

TEST_CASE("verify succeeds over the whole catalog surface")
{
    const RunResult r = run_cli("verify --catalog km6 --n-max 9");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAILED") == std::string::npos);

    const RunResult json_run = run_cli("verify --catalog trefoil -n 5 --format json");
    CHECK(json_run.exit_code == 0);
    const auto parsed = lensknot::json::parse(json_run.output);
    CHECK(parsed["status"] == "ok");
    CHECK(parsed["result"]["checks"][0]["n"] == 5);
    CHECK(parsed["result"]["checks"][0]["theorem"]["ok"] == true);
}

TEST_CASE("batch processes newline-delimited knots in order")
{
    const std::string path = "/tmp/lensknot_batch_test.ndjson";
    {
        std::ofstream out(path);
        out << R"({"name":"trivial_7_3","p":7,"q":3,"relator":"a^7","n_values":[2,3,4,5]})"
            << "\n";
        out << R"({"name":"km5","p":3,"q":1,"relator":"agagagagAg","n_values":[2,4,7]})"
            << "\n";
        out << R"({"name":"broken","p":4,"q":2,"relator":"a^4"})" << "\n";
    }
    const RunResult r = run_cli("batch " + path + " --format json");
    CHECK(r.exit_code == 2); // the bad line is an input error, not a finding

    std::vector<lensknot::json> lines;
    std::size_t start = 0;
    while (start < r.output.size()) {
        const std::size_t end = r.output.find('\n', start);
        if (end == std::string::npos)
            break;
        lines.push_back(lensknot::json::parse(r.output.substr(start, end - start)));
        start = end + 1;
    }
    REQUIRE(lines.size() == 4); // three reports plus the summary

    CHECK(lines[0]["knot"]["name"] == "trivial_7_3");
    CHECK(lines[0]["status"] == "ok");
    CHECK(lines[0]["result"]["checks"].size() == 4);
    CHECK(lines[0]["result"]["delta"]["text"] == "7");

    CHECK(lines[1]["knot"]["name"] == "km5");
    CHECK(lines[1]["status"] == "ok");
    CHECK(lines[1]["result"]["delta"]["text"] == "1 - t + t^2 - t^3 + t^4");
    CHECK(lines[1]["result"]["checks"].size() == 3);
    CHECK(lines[1]["witnesses"].size() == 3); // one unit per covering degree

    CHECK(lines[2]["status"] == "error");

    CHECK(lines[3]["summary"]["knots"] == 3);
    CHECK(lines[3]["summary"]["passed"] == 2);
    CHECK(lines[3]["summary"]["errors"] == 1);
    std::remove(path.c_str());
}

TEST_CASE("empty batch file exits cleanly")
{
    const std::string path = "/tmp/lensknot_batch_empty.ndjson";
    { std::ofstream out(path); }
    const RunResult r = run_cli("batch " + path);
    CHECK(r.exit_code == 0);
    CHECK(trimmed(r.output) == "summary: 0 knots, 0 passed, 0 failed, 0 errors");
    std::remove(path.c_str());
}

TEST_CASE("catalog subcommand lists the built-ins")
{
    const RunResult r = run_cli("catalog");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("trefoil") != std::string::npos);
    CHECK(r.output.find("trivial_7_3") != std::string::npos);
    CHECK(r.output.find("km10") != std::string::npos);

    const RunResult js = run_cli("catalog --format json");
    const auto parsed = lensknot::json::parse(js.output);
    CHECK(parsed.size() == 12);
}
