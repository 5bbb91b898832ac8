#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "ncmod/json_io.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output; // stdout only
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(NCMOD_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = "ncmod_cli_test_" + std::to_string(counter++) + ".json";
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("algebras list is sorted and stable") {
    RunResult r = run_cli("algebras list");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["algebras"] ==
          nlohmann::json::array(
              {"complex", "matrix2", "octonion", "quaternion", "rational", "zero1"}));
}

TEST_CASE("algebra show reports the classification flags") {
    RunResult r = run_cli("algebra show quaternion");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["commutative"] == false);
    CHECK(j["associative"] == true);
    CHECK(j["center_dim"] == 1);
    CHECK(j["table"][1][2] == "0,0,0,1");
}

TEST_CASE("mul multiplies coordinate strings") {
    RunResult r = run_cli("mul --algebra quaternion 0,1,0,0 0,0,1,0");
    CHECK(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.output)["result"] == "0,0,0,1");
}

TEST_CASE("diff reproduces the displayed partial") {
    RunResult r = run_cli("diff --algebra quaternion --vars x,y,z "
                          "--expr \"x^2*y^3 + x*z^2*x\" --wrt x");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    REQUIRE(j["terms"].size() == 4);
    // Canonical polynomial order puts the shorter word first.
    CHECK(j["terms"][0]["prefix"] == "1");
    CHECK(j["terms"][0]["suffix"] == "z^2*x");
    CHECK(j["terms"][1]["prefix"] == "x*z^2");
    CHECK(j["terms"][1]["suffix"] == "1");
    CHECK(j["terms"][2]["suffix"] == "x*y^3");
    CHECK(j["terms"][3]["prefix"] == "x");
}

TEST_CASE("mat rc on matrix files") {
    TempFile a(R"({"rows":2,"cols":2,"algebra":null,"entries":[["1","2"],["3","4"]]})");
    TempFile b(R"({"rows":2,"cols":2,"algebra":null,"entries":[["0","1"],["1","0"]]})");
    RunResult r = run_cli("mat --op rc " + a.path + " " + b.path);
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["entries"] == nlohmann::json::parse(R"([["2","1"],["4","3"]])"));
}

TEST_CASE("coords subcommand resolves a constructed example") {
    TempFile basis(R"({"algebra":"quaternion","orientation":"left-column",
        "vectors":[["1,0,0,0","0,0,0,0"],["0,1,0,0","1,0,0,0"]]})");
    TempFile vec(R"({"algebra":"quaternion","orientation":"left-column",
        "vectors":[["0,0,2,0","0,0,0,1"]]})");
    RunResult r = run_cli("coords --basis " + basis.path + " --vector " + vec.path);
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["kind"] == "unique");
    CHECK(j["coords"] == nlohmann::json::array({"0,0,1,0", "0,0,0,1"}));
}

TEST_CASE("jacobian subcommand applies the product rule") {
    RunResult r = run_cli("jacobian --algebra quaternion --vars x,y "
                          "--maps \"v = x*y\" --point \"0,1,0,0;0,0,1,0\" "
                          "--displacement \"1,0,0,0;1,0,0,0\"");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    // h j + i h with h = 1: j + i.
    CHECK(j["results"][0]["value"] == "0,1,1,0");
}

TEST_CASE("verify exits zero and is byte-identical across runs") {
    RunResult r1 = run_cli("verify --suite all --algebra quaternion --trials 5 --seed 42");
    RunResult r2 = run_cli("verify --suite all --algebra quaternion --trials 5 --seed 42");
    CHECK(r1.exit_code == 0);
    CHECK(r1.output == r2.output);
    auto reports = nlohmann::json::parse(r1.output);
    CHECK(reports.is_array());
    for (const auto& rep : reports) CHECK(rep["passed"] == true);
}

TEST_CASE("NCMOD_SEED steers the seed only when the flag is absent") {
    auto run_with_env = [](const std::string& args) {
        std::string cmd = std::string("NCMOD_SEED=77 ") + NCMOD_CLI_PATH + " " + args;
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::string out;
        std::array<char, 4096> buf{};
        std::size_t n = 0;
        while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
        return RunResult{WEXITSTATUS(pclose(pipe)), out};
    };
    std::string base = "verify --suite biring --algebra quaternion --trials 3";
    CHECK(nlohmann::json::parse(run_with_env(base).output)["seed"] == 77);
    CHECK(nlohmann::json::parse(run_with_env(base + " --seed 5").output)["seed"] == 5);
}

TEST_CASE("exit codes: usage errors and malformed files") {
    CHECK(run_cli("no_such_command").exit_code == 2);
    CHECK(run_cli("mul --algebra quaternion 1,0,0,0").exit_code == 2);
    CHECK(run_cli("mul --algebra nonsense 1 1").exit_code == 2);
    CHECK(run_cli("verify --algebra quaternion --trials 0").exit_code == 2);

    TempFile bad("{broken");
    CHECK(run_cli("mat --op transpose " + bad.path).exit_code == 3);
    TempFile bad_schema(R"({"rows": 1})");
    CHECK(run_cli("mat --op transpose " + bad_schema.path).exit_code == 3);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("hom apply via files") {
    TempFile hom(R"({"algebra":"quaternion","orientation":"left-column",
        "matrix":[["0,0,1,0"]]})");
    RunResult r = run_cli("hom apply --hom " + hom.path + " --vector \"0,1,0,0\"");
    CHECK(r.exit_code == 0);
    // i j = k under the left-column order.
    CHECK(nlohmann::json::parse(r.output)["result"][0] == "0,0,0,1");
}
