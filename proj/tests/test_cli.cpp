#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

std::string cli_path() {
    if (const char* p = std::getenv("HOPFCOLE_CLI_PATH")) return p;
#ifdef HOPFCOLE_CLI_PATH
    return HOPFCOLE_CLI_PATH;
#else
    FAIL("HOPFCOLE_CLI_PATH not provided");
    return "";
#endif
}

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::size_t count_lines(const std::string& text) {
    std::size_t n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

using nlohmann::json;

}  // namespace

TEST_CASE("family subcommand emits canonical polynomial JSON") {
    RunResult r = run("family --kind hermite2 --n 4");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j.at("vars") == json::array({"x", "y"}));
    REQUIRE(j.at("terms").size() == 3);
    CHECK(j.at("terms")[0].at("exps") == json::array({4, 0}));
    CHECK(j.at("terms")[1] == json({{"exps", {2, 1}}, {"num", "12"}, {"den", "1"}}));
    CHECK(j.at("terms")[2].at("num") == "12");
}

TEST_CASE("family subcommand accepts CamelCase kind names") {
    RunResult a = run("family --kind hermite_lacunary --n 9 --m 3");
    RunResult b = run("family --kind HermiteLacunary --n 9 --m 3");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("family subcommand rejects bad degrees and kinds with exit 2") {
    CHECK(run("family --kind hermite2 --n=-1").exit_code == 2);
    CHECK(run("family --kind nope --n 2").exit_code == 2);
    CHECK(run("family --kind hermite_lacunary --n 4 --m 1").exit_code == 2);
}

TEST_CASE("solution subcommand emits a monic-denominator rational function") {
    RunResult r = run("solution --phi --n 2 --m 2");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    // u = 2x/(x^2+2y): leading denominator coefficient already 1
    CHECK(j.at("num").at("terms")[0] == json({{"exps", {1, 0}}, {"num", "2"}, {"den", "1"}}));
    CHECK(j.at("den").at("terms")[0] == json({{"exps", {2, 0}}, {"num", "1"}, {"den", "1"}}));
    CHECK(run("solution --phi --laguerre --n 2").exit_code == 2);
    CHECK(run("solution --n 2").exit_code == 2);
}

TEST_CASE("verify subcommand returns 0 on success and 1 on a broken candidate") {
    RunResult ok = run("verify burgers --n 4 --m 2");
    REQUIRE(ok.exit_code == 0);
    json j = json::parse(ok.output);
    CHECK(j.at("equation") == "burgers");
    CHECK(j.at("residual_zero") == true);
    CHECK(j.at("residual_num_terms") == 0);
    CHECK(j.at("params").at("n") == 4);
    CHECK(j.at("params").at("m") == 2);
    CHECK(j.contains("elapsed_ms"));

    RunResult bad = run("verify burgers --n 4 --m 2 --perturb");
    REQUIRE(bad.exit_code == 1);
    json jb = json::parse(bad.output);
    CHECK(jb.at("residual_zero") == false);
    CHECK(jb.at("residual_num_terms").get<int>() > 0);
    CHECK(jb.at("params").at("perturb") == true);
}

TEST_CASE("verify subcommand covers every registered equation id") {
    CHECK(run("verify hierarchical --n 3 --m 3 --k 3").exit_code == 0);
    CHECK(run("verify laguerre --n 3").exit_code == 0);
    CHECK(run("verify laguerre-log --n 3").exit_code == 0);
    CHECK(run("verify hybrid --n 4").exit_code == 0);
    CHECK(run("verify hybrid-log --n 4").exit_code == 0);
    CHECK(run("verify varcoef --n 3").exit_code == 0);
    CHECK(run("verify combined --n 3 --alpha 2 --beta 1/2 --gamma 0").exit_code == 0);
    CHECK(run("verify combined-linear --n 3 --alpha 1 --beta 1 --gamma 1").exit_code == 0);
    CHECK(run("verify identity --n 5").exit_code == 0);
    CHECK(run("verify heat --n 6 --m 3").exit_code == 0);
    CHECK(run("verify genfun --m 3 --N 6").exit_code == 0);
    CHECK(run("verify no-such-equation --n 2").exit_code == 2);
}

TEST_CASE("grid subcommand emits steps+1 rows plus a header") {
    RunResult r = run("grid --phi --n 2 --m 2 --x -5:5:400 --y 1");
    REQUIRE(r.exit_code == 0);
    CHECK(count_lines(r.output) == 402);  // header + 401 nodes
    CHECK(r.output.rfind("x,value,pole\n", 0) == 0);
    CHECK(run("grid --phi --n 2 --m 2 --x 0:0:10 --y 1").exit_code == 2);
    CHECK(run("grid --phi --n 2 --m 2 --x 1:2 --y 1").exit_code == 2);
    CHECK(run("grid --laguerre --n 3 --y 1").exit_code == 2);   // wrong time variable
    CHECK(run("grid --phi --n 2 --m 2 --t 1").exit_code == 2);  // --t is Laguerre-only
}

TEST_CASE("grid subcommand supports surface ranges on y") {
    RunResult r = run("grid --hybrid --n 3 --x 0:1:4 --y 1:2:3");
    REQUIRE(r.exit_code == 0);
    CHECK(count_lines(r.output) == 21);  // header + 5*4 nodes
    CHECK(r.output.rfind("x,y,value,pole\n", 0) == 0);
}

TEST_CASE("identity subcommand verifies the closure identity") {
    RunResult r = run("identity --n 3");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j.at("equation") == "identity");
    CHECK(j.at("residual_zero") == true);
    CHECK(run("identity --n 2").exit_code == 2);  // defined only for n >= 3
}

TEST_CASE("report subcommand runs the bundled suites") {
    RunResult r = run("report paper-fixtures");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("PASS") != std::string::npos);
    CHECK(r.output.find("FAIL") == std::string::npos);
    CHECK(r.output.find("suite paper-fixtures:") != std::string::npos);

    RunResult rj = run("report paper-fixtures --json");
    REQUIRE(rj.exit_code == 0);
    json j = json::parse(rj.output);
    CHECK(j.at("suite") == "paper-fixtures");
    CHECK(j.at("all_passed") == true);
    CHECK(j.at("items").size() >= 6);

    CHECK(run("report no-such-suite").exit_code == 2);
}

TEST_CASE("outputs are deterministic byte for byte") {
    CHECK(run("family --kind laguerre2 --n 5").output ==
          run("family --kind laguerre2 --n 5").output);
    CHECK(run("solution --combined --n 3 --alpha 1/2 --beta 1 --gamma 2").output ==
          run("solution --combined --n 3 --alpha 1/2 --beta 1 --gamma 2").output);
    CHECK(run("grid --phi --n 4 --m 3 --x -2:2:50 --y 0.5").output ==
          run("grid --phi --n 4 --m 3 --x -2:2:50 --y 0.5").output);
}

TEST_CASE("figure presets write their files") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "hopfcole_cli_fig3";
    fs::remove_all(dir);
    RunResult r = run("grid --fig3 --output " + dir.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("wrote ") != std::string::npos);
    CHECK(fs::exists(dir / "fig3_laguerre_n3.csv"));
    CHECK(fs::exists(dir / "fig3_laguerre_n7.csv"));
    std::ifstream in(dir / "fig3_laguerre_n3.csv");
    std::string header;
    std::getline(in, header);
    CHECK(header == "x,value,pole");
    std::size_t rows = 0;
    std::string line;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 401);
    fs::remove_all(dir);
}

TEST_CASE("help exits zero; missing subcommand is a usage error") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("").exit_code == 2);
}
