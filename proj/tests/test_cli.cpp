#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(GORBIT_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("cli computes the classic measure") {
    auto r = run_cli("mahler \"x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1.1762808182599175") != std::string::npos);
}

TEST_CASE("cli orbit height and classification") {
    auto r = run_cli("orbit-height \"1,-1;3,1\" \"x^2+1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1.60943791243410") != std::string::npos);
    auto c = run_cli("classify-O \"0,1;1,0\"");
    CHECK(c.exit_code == 0);
    CHECK(c.out.find("INFINITE") != std::string::npos);
    auto z = run_cli("zeros \"1,-1;3,1\"");
    CHECK(z.exit_code == 0);
    CHECK(z.out.find("0, 1, -1") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli("mahler \"x^^2\"").exit_code == 2);          // unparseable polynomial
    CHECK(run_cli("mahler \"\"").exit_code == 2);              // empty input
    CHECK(run_cli("orbit-height \"1,1;1,1\" \"x\"").exit_code == 2); // singular matrix
    CHECK(run_cli("nonsense-subcommand").exit_code == 2);
    // a failing certification exits 1
    auto fail = run_cli("certify \"1,-1;3,1\" --B 1 --D 1.8 --samples 2048 --grid 80");
    CHECK(fail.exit_code == 1);
    CHECK(fail.out.find("FAIL") != std::string::npos);
    auto pass = run_cli("certify \"1,-1;3,1\" --B 1 --D 1.609 --samples 2048 --grid 80");
    CHECK(pass.exit_code == 0);
    CHECK(pass.out.find("PASS") != std::string::npos);
}

TEST_CASE("cli structured output is valid json") {
    auto r = run_cli("--format structured mahler \"x-2\"");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("mahler").get<double>() == 2.0);
    auto c = run_cli("--format structured certify \"1,-1;3,1\" --B 1 --D 1.6094 --samples 2048 "
                     "--grid 80");
    auto jc = nlohmann::json::parse(c.out);
    CHECK(jc.at("pass").get<bool>());
    CHECK(jc.at("samples").get<long>() > 0);
}

TEST_CASE("cli table verification") {
    std::string rows = std::string(GORBIT_DATA_DIR) + "/table1.rows";
    auto r = run_cli("table " + rows + " --row t1r4 --samples 4096 --grid 120");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS t1r4") != std::string::npos);
    auto bad = run_cli("table /nonexistent.rows");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("cli witness and phi") {
    auto w = run_cli("witness \"-1,1;0,1\"");
    CHECK(w.exit_code == 0);
    CHECK(w.out.find("n = 2") != std::string::npos);
    auto p = run_cli("phi \"1,-1;3,1\"");
    CHECK(p.exit_code == 0);
    CHECK(p.out.find("z^3-z") != std::string::npos);
    CHECK(p.out.find("9*z^2-1") != std::string::npos);
}
