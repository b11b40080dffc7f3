#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "rostlat/commands.hpp"

using namespace rostlat;

namespace {

CommandResult cli(std::initializer_list<std::string> args) {
    return run_command(std::vector<std::string>(args));
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("info renders the center presentation") {
    CommandResult r = cli({"info", "E6"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "type: E6"));
    CHECK(contains(r.output, "root count: 72"));
    CHECK(contains(r.output, "delta_r: {2,4}"));
    CHECK(contains(r.output, "delta_c: {1,6}"));
    CHECK(contains(r.output, "center: Z/3"));
    CHECK(contains(r.output, "h1(z) h3(z^2) h5(z) h6(z^2)"));

    CommandResult d8 = cli({"info", "D8"});
    CHECK(contains(d8.output, "center: Z/2 x Z/2"));
    CHECK(contains(d8.output, "z0:"));
    CHECK(contains(d8.output, "z1:"));

    CHECK(cli({"info", "E8"}).exit_code == 0);
    CHECK(contains(cli({"info", "E8"}).output, "center: trivial"));
}

TEST_CASE("zmap prints one cocharacter map") {
    CommandResult r = cli({"zmap", "E7", "7"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "coweight: (1, 3/2, 2, 3, 5/2, 2, 3/2)"));
    CHECK(contains(r.output, "order: 2"));
    CHECK(contains(r.output, "zmap: h2(-1) h5(-1) h7(-1)"));
    CHECK(contains(r.output, "support: {2,5,7}"));

    CHECK(cli({"zmap", "A2", "1"}).exit_code == 0);
    CHECK(contains(cli({"zmap", "A2", "1"}).output, "h1(z^2) h2(z)"));

    CHECK(cli({"zmap", "E7", "8"}).exit_code == 1);
    CHECK(cli({"zmap", "E7", "0"}).exit_code == 1);
    CHECK(cli({"zmap", "E7", "x"}).exit_code == 1);
    CHECK(cli({"zmap", "E7", "7x"}).exit_code == 1);
    CHECK(cli({"zmap", "E7"}).exit_code == 1);
}

TEST_CASE("gprime prints components and center restriction") {
    CommandResult r = cli({"gprime", "D6", "circled=2,4"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "condition: satisfied"));
    CHECK(contains(r.output, "A1 on {1}  path (1)  multiplier 1"));
    CHECK(contains(r.output, "A1 on {6}"));
    CHECK(contains(r.output, "z0: (1) (1) (0) (1)"));
    CHECK(contains(r.output, "z1: (1) (1) (1) (0)"));

    CHECK(cli({"gprime", "E7", "circled=1,3,4,6"}).exit_code == 0);
    CHECK(cli({"gprime", "E7", "circled=1"}).exit_code == 1);
    CHECK(cli({"gprime", "H9"}).exit_code == 1);
}

TEST_CASE("rost command verdicts and exit codes") {
    CommandResult e7 = cli({"rost", "E7", "circled=1,3,4,6"});
    CHECK(e7.exit_code == 0);
    CHECK(contains(e7.output, "a∪[Q]"));
    CHECK(contains(e7.output, "verdict: SameAsTitsClass"));

    CommandResult d8 = cli({"rost", "D8", "circled=2,4,6"});
    CHECK(d8.exit_code == 0);
    CHECK(contains(d8.output, "[Q] = [Q_7] + [Q_8]"));
    CHECK(contains(d8.output, "a0∪[Q_7]"));
    CHECK(contains(d8.output, "a1∪[Q_8]"));

    // vanish criterion shortcut when the condition fails
    CommandResult b3 = cli({"rost", "B3", "circled=1"});
    CHECK(b3.exit_code == 0);
    CHECK(contains(b3.output, "verdict: Zero"));
    CHECK(contains(b3.output, "vanish"));

    // condition and vanish both fail: input error
    CHECK(cli({"rost", "B4", "circled=2"}).exit_code == 1);
    // unsupported shapes are input errors, not crashes
    CHECK(cli({"rost", "D5", "circled=2"}).exit_code == 1);
    CHECK(cli({"rost", "D6", "circled=1,2,4"}).exit_code == 1);

    // outer forms come straight from the answer table
    CommandResult outer = cli({"rost", "D4", "outer3"});
    CHECK(outer.exit_code == 0);
    CHECK(contains(outer.output, "verdict:"));
}

TEST_CASE("classify-form distinguishes the three classes") {
    CHECK(contains(cli({"classify-form", "0110"}).output, "hyperbolic"));
    CHECK(contains(cli({"classify-form", "1001"}).output, "metabolic-not-hyperbolic"));
    CHECK(contains(cli({"classify-form", "0000"}).output, "degenerate"));
    CHECK(cli({"classify-form", "0100"}).exit_code == 1); // asymmetric
    CHECK(cli({"classify-form", "01"}).exit_code == 1);
    CHECK(cli({"classify-form", "012x"}).exit_code == 1);
    CHECK(cli({"classify-form"}).exit_code == 1);
}

TEST_CASE("json output parses and round-trips the text facts") {
    CommandResult r = cli({"--format", "json", "info", "E6"});
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["command"] == "info");
    CHECK(j["status"] == "ok");
    CHECK(j["inputs"]["type"] == "E6");
    CHECK(j["payload"]["rank"] == 6);
    CHECK(j["payload"]["root_count"] == 72);
    CHECK(j["payload"]["delta_r"] == nlohmann::json::array({2, 4}));
    CHECK(j["payload"]["center"]["invariant_factors"] == nlohmann::json::array({3}));
    CHECK(j["payload"]["center"]["structure"] == "Z/3");
    CHECK(j["payload"]["center"]["generators"][0]["zmap"] == "h1(z) h3(z^2) h5(z) h6(z^2)");

    nlohmann::json rost = nlohmann::json::parse(
        cli({"--format=json", "rost", "E7", "circled=1,3,4,6"}).output);
    CHECK(rost["payload"]["verdict"] == "SameAsTitsClass");
    CHECK(rost["payload"]["reduction"]["restriction"][0]["expression"] == "a∪[Q]");
    CHECK(rost["payload"]["reduction"]["components"][0]["symbol"] == "Q");

    // errors are structured too
    nlohmann::json err = nlohmann::json::parse(cli({"--format", "json", "info", "H9"}).output);
    CHECK(err["status"] == "error");
    CHECK(contains(err["error"].get<std::string>(), "bad system type"));
}

TEST_CASE("flag and argument errors") {
    CHECK(cli({}).exit_code == 1);
    CHECK(cli({"frobnicate"}).exit_code == 1);
    CHECK(cli({"info"}).exit_code == 1);
    CHECK(cli({"info", "E6", "extra"}).exit_code == 1);
    CHECK(cli({"--format", "yaml", "info", "E6"}).exit_code == 1);
    CHECK(cli({"--format"}).exit_code == 1);
    CHECK(cli({"--frob", "info", "E6"}).exit_code == 1);
    CHECK(cli({"help"}).exit_code == 0);
    CHECK(cli({"--help"}).exit_code == 0);
    CHECK(contains(cli({"--help"}).output, "usage"));
}

TEST_CASE("verify runs clean and exits zero") {
    CommandResult r = cli({"verify"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "0 failures"));
    CHECK_FALSE(contains(r.output, "FAIL"));
}

TEST_CASE("identical invocations produce byte-identical output") {
    for (auto args : {std::vector<std::string>{"info", "D12"},
                      std::vector<std::string>{"--format", "json", "rost", "D8", "circled=2,4,6"},
                      std::vector<std::string>{"verify"}}) {
        CommandResult a = run_command(args);
        CommandResult b = run_command(args);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
    }
}
