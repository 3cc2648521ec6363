#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ucr/cli.hpp"

using namespace ucr;

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("report JSON round trips") {
    for (auto [d, n] : {std::pair{2, 1}, std::pair{2, 4}, std::pair{2, 5}, std::pair{3, 4}}) {
        auto report = decomposition_report(d, n);
        auto summary = summarize(report);
        CHECK(parse_report_json(report_to_json(report)) == summary);
        CHECK(parse_report_json(report_to_json(report).dump()) == summary);
    }

    SECTION("schema is stable") {
        auto j = report_to_json(decomposition_report(2, 1));
        CHECK(j.dump() == "{\"d\":2,\"n\":1,\"blocks\":[{\"lambda\":[1],\"dim\":1,\"mult\":2}],"
                          "\"dimension_check\":2,\"commutant_dim\":1,\"interaction_dim\":4,"
                          "\"largest_full_matrix\":1}");
    }

    SECTION("schema violations are reported") {
        CHECK_THROWS_AS(parse_report_json(std::string("{\"d\":2}")), std::invalid_argument);
        CHECK_THROWS_AS(parse_report_json(ordered_json{{"d", 2}, {"n", "four"}}),
                        std::invalid_argument);
    }
}

TEST_CASE("decompose subcommand") {
    SECTION("json output parses back to the in-memory report") {
        auto r = run_cli({"decompose", "--d", "2", "--n", "4", "--output", "json"});
        REQUIRE(r.code == 0);
        CHECK(r.err.empty());
        auto parsed = parse_report_json(r.out);
        CHECK(parsed == summarize(decomposition_report(2, 4)));
        CHECK(parsed.blocks.size() == 3);
        CHECK(parsed.dimension_check == 16);
    }

    SECTION("four-letter four-site block list") {
        auto r = run_cli({"decompose", "--d", "3", "--n", "4", "--output", "json"});
        REQUIRE(r.code == 0);
        auto parsed = parse_report_json(r.out);
        REQUIRE(parsed.blocks.size() == 4);
        CHECK(parsed.blocks[0].lambda == std::vector<int>{4});
        CHECK(parsed.blocks[0].dim == 1);
        CHECK(parsed.blocks[0].mult == 15);
        CHECK(parsed.blocks[3].lambda == std::vector<int>{2, 1, 1});
        CHECK(parsed.blocks[3].dim == 3);
        CHECK(parsed.blocks[3].mult == 3);
        CHECK(parsed.largest_full_matrix == 3);
        CHECK(parsed.dimension_check == 81);
    }

    SECTION("json output is deterministic") {
        auto a = run_cli({"decompose", "--d", "2", "--n", "5", "--output", "json"});
        auto b = run_cli({"decompose", "--d", "2", "--n", "5", "--output", "json"});
        CHECK(a.out == b.out);
    }

    SECTION("text output is a table") {
        auto r = run_cli({"decompose", "--d", "2", "--n", "4"});
        REQUIRE(r.code == 0);
        CHECK(r.out.find("(3,1)") != std::string::npos);
        CHECK(r.out.find("dimension check") != std::string::npos);
        CHECK(r.out.find("16") != std::string::npos);
    }

    SECTION("resource cap exits with code 3") {
        auto r = run_cli({"decompose", "--d", "2", "--n", "999"});
        CHECK(r.code == 3);
        CHECK(r.err.find("cap") != std::string::npos);
        CHECK(r.out.empty());
    }

    SECTION("state cap honors the environment override") {
        setenv("UCR_STATE_CAP", "16", 1);
        auto r = run_cli({"decompose", "--d", "2", "--n", "5"});
        unsetenv("UCR_STATE_CAP");
        CHECK(r.code == 3);
        CHECK(run_cli({"decompose", "--d", "2", "--n", "5"}).code == 0);
    }

    SECTION("usage errors exit with code 2") {
        CHECK(run_cli({"decompose", "--d", "2"}).code == 2);
        CHECK(run_cli({"decompose", "--d", "2", "--n", "4", "--bogus", "1"}).code == 2);
        CHECK(run_cli({"decompose", "--d", "two", "--n", "4"}).code == 2);
        CHECK(run_cli({"decompose", "--d", "2", "--n", "4", "--output", "xml"}).code == 2);
        CHECK(run_cli({"decompose", "--d", "2", "--n"}).code == 2);
    }
}

TEST_CASE("tableaux subcommand") {
    SECTION("standard listing") {
        auto r = run_cli({"tableaux", "--lambda", "2,1"});
        REQUIRE(r.code == 0);
        CHECK(r.out.find("2 standard tableaux") != std::string::npos);
        CHECK(r.out.find("1 2 / 3") != std::string::npos);
        CHECK(r.out.find("1 3 / 2") != std::string::npos);
    }

    SECTION("semistandard listing with content") {
        auto r = run_cli({"tableaux", "--lambda", "2,1", "--mu", "1,1,1", "--output", "json"});
        REQUIRE(r.code == 0);
        auto j = ordered_json::parse(r.out);
        CHECK(j["lambda"] == ordered_json::array({2, 1}));
        CHECK(j["dim"] == 2);
        CHECK(j["standard"].size() == 2);
        CHECK(j["kostka"] == 2);
        CHECK(j["semistandard"].size() == 2);
        CHECK(j["semistandard"][0] == ordered_json::parse("[[0,1],[2]]"));
    }

    SECTION("content with repeats") {
        auto r = run_cli({"tableaux", "--lambda", "2,2", "--mu", "2,1,1", "--output", "json"});
        REQUIRE(r.code == 0);
        auto j = ordered_json::parse(r.out);
        CHECK(j["kostka"] == 1);
        CHECK(j["semistandard"][0] == ordered_json::parse("[[0,0],[1,2]]"));
    }

    SECTION("oversized listings are refused") {
        auto r = run_cli({"tableaux", "--lambda", "5,4,3,2,1"});
        CHECK(r.code == 3);
        CHECK(r.err.find("cap") != std::string::npos);
    }

    SECTION("bad shapes exit with code 2") {
        CHECK(run_cli({"tableaux", "--lambda", "2,3"}).code == 2);
        CHECK(run_cli({"tableaux", "--lambda", "0"}).code == 2);
        CHECK(run_cli({"tableaux"}).code == 2);
    }
}

TEST_CASE("verify subcommand") {
    auto r = run_cli({"verify", "--suite", "small"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("[ OK ]") != std::string::npos);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
    CHECK(r.out.find("8 of 8 checks passed") != std::string::npos);

    SECTION("json shape") {
        auto j = ordered_json::parse(run_cli({"verify", "--suite", "small", "--output", "json"}).out);
        CHECK(j["suite"] == "small");
        CHECK(j["pass"] == true);
        REQUIRE(j["reports"].size() == 8);
        CHECK(j["reports"][0]["pass"] == true);
        CHECK(j["reports"][0]["name"].get<std::string>().find("commutant") != std::string::npos);
    }

    SECTION("bad suite name") {
        CHECK(run_cli({"verify", "--suite", "medium"}).code == 2);
    }
}

TEST_CASE("simulate subcommand") {
    SECTION("fixed points of the default channel") {
        auto r = run_cli({"simulate", "--check", "fixed-points", "--d", "2", "--n", "3",
                          "--output", "json"});
        REQUIRE(r.code == 0);
        auto j = ordered_json::parse(r.out);
        CHECK(j["pass"] == true);
        CHECK(j["residual"].get<double>() <= 1e-9);
    }

    SECTION("an impossible tolerance fails with exit code 1") {
        auto r = run_cli({"simulate", "--check", "fixed-points", "--d", "2", "--n", "2",
                          "--tol", "1e-300"});
        CHECK(r.code == 1);
        CHECK(r.out.find("FAILED") != std::string::npos);
    }

    SECTION("aliasing angles warn on stderr") {
        auto r = run_cli({"simulate", "--check", "fixed-points", "--d", "2", "--n", "2",
                          "--angles", "3.14159265358979,0.31,0.33"});
        CHECK(r.code == 0);
        CHECK(r.err.find("warning") != std::string::npos);
    }

    SECTION("round trip picks the largest block by default") {
        auto r = run_cli({"simulate", "--check", "round-trip", "--d", "2", "--n", "4",
                          "--output", "json"});
        REQUIRE(r.code == 0);
        auto j = ordered_json::parse(r.out);
        CHECK(j["lambda"] == ordered_json::array({3, 1}));
        CHECK(j["logical_dim"] == 3);
        CHECK(j["ancilla_dim"] == 3);
        CHECK(j["fidelity_after_1"].get<double>() >= 1.0 - 1e-9);
        CHECK(j["fidelity_after_10"].get<double>() >= 1.0 - 1e-9);
        CHECK(j["pass"] == true);
    }

    SECTION("round trip with an explicit block") {
        auto r = run_cli({"simulate", "--check", "round-trip", "--d", "2", "--n", "4",
                          "--lambda", "2,2", "--output", "json"});
        REQUIRE(r.code == 0);
        auto j = ordered_json::parse(r.out);
        CHECK(j["logical_dim"] == 2);
        CHECK(j["ancilla_dim"] == 1);
        CHECK(j["pass"] == true);
    }

    SECTION("generators from a file") {
        const char* path = "cli_test_generators.txt";
        {
            std::ofstream f(path);
            f << "1 0\n0 -1\n";
            f << "0 1\n1 0\n";
            f << "0 -1i\n1i 0\n";
        }
        auto r = run_cli({"simulate", "--check", "fixed-points", "--d", "2", "--n", "3",
                          "--generators", path});
        std::remove(path);
        REQUIRE(r.code == 0);
        CHECK(r.out.find("ok") != std::string::npos);
    }

    SECTION("usage errors") {
        CHECK(run_cli({"simulate", "--check", "spin"}).code == 2);
        CHECK(run_cli({"simulate"}).code == 2);
        CHECK(run_cli({"simulate", "--check", "fixed-points", "--generators", "pauli",
                       "--d", "3"}).code == 2);
        CHECK(run_cli({"simulate", "--check", "fixed-points", "--angles", "0.1"}).code == 2);
        CHECK(run_cli({"simulate", "--check", "fixed-points", "--generators",
                       "no_such_file.txt"}).code == 2);
    }
}

TEST_CASE("encode-demo subcommand") {
    auto r = run_cli({"encode-demo", "--lambda", "2,1,1", "--d", "3", "--n", "4",
                      "--output", "json"});
    REQUIRE(r.code == 0);
    auto j = ordered_json::parse(r.out);
    CHECK(j["logical_dim"] == 3);
    CHECK(j["ancilla_dim"] == 3);
    CHECK(j["fidelity"].get<double>() >= 1.0 - 1e-9);
    CHECK(j["leakage"].get<double>() < 1e-8);
    CHECK(j["pass"] == true);

    SECTION("text narrative") {
        auto t = run_cli({"encode-demo", "--lambda", "2,2", "--d", "2", "--n", "4"});
        REQUIRE(t.code == 0);
        CHECK(t.out.find("logical dimension 2") != std::string::npos);
        CHECK(t.out.find("ok") != std::string::npos);
    }

    SECTION("absent blocks exit with code 2") {
        CHECK(run_cli({"encode-demo", "--lambda", "1,1,1,1", "--d", "3", "--n", "4"}).code == 2);
    }
}

TEST_CASE("top-level dispatch") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({}).err.find("usage") != std::string::npos);
    CHECK(run_cli({"frobnicate"}).code == 2);

    auto help = run_cli({"help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("usage") != std::string::npos);
    CHECK(run_cli({"--help"}).code == 0);
}
