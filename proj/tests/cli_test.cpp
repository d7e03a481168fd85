#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "wfc/cli.hpp"

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int status = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = wfc::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

const std::string kFixtures = WFC_FIXTURES_DIR;

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("wordcount over the two-document fixture emits the golden table") {
    const auto result =
        run_cli({"wordcount", "--input", kFixtures + "/two-docs", "--workers", "2",
                 "--format", "tsv"});
    CHECK(result.status == 0);
    CHECK(result.err.empty());
    const std::string expected =
        "mapreduce\t2\t0.166666666667\n"
        "test\t2\t0.166666666667\n"
        "to\t2\t0.166666666667\n"
        "a\t1\t0.0833333333333\n"
        "algorithm\t1\t0.0833333333333\n"
        "cool\t1\t0.0833333333333\n"
        "i\t1\t0.0833333333333\n"
        "is\t1\t0.0833333333333\n"
        "want\t1\t0.0833333333333\n";
    CHECK(result.out == expected);
    CHECK(lines_of(result.out).size() == 9);
}

TEST_CASE("wordcount output is byte-identical across invocations") {
    const std::vector<std::string> args{"wordcount", "--input", kFixtures + "/two-docs",
                                        "--workers", "4"};
    CHECK(run_cli(args).out == run_cli(args).out);
}

TEST_CASE("wordcount json matches the counts") {
    const auto result = run_cli(
        {"wordcount", "--input", kFixtures + "/two-docs", "--workers", "2", "--format", "json"});
    CHECK(result.status == 0);
    const auto doc = nlohmann::json::parse(result.out);
    REQUIRE(doc.is_array());
    CHECK(doc.size() == 9);
    CHECK(doc[0]["word"] == "mapreduce");
    CHECK(doc[0]["count"] == 2);
}

TEST_CASE("wordcount rejects zero workers as a usage error") {
    const auto result =
        run_cli({"wordcount", "--input", kFixtures + "/two-docs", "--workers", "0"});
    CHECK(result.status == 2);
    CHECK(result.out.empty());
    CHECK(result.err.find("error") != std::string::npos);
    CHECK(lines_of(result.err).size() == 1);
}

TEST_CASE("wordcount of an empty directory prints nothing and succeeds") {
    const fs::path dir = fs::temp_directory_path() / ("wfc_cli_empty_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const auto result = run_cli({"wordcount", "--input", dir.string()});
    fs::remove_all(dir);
    CHECK(result.status == 0);
    CHECK(result.out.empty());
}

TEST_CASE("missing input directory is a runtime error") {
    const auto result = run_cli({"wordcount", "--input", "/nonexistent/wfc/dir"});
    CHECK(result.status == 1);
    CHECK(lines_of(result.err).size() == 1);
}

TEST_CASE("unknown flags are rejected") {
    CHECK(run_cli({"wordcount", "--input", kFixtures + "/two-docs", "--frobnicate"}).status == 2);
    CHECK(run_cli({"nosuchcommand"}).status == 2);
    CHECK(run_cli({}).status == 2);
}

TEST_CASE("timings go to the error stream, not the table") {
    const auto result = run_cli(
        {"wordcount", "--input", kFixtures + "/two-docs", "--workers", "2", "--timings"});
    CHECK(result.status == 0);
    CHECK(result.out.find("timing") == std::string::npos);
    for (const char* stage : {"map", "sort", "encode", "exchange", "reduce", "repair", "total"}) {
        CHECK(result.err.find(std::string("timing\t") + stage) != std::string::npos);
    }
}

TEST_CASE("timings can be written to a file") {
    const fs::path file =
        fs::temp_directory_path() / ("wfc_cli_timings_" + std::to_string(::getpid()) + ".tsv");
    fs::remove(file);
    const auto result = run_cli({"wordcount", "--input", kFixtures + "/two-docs",
                                 "--timings-out", file.string()});
    CHECK(result.status == 0);
    CHECK(result.err.empty());
    std::ifstream in(file);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str().find("timing\ttotal") != std::string::npos);
    fs::remove(file);
}

TEST_CASE("stopwords filter the table") {
    const fs::path file =
        fs::temp_directory_path() / ("wfc_cli_stop_" + std::to_string(::getpid()) + ".txt");
    {
        std::ofstream out(file);
        out << "mapreduce\nto\n";
    }
    const auto result = run_cli({"wordcount", "--input", kFixtures + "/two-docs",
                                 "--stopwords", file.string()});
    fs::remove(file);
    CHECK(result.status == 0);
    CHECK(result.out.find("mapreduce") == std::string::npos);
    CHECK(lines_of(result.out).size() == 7);
}

TEST_CASE("bench reports runs, medians and matching scalars") {
    const auto result = run_cli({"bench", "--map", "sqrt", "--n", "20000", "--block", "128",
                                 "--workers", "2", "--repeat", "3", "--seed", "7"});
    CHECK(result.status == 0);
    const auto lines = lines_of(result.out);
    // 3 repeats x 2 engines + 2 medians + 1 speedup
    CHECK(lines.size() == 9);

    double serial_value = 0.0, blocked_value = 0.0;
    int run_lines = 0;
    for (const auto& line : lines) {
        std::istringstream in(line);
        std::string kind, engine;
        in >> kind >> engine;
        if (kind != "run") continue;
        ++run_lines;
        std::uint64_t run_idx = 0, ns = 0;
        double value = 0.0;
        in >> run_idx >> ns >> value;
        if (engine == "serial") serial_value = value;
        if (engine == "blocked") blocked_value = value;
    }
    CHECK(run_lines == 6);
    CHECK(std::abs(serial_value - blocked_value) / serial_value <= 1e-12);
}

TEST_CASE("bench values are reproducible for a fixed seed") {
    const std::vector<std::string> args{"bench", "--map", "identity", "--n", "5000",
                                        "--seed", "42", "--format", "json"};
    const auto a = nlohmann::json::parse(run_cli(args).out);
    const auto b = nlohmann::json::parse(run_cli(args).out);
    REQUIRE(a["runs"].size() == b["runs"].size());
    for (std::size_t i = 0; i < a["runs"].size(); ++i) {
        CHECK(a["runs"][i]["value"] == b["runs"][i]["value"]);
    }
}

TEST_CASE("bench altharm converges to ln 2") {
    const auto result = run_cli({"bench", "--map", "altharm", "--n", "1000000", "--repeat", "1",
                                 "--format", "json"});
    CHECK(result.status == 0);
    const auto doc = nlohmann::json::parse(result.out);
    const double value = doc["runs"][0]["value"];
    CHECK(std::abs(value - 0.6931471805599453) <= 1e-6);
}

TEST_CASE("bench rejects an unknown map kind") {
    const auto result = run_cli({"bench", "--map", "nosuch", "--n", "10"});
    CHECK(result.status == 2);
}

TEST_CASE("compare requires at least two corpora") {
    const auto result = run_cli({"compare", "--corpus", "a=" + kFixtures + "/two-docs"});
    CHECK(result.status == 2);
    CHECK(lines_of(result.err).size() == 1);
    CHECK(run_cli({"compare", "--corpus", "broken-pair"}).status == 2);
}

TEST_CASE("compare reports anti-symmetric scores for two corpora") {
    const fs::path base =
        fs::temp_directory_path() / ("wfc_cli_cmp_" + std::to_string(::getpid()));
    fs::remove_all(base);
    fs::create_directories(base / "a");
    fs::create_directories(base / "b");
    {
        std::ofstream(base / "a" / "d.txt") << "war war peace the the";
        std::ofstream(base / "b" / "d.txt") << "love peace peace the the";
    }
    const auto result = run_cli({"compare", "--corpus", "alpha=" + (base / "a").string(),
                                 "--corpus", "beta=" + (base / "b").string(),
                                 "--format", "json"});
    fs::remove_all(base);
    REQUIRE(result.status == 0);

    const auto doc = nlohmann::json::parse(result.out);
    REQUIRE(doc.size() == 2);
    std::map<std::string, double> alpha, beta;
    for (const auto& row : doc[0]["distinctive"]) alpha[row["word"]] = row["score"];
    for (const auto& row : doc[1]["distinctive"]) beta[row["word"]] = row["score"];
    REQUIRE(alpha.size() == beta.size());
    for (const auto& [word, score] : alpha) {
        CHECK(score == doctest::Approx(-beta.at(word)).epsilon(1e-12));
    }
}

TEST_CASE("every speech corpus ranks 'the' first") {
    std::vector<std::string> args{"compare", "--top", "1", "--distinct", "0"};
    for (const char* name : {"washington", "jefferson", "lincoln", "roosevelt"}) {
        args.push_back("--corpus");
        args.push_back(std::string(name) + "=" + kFixtures + "/speeches/" + name);
    }
    const auto result = run_cli(args);
    REQUIRE(result.status == 0);
    const auto lines = lines_of(result.out);
    REQUIRE(lines.size() == 4);
    for (const auto& line : lines) {
        CHECK(line.find("\ttop\tthe\t") != std::string::npos);
    }
}

TEST_CASE("the built binary behaves like the in-process runner") {
    const std::string cmd = std::string(WFC_CLI_PATH) + " wordcount --input " + kFixtures +
                            "/two-docs --workers 2 > /dev/null 2>&1";
    CHECK(std::system(cmd.c_str()) == 0);
    const std::string bad = std::string(WFC_CLI_PATH) + " wordcount --workers 0 > /dev/null 2>&1";
    const int status = std::system(bad.c_str());
    CHECK(WEXITSTATUS(status) == 2);
}
