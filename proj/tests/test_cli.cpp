#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    std::string out;
    int code = -1;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SYMREG_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Parse JSON-lines output, dropping the volatile timing field.
std::vector<json> records_of(const std::string& text) {
    std::vector<json> records;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line);
        j.erase("millis");
        records.push_back(std::move(j));
    }
    return records;
}

json golden(const std::string& name) {
    const std::string path = std::string(SYMREG_GOLDEN_DIR) + "/" + name;
    std::ifstream f(path);
    REQUIRE_MESSAGE(f.good(), "missing golden file ", path);
    json j = json::parse(f);
    j.erase("millis");
    return j;
}

void check_against_golden(const std::string& args, const std::string& golden_name, int want_code = 0) {
    RunResult r = run_cli(args);
    CHECK(r.code == want_code);
    auto records = records_of(r.out);
    REQUIRE(records.size() == 1);
    CHECK(records[0] == golden(golden_name));
}

std::filesystem::path temp_dir() {
    auto dir = std::filesystem::temp_directory_path() / "symreg_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("golden outputs for the classification commands") {
    unsetenv("SYMREG_CACHE");
    check_against_golden("degseq-classify 2,5,2,12 --json", "degseq_classify_2_5_2_12.json");
    check_against_golden("degseq-classify 1,5,6,4 --json", "degseq_classify_1_5_6_4.json");
    check_against_golden("degseq-construct 2,3,4,8 --json", "degseq_construct_2_3_4_8.json");
    check_against_golden("degseq-construct 1,5,6 --json", "degseq_construct_1_5_6.json");
    check_against_golden("triple-classify 4 15 1 --json", "triple_classify_4_15_1.json");
    check_against_golden("triple-classify 5 6 1 --json", "triple_classify_5_6_1.json");
    check_against_golden("triple-oracle 2 2 2 --json", "triple_oracle_2_2_2.json");
    check_against_golden("s22-classify 5 2 4 --json", "s22_classify_5_2_4.json");
    check_against_golden("s22-construct 14 2 1 --json", "s22_construct_14_2_1.json");
    check_against_golden("alt-classify -D 18 1,2,5 --json", "alt_classify_1_2_5_D18.json");
    check_against_golden("hilbert 2,5,2,12 --json", "hilbert_2_5_2_12.json");
    check_against_golden("degseq-verify --weights 1,2 'e1^2+e2' 'e1*e2' --json", "degseq_verify_e12.json");
}

TEST_CASE("exit codes: decided, undecided, error") {
    unsetenv("SYMREG_CACHE");
    CHECK(run_cli("degseq-classify 2,4 --json").code == 0);
    CHECK(run_cli("degseq-classify 2,3,7,9,12,20 --json").code == 2);  // open case
    CHECK(run_cli("degseq-classify 2,x --json").code == 1);
    int missing = run_cli("degseq-classify").code;  // missing argument: parser error
    CHECK(missing != 0);
    CHECK(missing != 2);
    CHECK(run_cli("triple-classify 7 30 3 --no-oracle --json").code == 2);
    CHECK(run_cli("triple-classify 7 30 1 --json").code == 0);
    CHECK(run_cli("triple-oracle 8 15 8 --max-points 10 --json").code == 2);
    CHECK(run_cli("hilbert 3,3 --json").code == 0);  // non-integral is still a decided answer
    CHECK(run_cli("s22-construct 3 1 1 --json").code == 1);  // not constructible
    // homogeneous cyclic-5: far too much reduction work for a one-step budget
    CHECK(run_cli("degseq-verify --weights 1,1,1,1,1 --max-steps 1 --json"
                  " 'x1+x2+x3+x4+x5'"
                  " 'x1*x2+x2*x3+x3*x4+x4*x5+x5*x1'"
                  " 'x1*x2*x3+x2*x3*x4+x3*x4*x5+x4*x5*x1+x5*x1*x2'"
                  " 'x1*x2*x3*x4+x2*x3*x4*x5+x3*x4*x5*x1+x4*x5*x1*x2+x5*x1*x2*x3'"
                  " 'x1*x2*x3*x4*x5'")
              .code == 2);
}

TEST_CASE("undecided triple record names the reason") {
    unsetenv("SYMREG_CACHE");
    RunResult r = run_cli("triple-classify 7 30 3 --no-oracle --json");
    CHECK(r.code == 2);
    auto records = records_of(r.out);
    REQUIRE(records.size() == 1);
    CHECK(records[0].at("status") == "undecided");
    CHECK(records[0].contains("error"));
}

TEST_CASE("human-readable mode prints key-value lines") {
    unsetenv("SYMREG_CACHE");
    RunResult r = run_cli("degseq-classify 2,5,2,12");
    CHECK(r.code == 0);
    CHECK(r.out.find("status: NotRegular") != std::string::npos);
    CHECK(r.out.find("reason: exception-family") != std::string::npos);
}

TEST_CASE("non-integral hilbert answer") {
    RunResult r = run_cli("hilbert 3,3 --json");
    auto records = records_of(r.out);
    REQUIRE(records.size() == 1);
    CHECK(records[0].at("integral") == false);
}

TEST_CASE("scan fills a cache; export and import round-trip byte for byte") {
    unsetenv("SYMREG_CACHE");
    auto dir = temp_dir();
    auto cache = dir / "scan.jsonl";
    std::filesystem::remove(cache);

    RunResult scan = run_cli("triple-scan --n 2..3 --d 2..4 --a 1..6 --cache " + cache.string() + " --json");
    CHECK(scan.code == 0);
    auto records = records_of(scan.out);
    CHECK(records.size() == 2 * 3 * 6);
    REQUIRE(std::filesystem::exists(cache));

    auto exported = dir / "export.jsonl";
    RunResult exp = run_cli("cache-export --cache " + cache.string() + " " + exported.string());
    CHECK(exp.code == 0);
    CHECK(slurp(exported) == slurp(cache));

    auto merged = dir / "merged.jsonl";
    std::filesystem::remove(merged);
    RunResult imp = run_cli("cache-import --cache " + merged.string() + " " + cache.string());
    CHECK(imp.code == 0);
    CHECK(slurp(merged) == slurp(cache));
}

TEST_CASE("rerunning a scan over a warm cache is pure lookup") {
    unsetenv("SYMREG_CACHE");
    auto dir = temp_dir();
    auto cache = dir / "warm.jsonl";
    std::filesystem::remove(cache);

    RunResult first = run_cli("triple-scan --n 2..4 --d 2..5 --a 1..8 --cache " + cache.string() + " --json");
    CHECK(first.code == 0);
    // With the point budget floored at one, any oracle call would come back
    // undecided, so identical output proves the rerun never reaches the oracle.
    RunResult second = run_cli("triple-scan --n 2..4 --d 2..5 --a 1..8 --max-points 1 --cache " +
                               cache.string() + " --json");
    CHECK(second.code == 0);
    CHECK(records_of(first.out) == records_of(second.out));
}

TEST_CASE("the cache environment variable is honored") {
    auto dir = temp_dir();
    auto cache = dir / "env.jsonl";
    std::filesystem::remove(cache);
    setenv("SYMREG_CACHE", cache.string().c_str(), 1);
    RunResult r = run_cli("triple-classify 4 15 1 --json");
    unsetenv("SYMREG_CACHE");
    CHECK(r.code == 0);
    REQUIRE(std::filesystem::exists(cache));
    CHECK(slurp(cache).find("good-gamma") != std::string::npos);
    std::filesystem::remove_all(dir);
}
