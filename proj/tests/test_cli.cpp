#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "eulerq/report.hpp"
#include "eulerq/sequence_io.hpp"

using namespace eulerq;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

fs::path scratch_dir() {
    const auto dir = fs::temp_directory_path() / ("eqseq_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run(const std::string& args) {
    static int counter = 0;
    const auto dir = scratch_dir();
    const auto out = dir / ("out" + std::to_string(counter));
    const auto err = dir / ("err" + std::to_string(counter));
    ++counter;
    const std::string cmd = std::string(EQSEQ_PATH) + " " + args + " >" + out.string() + " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

nlohmann::json json_of(const RunResult& r) { return nlohmann::json::parse(r.out); }

} // namespace

TEST_CASE("generate prints the period and weight") {
    const auto file = scratch_dir() / "class.seq";
    const auto r = run("generate --p 3 --r 2 --kind class --I 0 --out " + file.string());
    REQUIRE(r.code == 0);
    CHECK(r.out == "period=27 weight=6\n");
    std::ifstream in(file);
    const auto seq = read_sequence(in);
    CHECK(seq.symbols() == binary_class_sequence({3, 2}, IndexSet(3, {0})).symbols());

    const auto level = run("generate --p 3 --r 2 --kind level --j 1");
    REQUIRE(level.code == 0);
    CHECK(level.out.rfind("seq 3 27 p=3 r=2 kind=level\n", 0) == 0);
    CHECK(level.err == "period=27 weight=" + std::to_string(level_sequence({3, 2}, 1).weight()) + "\n");

    const auto threshold = run("generate --p 3 --r 1 --kind threshold");
    REQUIRE(threshold.code == 0);
    CHECK(threshold.err.rfind("period=9 ", 0) == 0);
}

TEST_CASE("generate rejects bad parameters") {
    CHECK(run("generate --p 9 --r 2 --kind class --I 0").code == 2);
    CHECK(run("generate --p 3 --r 2 --kind nonsense").code == 2);
    CHECK(run("generate --p 3 --r 2 --kind class --I 3").code == 2);
    CHECK(run("frobnicate").code == 2);
}

TEST_CASE("analyze a level sequence") {
    const auto r = run("analyze --p 3 --r 2 --kind level --j 1 --format json");
    REQUIRE(r.code == 0);
    const auto j = json_of(r);
    CHECK(j["lc"] == 11);
    CHECK(j["method"] == "berlekamp_massey");
    CHECK(j["sequence"]["kind"] == "level");
}

TEST_CASE("analyze a class sequence with a k-error profile") {
    const auto r = run("analyze --p 3 --r 2 --kind class --I 0 --k-max 6 --format json");
    REQUIRE(r.code == 0);
    const auto j = json_of(r);
    CHECK(j["lc"] == 20);
    std::vector<std::uint64_t> lcs;
    for (const auto& e : j["kerror"]) {
        lcs.push_back(e["lc"]);
        CHECK(e["exact"] == true);
    }
    CHECK(lcs == std::vector<std::uint64_t>{20, 20, 20, 19, 19, 19, 0});
    CHECK(j["sequence"]["I"] == nlohmann::json::array({0}));

    const auto text = run("analyze --p 3 --r 2 --kind class --I 0 --k-max 6");
    REQUIRE(text.code == 0);
    CHECK(text.out.find("lc        20") != std::string::npos);
}

TEST_CASE("analyze reads sequence files") {
    const auto dir = scratch_dir();
    const auto zeros = dir / "zeros.seq";
    std::ofstream(zeros) << "seq 2 4 p=3 r=1 kind=custom\n0 0 0 0\n";
    const auto r = run("analyze --format json --file " + zeros.string());
    REQUIRE(r.code == 0);
    CHECK(json_of(r)["lc"] == 0);

    const auto bad = dir / "bad.seq";
    std::ofstream(bad) << "seq 2 4 p=3 r=1 kind=custom\n0 0 7 0\n";
    const auto b = run("analyze --file " + bad.string());
    CHECK(b.code == 2);
    CHECK(b.err.find("line 2") != std::string::npos);

    CHECK(run("analyze --file " + (dir / "missing.seq").string()).code == 2);
}

TEST_CASE("file round trip gives the same report as in-memory generation") {
    const auto file = scratch_dir() / "roundtrip.seq";
    REQUIRE(run("generate --p 5 --r 2 --kind class --I 0,1 --out " + file.string()).code == 0);
    const auto from_file = run("analyze --file " + file.string() + " --I 0,1 --k-max 2 --format json");
    const auto direct = run("analyze --p 5 --r 2 --kind class --I 0,1 --k-max 2 --format json");
    REQUIRE(from_file.code == 0);
    REQUIRE(direct.code == 0);
    CHECK(json_of(from_file) == json_of(direct));
    CHECK(json_of(direct)["lc"] == 100);
}

TEST_CASE("verify suites") {
    CHECK(run("verify --suite theorem-hh --p 3 --r 2").code == 0);
    CHECK(run("verify --suite lemmas --p 5 --r 2").code == 0);
    const auto refused = run("verify --suite klc --p 7 --r 2");
    CHECK(refused.code == 2);
    CHECK(refused.err.find("refused") != std::string::npos);
    CHECK(run("verify --suite no-such-suite --p 3 --r 2").code == 2);

    const auto json = run("verify --suite qrs --p 3 --r 3 --format json");
    REQUIRE(json.code == 0);
    for (const auto& c : json_of(json)) CHECK(c["status"] == "pass");
}

TEST_CASE("partition output") {
    const auto summary = run("partition --p 3 --r 2 --summary");
    REQUIRE(summary.code == 0);
    CHECK(summary.out == "sizes 6 6 6\n|P| 9\n");

    const auto full = run("partition --p 3 --r 2");
    REQUIRE(full.code == 0);
    CHECK(full.out.find("P (9): 0 3 6 9 12 15 18 21 24\n") != std::string::npos);

    const auto json = run("partition --p 5 --r 2 --summary --format json");
    REQUIRE(json.code == 0);
    CHECK(json_of(json)["sizes"] == nlohmann::json::array({20, 20, 20, 20, 20}));
}
