// End-to-end tests of the installed command-line surface. The binary path
// arrives via CONSTEL_BIN; commands run through popen so exit codes and
// stdout are observed exactly as a shell user would see them.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string binary_path() {
    const char* bin = std::getenv("CONSTEL_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "CONSTEL_BIN must point at the CLI binary");
    return bin;
}

RunResult run_cmd(const std::string& full_cmd) {
    FILE* pipe = popen(full_cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf{};
    size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

// quiet=true drops stderr, for cases where an error message is expected.
RunResult run(const std::string& args, bool quiet = false) {
    std::string cmd = binary_path() + " " + args;
    if (quiet) cmd += " 2>/dev/null";
    return run_cmd(cmd);
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t nl = text.find('\n', pos);
        if (nl == std::string::npos) {
            out.push_back(text.substr(pos));
            break;
        }
        out.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return out;
}

struct TempConfig {
    std::string path;
    explicit TempConfig(const std::string& name, const std::string& body) : path(name) {
        std::ofstream f(path);
        f << body;
    }
    ~TempConfig() { std::remove(path.c_str()); }
};

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("classify emits one jsonl record") {
    auto res = run("classify 3 7 --format jsonl");
    CHECK(res.exit_code == 0);
    CHECK(res.out ==
          "{\"kind\":\"twin\",\"p\":3,\"q\":7,\"distance\":4,\"class\":\"II\","
          "\"special\":true,\"singlet\":true,\"rail_hi\":1}\n");

    res = run("classify 7 11 --format jsonl");
    CHECK(res.exit_code == 0);
    CHECK(res.out ==
          "{\"kind\":\"twin\",\"p\":7,\"q\":11,\"distance\":4,\"class\":\"II\",\"a\":2,"
          "\"special\":false,\"singlet\":false,\"rail_lo\":1,\"m\":1,\"step\":1,\"rail_hi\":-1}\n");
}

TEST_CASE("classify default table output") {
    auto res = run("classify 5 7");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("class=I") != std::string::npos);
    CHECK(res.out.find("a=3") != std::string::npos);
}

TEST_CASE("usage and constraint errors map to distinct exit codes") {
    CHECK(run("classify 3", true).exit_code == 2);           // missing positional
    CHECK(run("classify 9 15", true).exit_code == 3);        // composite members
    CHECK(run("classify 3 7 --bogus", true).exit_code == 2); // unknown flag
    CHECK(run("frobnicate", true).exit_code == 2);           // unknown subcommand
    CHECK(run("", true).exit_code == 2);                     // subcommand required
    CHECK(run("search --gaps 3,5 --to 100", true).exit_code == 2); // odd distances
    CHECK(run("search --gaps 0 --to 100", true).exit_code == 2);
    CHECK(run("search --gaps 2, --to 100", true).exit_code == 2);  // trailing comma
    CHECK(run("pattern --gaps x", true).exit_code == 2);
    CHECK(run("pattern --gaps 2 --format yaml", true).exit_code == 2);
    CHECK(run("twins --half-distance 0 --a-max 5", true).exit_code == 3);
    CHECK(run("verify --gaps 6,6 --upto 1000", true).exit_code == 3); // admissible
    CHECK(run("min-distance --prime 4 --d-max 10", true).exit_code == 3);
}

TEST_CASE("pattern reports the analysis then the surviving tuples") {
    auto res = run("pattern --gaps 2,2 --format jsonl");
    CHECK(res.exit_code == 0);
    auto lines = lines_of(res.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] ==
          "{\"kind\":\"pattern\",\"distances\":[2,2],\"status\":\"anchored\","
          "\"anchors\":[{\"q\":3,\"options\":[{\"position\":0,\"base\":3}]}],\"candidates\":[3]}");
    CHECK(lines[1] ==
          "{\"kind\":\"triplet\",\"base\":3,\"elements\":[3,5,7],\"distances\":[2,2],"
          "\"classes\":[\"I\",\"I\"]}");

    res = run("pattern --gaps 6,6 --format jsonl");
    CHECK(lines_of(res.out).size() == 1); // admissible: no candidate tuples
    CHECK(res.out.find("\"status\":\"admissible\"") != std::string::npos);

    res = run("pattern --gaps 6,2,2 --format jsonl");
    CHECK(res.out.find("\"status\":\"blocked\"") != std::string::npos);
    CHECK(res.out.find("\"witness_q\":3") != std::string::npos);
}

TEST_CASE("pattern csv interleaves per-kind headers") {
    auto res = run("pattern --gaps 2,2 --format csv");
    CHECK(res.exit_code == 0);
    auto lines = lines_of(res.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "kind,distances,status,witness_q,candidates");
    CHECK(lines[1] == "pattern,2 2,anchored,,3");
    CHECK(lines[2] == "kind,base,elements,distances,classes");
    CHECK(lines[3] == "triplet,3,3 5 7,2 2,I I");
}

TEST_CASE("search emits twin records for pair signatures") {
    auto res = run("search --gaps 2 --to 31 --format jsonl");
    CHECK(res.exit_code == 0);
    auto lines = lines_of(res.out);
    REQUIRE(lines.size() == 5);
    std::vector<std::string> expect_p = {"3", "5", "11", "17", "29"};
    for (size_t i = 0; i < lines.size(); ++i) {
        CHECK(lines[i].find("\"kind\":\"twin\"") != std::string::npos);
        CHECK(lines[i].find("\"p\":" + expect_p[i] + ",") != std::string::npos);
    }
}

TEST_CASE("search emits multiplet records for longer signatures") {
    auto res = run("search --gaps 6,6,6 --from 3 --to 700 --format jsonl");
    CHECK(res.exit_code == 0);
    std::string expected;
    for (const char* base : {"5", "11", "41", "61", "251", "601", "641"}) {
        uint64_t b = std::stoull(base);
        expected += "{\"kind\":\"multiplet\",\"base\":" + std::string(base) + ",\"elements\":[" +
                    std::to_string(b) + "," + std::to_string(b + 6) + "," + std::to_string(b + 12) +
                    "," + std::to_string(b + 18) +
                    "],\"distances\":[6,6,6],\"classes\":[\"I\",\"I\",\"I\"]}\n";
    }
    CHECK(res.out == expected);
}

TEST_CASE("search output is byte-identical across job counts") {
    TempConfig cfg("cli_jobs_config.cfg", "segment_slots=4096\n");
    std::string common = "search --gaps 6,6,6 --from 3 --to 100000 --format jsonl --config " + cfg.path;
    auto one = run(common + " --jobs 1");
    auto eight = run(common + " --jobs 8");
    CHECK(one.exit_code == 0);
    CHECK(eight.exit_code == 0);
    CHECK(one.out == eight.out);
    CHECK(!one.out.empty());
}

TEST_CASE("special lists pairs in csv") {
    auto res = run("special --d-max 8 --format csv");
    CHECK(res.exit_code == 0);
    auto lines = lines_of(res.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "kind,p,q,distance");
    CHECK(lines[1] == "special,3,7,4");
    CHECK(lines[2] == "special,3,11,8");
    CHECK(lines[3] == "special,3,19,16");
}

TEST_CASE("twins enumerates parameters in csv") {
    auto res = run("twins --half-distance 5 --a-max 18 --format csv");
    CHECK(res.exit_code == 0);
    auto lines = lines_of(res.out);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "kind,p,q,distance,class,a,special,singlet,rail_lo,rail_hi,m,step");
    std::vector<std::string> expect_a = {"4", "6", "9", "12", "18"};
    for (size_t i = 0; i < expect_a.size(); ++i) {
        // Column 6 is a.
        std::string row = lines[i + 1];
        size_t pos = 0;
        for (int field = 0; field < 5; ++field) pos = row.find(',', pos) + 1;
        CHECK(row.substr(pos, row.find(',', pos) - pos) == expect_a[i]);
    }
}

TEST_CASE("ap finds progressions") {
    auto res = run("ap --length 5 --half-step 3 --to 10 --format jsonl");
    CHECK(res.exit_code == 0);
    auto lines = lines_of(res.out);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0].find("\"base\":5") != std::string::npos);
    CHECK(lines[0].find("\"elements\":[5,11,17,23,29]") != std::string::npos);
}

TEST_CASE("count reports cumulative buckets") {
    auto res = run("count --gaps 2 --upto 100 --format jsonl");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "{\"kind\":\"count\",\"distances\":[2],\"upto\":100,\"count\":8}\n");

    res = run("count --gaps 2 --upto 100 --buckets 4 --format csv");
    auto lines = lines_of(res.out);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "kind,distances,upto,count");
    CHECK(lines[1] == "count,2,27,4");
    CHECK(lines[2] == "count,2,51,6");
    CHECK(lines[3] == "count,2,75,8");
    CHECK(lines[4] == "count,2,100,8");
}

TEST_CASE("verify confirms exceptional signatures") {
    auto res = run("verify --gaps 2,2 --upto 10000 --format jsonl");
    CHECK(res.exit_code == 0);
    CHECK(res.out ==
          "{\"kind\":\"verify\",\"distances\":[2,2],\"upto\":10000,\"status\":\"anchored\","
          "\"violations\":0,\"ok\":true}\n");

    res = run("verify --gaps 6,2,2 --upto 10000 --format jsonl");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"status\":\"blocked\"") != std::string::npos);
    CHECK(res.out.find("\"ok\":true") != std::string::npos);
}

TEST_CASE("min-distance emits the tuple or nothing") {
    auto res = run("min-distance --prime 7 --d-max 100 --format jsonl");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"base\":7") != std::string::npos);
    CHECK(res.out.find("\"elements\":[7,157,307,457,607,757,907]") != std::string::npos);

    res = run("min-distance --prime 11 --d-max 10", true);
    CHECK(res.exit_code == 0);
    CHECK(res.out.empty());
}

TEST_CASE("config file sets defaults and flags override") {
    TempConfig cfg("cli_format_config.cfg", "# defaults for tests\nformat=jsonl\n");
    auto res = run("count --gaps 2 --upto 100 --config " + cfg.path);
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"kind\":\"count\"") != std::string::npos);

    res = run("count --gaps 2 --upto 100 --config " + cfg.path + " --format csv");
    CHECK(res.exit_code == 0);
    CHECK(lines_of(res.out)[0] == "kind,distances,upto,count");

    res = run_cmd("CONSTEL_CONFIG=" + cfg.path + " " + binary_path() + " count --gaps 2 --upto 100");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"kind\":\"count\"") != std::string::npos);
}

TEST_CASE("config file errors are usage errors") {
    TempConfig bad("cli_bad_config.cfg", "bogus=1\n");
    CHECK(run("count --gaps 2 --upto 100 --config " + bad.path, true).exit_code == 2);

    TempConfig malformed("cli_malformed_config.cfg", "segment_slots\n");
    CHECK(run("count --gaps 2 --upto 100 --config " + malformed.path, true).exit_code == 2);

    CHECK(run("count --gaps 2 --upto 100 --config /does/not/exist.cfg", true).exit_code == 2);

    TempConfig fmt("cli_badfmt_config.cfg", "format=xml\n");
    CHECK(run("count --gaps 2 --upto 100 --config " + fmt.path, true).exit_code == 2);
}

TEST_CASE("scan_cap from config is enforced") {
    TempConfig cfg("cli_cap_config.cfg", "scan_cap=1000\n");
    CHECK(run("search --gaps 2 --to 2000 --config " + cfg.path, true).exit_code == 3);
    CHECK(run("search --gaps 2 --to 900 --config " + cfg.path).exit_code == 0);
}

TEST_SUITE_END();
