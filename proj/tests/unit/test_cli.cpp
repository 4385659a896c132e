#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "critlib_cli/cli.hpp"
#include "critlib_cli/layout.hpp"
#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = critlib::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("critlib-cli-" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path / name) << text;
        return (path / name).string();
    }
    std::string read(const std::string& name) const {
        std::ifstream in(path / name);
        return {std::istreambuf_iterator<char>(in), {}};
    }
};

const char* a4_json = R"({"rows":3,"cols":3,"entries":[["3","0","-1"],["0","3","-1"],["-1","-1","1"]]})";

}  // namespace

TEST_CASE("matrix subcommands") {
    TempDir dir;
    auto a4 = dir.write("a4.json", a4_json);
    auto id3 = dir.write("id3.txt", "1 0 0\n0 1 0\n0 0 1\n");

    auto r = run({"matrix", "critical-group", "-i", a4});
    CHECK(r.code == 0);
    CHECK(r.out == "Z/3\n");

    r = run({"matrix", "stabilize", "-i", a4, "--config", "2,2,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "stable = [2,2,0]\nfirings = 5\nsequence = 3,1,2,3,3\ncounts = [1,1,3]\n");

    r = run({"matrix", "check", "-i", id3});
    CHECK(r.code == 0);
    CHECK(r.out.find("accepted") != std::string::npos);
    CHECK(r.out.find("r = [1,1,1]") != std::string::npos);

    r = run({"--format", "json", "matrix", "recurrents", "-i", a4});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["operation"] == "matrix.recurrents");
    CHECK(j["outputs"]["recurrents"].size() == 3);

    r = run({"matrix", "burning", "-i", a4, "--b", "0,0,1"});
    CHECK(r.code == 0);
}

TEST_CASE("root subcommands") {
    auto r = run({"root", "cartan", "A1"});
    CHECK(r.code == 0);
    CHECK(r.out == "[[2]]\n");

    r = run({"root", "verify-thm1", "E6"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("E6: pass\nsuperstables {0, e1, e6}\n", 0) == 0);

    r = run({"root", "looping", "C4", "--node", "1"});
    CHECK(r.code == 0);
}

TEST_CASE("E6 configurations use the Dynkin layout") {
    // node 2 sits over node 4 in the bottom row 1 3 4 5 6
    CHECK(critlib::cli::dynkin_layout(critlib::DynkinType::parse("E6"), {1, 2, 3, 4, 5, 6}, false) ==
          "    2\n1 3 4 5 6");
    auto r = run({"root", "looping", "E6", "--node", "1"});
    REQUIRE(r.code == 0);
    const std::string first_blocks =
        "      -1\n"
        "       0\n"
        " 1  0  0  0  0\n"
        "\n"
        "       1\n"
        "      -1\n"
        " 1  0  0  0  0\n";
    CHECK(r.out.find(first_blocks) != std::string::npos);
    CHECK(critlib::cli::dynkin_layout(critlib::DynkinType::parse("A3"), {1, 0, 2}, false) == "[1,0,2]");
}

TEST_CASE("mckay subcommands") {
    auto r = run({"mckay", "critical-group", "--group", "binary-dihedral-3"});
    CHECK(r.code == 0);
    CHECK(r.out == "Z/4\n");
    r = run({"mckay", "verify-abelianization", "--group", "binary-icosahedral"});
    CHECK(r.code == 0);
    CHECK(r.out.find("K = 0") != std::string::npos);
    CHECK(r.out.find("isomorphism") != std::string::npos);
    r = run({"--format", "json", "mckay", "cayley", "--invariants", "6", "--generators", "1,2,3"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["outputs"]["arborescences"] == "114");
    CHECK(j["passed"] == true);
}

TEST_CASE("exit codes") {
    TempDir dir;
    auto a4 = dir.write("a4.json", a4_json);
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"matrix", "stabilize", "-i", a4, "--config", "2,x"}).code == 2);
    CHECK(run({"matrix", "check", "-i", (dir.path / "missing.json").string()}).code == 2);
    CHECK(run({"matrix", "check", "-i", dir.write("bad.json", "{")}).code == 2);
    CHECK(run({"root", "cartan", "A1", "--no-such-flag"}).code == 2);
    CHECK(run({"root", "cartan", "Q3"}).code == 1);
    CHECK(run({"mckay", "critical-group", "--group", "nope"}).code == 1);
    CHECK(run({"matrix", "burning", "-i", a4, "--b", "1,0,0"}).code == 1);
    auto r = run({"matrix", "check", "-i", dir.write("notz.txt", "2 1; -1 2")});
    CHECK(r.code == 1);
    CHECK(r.err.find("NotZMatrix") != std::string::npos);
}

TEST_CASE("JSON reports are deterministic") {
    TempDir dir;
    auto one = dir.path / "one.json";
    auto two = dir.path / "two.json";
    CHECK(run({"verify-all", "--only", "rootsys", "--json", one.string()}).code == 0);
    CHECK(run({"verify-all", "--only", "rootsys", "--json", two.string()}).code == 0);
    CHECK(dir.read("one.json") == dir.read("two.json"));
    CHECK(dir.read("one.json").find("seconds") == std::string::npos);

    auto a = run({"--format", "json", "mckay", "build", "--group", "A4"});
    auto b = run({"--format", "json", "mckay", "build", "--group", "A4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}
