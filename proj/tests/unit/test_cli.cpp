#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "mfib/cli.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = mfib::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"tree"}).code == 2);                                  // missing --root
    CHECK(run_cli({"tree", "--root", "1,1,3", "--bogus"}).code == 2);    // unknown flag
    CHECK(run_cli({"tree", "--root", "1,1", "--depth", "2"}).code == 2); // malformed triple
    CHECK(run_cli({"tree", "--root", "1,3,8", "--depth", "2"}).code == 2);  // non-minimal root
    CHECK(run_cli({"tree", "--root", "1,1,3", "--format", "csv"}).code == 2);  // csv not for tree
    CHECK(run_cli({"bounds", "--format", "dot"}).code == 2);             // dot only for tree
    CHECK(run_cli({"verify", "--cmax", "10"}).code == 2);                // below precondition
    CHECK(run_cli({"audit", "--cmax", "5"}).code == 2);
    CHECK(run_cli({"solve", "--cmax", "30"}).code == 2);                 // missing --m
}

TEST_CASE("help exits 0") {
    auto r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("tree") != std::string::npos);
}

TEST_CASE("bounds csv matches the frozen appendix cells") {
    auto r = run_cli({"bounds", "--nmax", "10", "--amax", "9", "--sigfigs", "4", "--direction",
                      "down", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("0.5000") != std::string::npos);
    CHECK(r.out.find("2,0.5000,0.3333,0.2000,0.1250,0.07692,0.04761,0.02941,0.01818,0.01123\n") !=
          std::string::npos);
    auto up = run_cli({"bounds", "--nmax", "10", "--amax", "9", "--sigfigs", "4", "--direction",
                       "up", "--format", "csv"});
    REQUIRE(up.code == 0);
    CHECK(up.out.find("10,0.6181,0.3820,0.2361,0.1460,0.09018,0.05573,0.03445,0.02129,0.01316\n") !=
          std::string::npos);
}

TEST_CASE("bounds json carries the schema envelope") {
    auto r = run_cli({"bounds", "--nmax", "3", "--amax", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("\"schema_version\":1") != std::string::npos);
    CHECK(r.out.find("\"command\":\"bounds\"") != std::string::npos);
    CHECK(r.out.find("\"0.5000\"") != std::string::npos);
}

TEST_CASE("tree dot output lists the 2-tree nodes and bolds the Fibonacci branch") {
    auto r = run_cli({"tree", "--root", "1,1,3", "--depth", "4", "--format", "dot"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("digraph") != std::string::npos);
    CHECK(r.out.find("label=\"(1,55,144)\", style=bold") != std::string::npos);
    CHECK(r.out.find("label=\"(71,1701,362305)\"];") != std::string::npos);
    // fib-indices entry: (2,3,6) -> values (1,2,8)
    auto r2 = run_cli({"tree", "--root", "2,3,6", "--fib-indices", "--depth", "1",
                       "--format", "json"});
    REQUIRE(r2.code == 0);
    CHECK(r2.out.find("[\"1\",\"2\",\"8\"]") != std::string::npos);
}

TEST_CASE("solve json lists the theorem's m=21 pair") {
    auto r = run_cli({"solve", "--m", "21", "--cmax", "100", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("\"indices\":[2,3,6]") != std::string::npos);
    CHECK(r.out.find("\"indices\":[3,3,7]") != std::string::npos);
    CHECK(r.out.find("[\"1\",\"2\",\"8\"]") != std::string::npos);
    CHECK(r.out.find("[\"2\",\"2\",\"13\"]") != std::string::npos);
}

TEST_CASE("enumerate reports the two collision classes") {
    auto r = run_cli({"enumerate", "--cmax", "30", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("\"matches_classification\":true") != std::string::npos);
    CHECK(r.out.find("\"m\":\"2\"") != std::string::npos);
    CHECK(r.out.find("\"m\":\"21\"") != std::string::npos);
    auto csv = run_cli({"enumerate", "--cmax", "30", "--format", "csv"});
    CHECK(csv.out.find("21,2,2:3:6 3:3:7\n") != std::string::npos);
}

TEST_CASE("audit exits 0 with every check green") {
    auto r = run_cli({"audit", "--cmax", "25", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("AUDIT OK") != std::string::npos);
}

TEST_CASE("verify at c_max 20") {
    auto r = run_cli({"verify", "--cmax", "20"});
    CHECK(r.code == 0);
    CHECK(r.out.find("VERIFY OK") != std::string::npos);
    CHECK(r.out.find("m=2") != std::string::npos);
    CHECK(r.out.find("m=21") != std::string::npos);
}

TEST_CASE("byte-identical output across repeat runs and thread counts") {
    auto a = run_cli({"enumerate", "--cmax", "40", "--format", "json"});
    auto b = run_cli({"enumerate", "--cmax", "40", "--format", "json"});
    auto c = run_cli({"enumerate", "--cmax", "40", "--format", "json", "--threads", "3"});
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    auto a1 = run_cli({"audit", "--cmax", "25", "--format", "json"});
    auto a2 = run_cli({"audit", "--cmax", "25", "--format", "json"});
    CHECK(a1.out == a2.out);
    CHECK(a1.out.find("\"command\":\"audit\"") != std::string::npos);
}

TEST_CASE("verify json carries the envelope and pass flag") {
    auto r = run_cli({"verify", "--cmax", "21", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"schema_version\":1") != std::string::npos);
    CHECK(r.out.find("\"command\":\"verify\"") != std::string::npos);
    CHECK(r.out.find("\"pass\":true") != std::string::npos);
    CHECK(r.out.find("\"matches_classification\":true") != std::string::npos);
}

TEST_CASE("--out writes the same bytes to a file") {
    std::string path = "cli_out_test.json";
    auto direct = run_cli({"solve", "--m", "2", "--cmax", "12", "--format", "json"});
    auto filed = run_cli({"solve", "--m", "2", "--cmax", "12", "--format", "json", "--out", path});
    REQUIRE(filed.code == 0);
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == direct.out);
    std::remove(path.c_str());
}
