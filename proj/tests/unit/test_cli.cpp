#include <fstream>
#include <sstream>

#include "diagramalg_cli/cli.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"

using namespace diagramalg;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("mul prints the scaled product") {
    auto r = run({"mul", "--family", "partition", "--k", "12", "--lhs", format_diagram(fixtures::mult_d1()), "--rhs",
                  format_diagram(fixtures::mult_d2())});
    CHECK(r.code == 0);
    CHECK(r.out == "n^2 * " + format_diagram(fixtures::mult_product()) + "\n");
    auto evaluated = run({"mul", "--family", "partition", "--k", "12", "--lhs", format_diagram(fixtures::mult_d1()),
                          "--rhs", format_diagram(fixtures::mult_d2()), "--n", "3"});
    CHECK(evaluated.out == "9 * " + format_diagram(fixtures::mult_product()) + "\n");
    auto j = run({"mul", "--family", "rook", "--k", "1", "--lhs", "1 | 1'", "--rhs", "1 | 1'", "--format", "json"});
    CHECK(nlohmann::json::parse(j.out) ==
          nlohmann::json::parse(R"([{"coeff":[{"exp":1,"num":"1","den":"1"}],"diagram":{"k":1,"blocks":[[1],[2]]}}])"));
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"mul", "--family", "partition", "--k", "2"}).code == 2);
    CHECK(run({"mul", "--family", "nonsense", "--k", "2", "--lhs", "1 1' | 2 2'", "--rhs", "1 1' | 2 2'"}).code == 2);
    CHECK(run({"table", "--family", "brauer", "--k", "4", "--format", "xml"}).code == 2);
    auto missing = run({"mul", "--family", "partition", "--k", "2", "--lhs", "1 2 1'", "--rhs", "1 1' | 2 2'"});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("MissingVertex") != std::string::npos);
    CHECK(run({"mul", "--family", "brauer", "--k", "1", "--lhs", "1 | 1'", "--rhs", "1 1'"}).code == 1);
    CHECK(run({"mul", "--family", "partition", "--k", "1", "--lhs", "1 1'", "--rhs", "1 1'", "--n", "x"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("table csv reproduces the B4 matrix") {
    auto r = run({"table", "--family", "brauer", "--k", "4", "--format", "csv"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "lambda*,[],[2],\"[1,1]\",[4],\"[3,1]\",\"[2,2]\",\"[2,1,1]\",\"[1,1,1,1]\"");
    const auto expected = fixtures::corrected_table(Family::Brauer);
    for (const auto& row : expected) {
        std::string line;
        REQUIRE(std::getline(lines, line));
        std::string cells = line.substr(line.rfind('"') == std::string::npos ? line.find(',') : line.rfind('"') + 1);
        std::string want;
        for (const auto& x : row) want += "," + to_string(x);
        CHECK(cells == want);
    }
}

TEST_CASE("table json with factorisation") {
    auto r = run({"table", "--family", "partition", "--k", "3", "--format", "json", "--factor"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["values"][1] == nlohmann::json({0, 1, 1, 3, 1, 4, 10}));
    CHECK(j["factor"]["f"][3] == nlohmann::json({0, 0, 0, 1, 0, 1, 6}));
    CHECK(j["cols"][0]["s"] == 3);
}

TEST_CASE("verify suites report OK") {
    for (const auto& suite : {"ring-axioms", "module-axiom", "basis-equivalence", "wedderburn",
                              "fixedpoint-vs-formula", "table-regression", "determinant"}) {
        auto r = run({"verify", "--suite", suite, "--family", "motzkin", "--k", "3"});
        CHECK_MESSAGE(r.code == 0, suite, r.out, r.err);
        CHECK(r.out.rfind("OK ", 0) == 0);
    }
    auto w = run({"verify", "--suite", "wedderburn", "--family", "motzkin", "--k", "4"});
    CHECK(w.code == 0);
    CHECK(w.out == "OK wedderburn motzkin k=4\n  sum of squared dimensions 323, basis size 323\n");
    auto t = run({"verify", "--suite", "table-regression", "--family", "partition", "--k", "3"});
    CHECK(t.code == 0);
    CHECK(t.out.find("published table and F factor reproduced") != std::string::npos);
}

TEST_CASE("other subcommands") {
    auto b = run({"basis", "--family", "temperley-lieb", "--k", "3"});
    CHECK(b.code == 0);
    CHECK(std::count(b.out.begin(), b.out.end(), '\n') == 5);
    auto d = run({"dims", "--family", "partition", "--k", "3", "--n", "6"});
    CHECK(d.code == 0);
    CHECK(d.out.find("lambda*=[2,1] lambda=[3,2,1] dim=") != std::string::npos);
    CHECK(d.out.find("sum of squares=203") != std::string::npos);
    CHECK(run({"dims", "--family", "partition", "--k", "3", "--n", "5"}).code == 1);
    auto s = run({"symdiag", "--family", "partition", "--k", "3", "--m", "1"});
    CHECK(std::count(s.out.begin(), s.out.end(), '\n') == 10);
    auto t = run({"sspt", "--family", "partition", "--k", "3", "--lambda-star", "[1]", "--format", "json"});
    CHECK(nlohmann::json::parse(t.out).size() == 10);
    auto c = run({"char", "--family", "partition", "--k", "3", "--lambda-star", "[]", "--kappa", "[1,1,1]"});
    CHECK(c.out == "5\n");
    auto oracle = run({"char", "--family", "partition", "--k", "3", "--lambda-star", "[1]", "--kappa", "[2]",
                       "--method", "oracle"});
    CHECK(oracle.out == "1\n");
    auto m = run({"irrep", "--family", "partition", "--k", "2", "--lambda-star", "[1,1]", "--diagram", "1 2' | 2 1'"});
    CHECK(m.out == "[-1]\n");
    auto p = run({"irrep", "--family", "partition", "--k", "2", "--lambda-star", "[]", "--diagram", "1 1' | 2 2'"});
    CHECK(p.out == "[1, 0]\n[0, 1]\n");
    auto q = run({"irrep", "--family", "rook", "--k", "1", "--lambda-star", "[]", "--diagram", "1 | 1'"});
    CHECK(q.out == "[n]\n");
}

TEST_CASE("output to a file") {
    const std::string path = "cli_test_output.txt";
    auto r = run({"char", "--family", "rook", "--k", "3", "--lambda-star", "[1]", "--kappa", "[1,1,1]", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "3");
    std::remove(path.c_str());
}

}  // TEST_SUITE
