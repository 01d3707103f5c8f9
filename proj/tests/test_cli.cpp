#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lhcone/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;

    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = lhcone::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> strings(const nlohmann::json& arr) {
    std::vector<std::string> v;
    for (const auto& x : arr) v.push_back(x.get<std::string>());
    return v;
}

}  // namespace

TEST_CASE("gor on the l=3, b=9 recurrence") {
    auto r = invoke({"gor", "--seq", "rec:3,9", "--n", "7"});
    CHECK(r.code == 1);
    const auto j = r.json();
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "gor");
    CHECK(j["gorenstein"] == false);
    CHECK(j["fails_at"] == 7);
    CHECK(j["witness"] == "26491/2");

    r = invoke({"gor", "--seq", "rec:3,9", "--n", "6"});
    CHECK(r.code == 0);
    CHECK(strings(r.json()["point"]) == std::vector<std::string>{"1", "4", "25", "113", "566", "2717"});
}

TEST_CASE("gor on a matrix file") {
    const std::string path = "lhcone_cli_matrix.txt";
    {
        std::ofstream f(path);
        f << "# lecture hall rows for (1,3,5,7)\n1 0 0 0\n-3 1 0 0\n0 -5/3 1 0\n0 0 -7/5 1\n";
    }
    auto r = invoke({"gor", "--matrix", path});
    CHECK(r.code == 0);
    CHECK(strings(r.json()["point"]) == std::vector<std::string>{"1", "4", "7", "10"});
    std::remove(path.c_str());

    r = invoke({"gor", "--matrix", "/nonexistent/matrix"});
    CHECK(r.code == 2);
}

TEST_CASE("hstar") {
    const auto r = invoke({"hstar", "--seq", "list:1,3,5"});
    CHECK(r.code == 0);
    const auto j = r.json();
    CHECK(strings(j["coefficients"]) ==
          std::vector<std::string>{"1", "2", "4", "6", "9", "10", "11", "10", "9", "6", "4", "2", "1"});
    CHECK(j["symmetric"] == true);
    CHECK(j["value_at_one"] == "75");
}

TEST_CASE("gcd-table csv") {
    const auto r = invoke({"gcd-table", "--l", "6", "--b", "36", "--n", "24", "--format", "csv"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "n,gcd,normalizer,u_n");
    std::vector<std::string> u;
    while (std::getline(lines, line)) u.push_back(line.substr(line.rfind(',') + 1));
    CHECK(u == std::vector<std::string>{"1", "1", "2", "3", "1", "2", "1", "3", "2", "1", "1", "6",
                                        "1", "1", "2", "3", "1", "2", "1", "3", "2", "1", "1", "6"});
}

TEST_CASE("profile, n0 and classify") {
    auto r = invoke({"profile", "--l", "90", "--b", "-756"});
    CHECK(r.code == 0);
    CHECK(r.json()["sigma"] == "3");

    r = invoke({"n0", "--l", "1", "--b", "1"});
    CHECK(r.code == 0);
    CHECK(r.json()["n0"] == 4);

    r = invoke({"classify", "--seq", "list:1,3,2,1,3,2"});
    CHECK(r.code == 0);
    CHECK(r.json()["u_generated"] == true);
    CHECK(strings(r.json()["u"]) == std::vector<std::string>{"4", "1", "2", "5", "1"});

    r = invoke({"classify", "--seq", "rec:1,1", "--n", "5"});
    CHECK(r.code == 0);
    const auto j = r.json();
    CHECK(j["gorenstein"] == false);
    CHECK(j["recurrence"]["first_failure"] == 5);
    CHECK(j["recurrence"]["threshold_confirmed"] == true);
}

TEST_CASE("series, numerator, product, crosscheck") {
    auto r = invoke({"series", "--seq", "list:1,2", "--m", "6"});
    CHECK(strings(r.json()["coefficients"]) == std::vector<std::string>{"1", "1", "1", "2", "2", "2", "3"});

    r = invoke({"numerator", "--seq", "list:1,3,5,7"});
    CHECK(r.code == 0);
    CHECK(r.json()["palindromic"] == true);
    CHECK(r.json()["coefficients"].size() == 29);

    r = invoke({"product", "--seq", "kl:3,3", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(strings(r.json()["exponents"]) == std::vector<std::string>{"1", "4", "11"});
    CHECK(r.json()["matches_claim"] == true);

    r = invoke({"product", "--seq", "list:1,3,5,7"});
    CHECK(r.code == 1);
    CHECK(r.json()["product_form"] == false);

    r = invoke({"crosscheck", "--seq", "list:1,1,2,3,5"});
    CHECK(r.code == 0);
    CHECK(r.json()["agree"] == true);
    CHECK(r.json()["gorenstein"] == false);
}

TEST_CASE("parameter shorthands and Ehrhart counts") {
    auto r = invoke({"product", "--k", "2", "--l", "3", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(strings(r.json()["exponents"]) == std::vector<std::string>{"1", "4", "7", "17"});

    r = invoke({"gor", "--l", "1", "--b", "1", "--n", "5"});
    CHECK(r.code == 1);
    CHECK(r.json()["witness"] == "41/3");

    r = invoke({"hstar", "--seq", "list:1,2", "--t", "1"});
    CHECK(strings(r.json()["ehrhart_counts"]) == std::vector<std::string>{"1", "2"});
}

TEST_CASE("text output") {
    const auto r = invoke({"gor", "--seq", "rec:3,9", "--n", "7", "--format", "text"});
    CHECK(r.code == 1);
    CHECK(r.out.find("witness: 26491/2\n") != std::string::npos);
}

TEST_CASE("errors and exit codes") {
    auto r = invoke({"gor", "--seq", "bogus:1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("position 0") != std::string::npos);

    r = invoke({"gor", "--seq", "rec:3,x"});
    CHECK(r.code == 2);
    CHECK(r.err.find("position 6") != std::string::npos);

    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"gor"}).code == 2);
    CHECK(invoke({"gor", "--seq", "rec:2,-2"}).code == 2);
    CHECK(invoke({"gor", "--seq", "rec:3,9", "--format", "xml"}).code == 2);

    r = invoke({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("gcd-table") != std::string::npos);

    setenv("LHCONE_BUDGET", "10", 1);
    r = invoke({"numerator", "--seq", "list:1,3,5,7"});
    unsetenv("LHCONE_BUDGET");
    CHECK(r.code == 3);
    CHECK(r.out.empty());
}

TEST_CASE("output is byte-deterministic") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"classify", "--seq", "rec:90,-756", "--n", "8"},
             {"hstar", "--seq", "list:1,3,5", "--format", "csv"},
             {"gcd-table", "--l", "90", "--b", "-756", "--n", "24", "--format", "text"}}) {
        const auto a = invoke(args);
        const auto b = invoke(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}
