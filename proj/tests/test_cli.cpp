#include <doctest.h>

#include <cstdlib>
#include <set>
#include <sstream>

#include <json.hpp>

#include "freecalc/cli.hpp"

using freecalc::cli::run;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

json first_record(const Result& r)
{
    return json::parse(r.out.substr(0, r.out.find('\n')));
}

} // namespace

TEST_CASE("every registered command runs and is deterministic")
{
    std::set<std::string> tops;
    for (const auto& info : freecalc::cli::command_registry()) {
        CAPTURE(info.path);
        const auto a = call(info.example);
        CHECK(a.code == 0);
        CHECK_FALSE(a.out.empty());
        CHECK(a.out == call(info.example).out);
        tops.insert(info.path.substr(0, info.path.find(' ')));
    }
    for (const char* name : {"partitions", "transform", "st", "pr", "ito", "finite-n", "diagonal", "polys", "verify"})
        CHECK(tops.count(name) == 1);
}

TEST_CASE("kreweras output")
{
    const auto r = call({"partitions", "kreweras", "1 2|3"});
    REQUIRE(r.code == 0);
    const auto j = first_record(r);
    CHECK(j["value"] == json::parse("[[1],[2,3]]"));
    CHECK(j["command"] == "partitions kreweras");
    CHECK(j["exact"] == true);
}

TEST_CASE("finite-n symbolic output")
{
    const auto r = call({"finite-n", "1 3|2 4", "--process", "poisson", "--t", "1", "--symbolic"});
    REQUIRE(r.code == 0);
    const auto laurent = first_record(r)["value"]["laurent"];
    CHECK(laurent == json::parse(R"({"-1":"2","-2":"-1","-3":"-1"})"));
    for (const auto& [e, c] : laurent.items())
        CHECK(std::stoi(e) < 0);
}

TEST_CASE("verify orthogonality example")
{
    const auto r = call({"verify", "orthogonality", "--process", "poisson", "--t", "1", "--max-n", "5"});
    CHECK(r.code == 0);
    const auto gram = first_record(r)["value"]["gram"];
    for (std::size_t n = 0; n <= 5; ++n)
        for (std::size_t m = 0; m <= 5; ++m)
            CHECK(gram[n][m] == (n == m ? "1" : "0"));
}

TEST_CASE("transforms output rationals as strings")
{
    auto r = call({"transform", "m2c", "--values", "1,2,5,14"});
    CHECK(first_record(r)["value"] == json::parse(R"(["1","1","1","1"])"));
    r = call({"transform", "c2m", "--values", "1/2,1/2"});
    CHECK(first_record(r)["value"] == json::parse(R"(["1/2","3/4"])"));
    r = call({"transform", "s-transform", "--values", "2,0,0"});
    CHECK(first_record(r)["value"][0] == "1/2");
}

TEST_CASE("csv output")
{
    const auto r = call({"transform", "m2c", "--values", "1,2", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "command,path,value\ntransform m2c,/value/0,1\ntransform m2c,/value/1,1\n");
    const auto p = call({"polys", "brownian", "--n-min", "2", "--n-max", "2", "--format", "csv"});
    CHECK(p.out == "family,n,monomial,coefficient\nbrownian,2,1,-t\nbrownian,2,X^2,1\n");
    const auto t = call({"polys", "brownian", "--n-max", "2", "--t", "1", "--format", "text"});
    CHECK(t.out.find("psi_2   = X^2 - 1") != std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(call({}).code == 1);
    CHECK(call({"nonsense"}).code == 1);
    CHECK(call({"partitions", "kreweras", "1 2|2"}).code == 1);
    CHECK(call({"partitions", "kreweras", "1 3|2 4"}).code == 1);
    CHECK(call({"st", "1 2", "--t", "1/0"}).code == 1);
    CHECK(call({"st", "1 2", "--t", "x"}).code == 1);
    CHECK(call({"st", "1 2", "--process", "bogus"}).code == 1);
    CHECK(call({"--help"}).code == 0);

    unsetenv("NC_FREECALC_CAP_OVERRIDE");
    const auto cap = call({"partitions", "enumerate", "--n", "13", "--lattice", "all", "--count"});
    CHECK(cap.code == 2);
    CHECK_FALSE(cap.err.empty());
    CHECK(call({"polys", "general", "--n-max", "13"}).code == 2);

    CHECK(call({"polys", "compound", "--n-max", "2"}).code == 1);
}

TEST_CASE("verification failure exit code")
{
    // The non-centered free Poisson Gram matrix is not diagonal.
    CHECK(call({"polys", "general", "--n-max", "2", "--check-orthogonality", "--process", "poisson"}).code == 3);
    CHECK(call({"polys", "general", "--n-max", "2", "--check-orthogonality", "--process", "poisson", "--centered"})
              .code == 0);
    // psi_3 psi_3 needs cumulants up to order 6.
    CHECK(call({"verify", "orthogonality", "--process", "compound", "--generator", "0,1,1", "--max-n", "3"}).code == 1);
    CHECK(call({"verify", "orthogonality", "--process", "compound", "--generator", "0,1,1,1,1,1", "--max-n", "3"})
              .code == 0);
}
