#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "noncross/cli.hpp"
#include "noncross/errors.hpp"
#include "noncross/io.hpp"

using namespace noncross;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("rational text")
{
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(to_string(Rational(4, 2)) == "2");
    CHECK(to_string(Rational(-2, 6)) == "-1/3");
    for (const char* bad : {"", "1/0", "1.5", "+2", "1/-2", "a", "1 /2", "--1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_rational(bad), InputError);
    }
    CHECK(parse_rational_list("1, 2 ,-1/2") == std::vector<Rational>{1, 2, Rational(-1, 2)});
    CHECK(parse_rational_list("1 2 3").size() == 3);
    CHECK(parse_int_list("4,5") == std::vector<int>{4, 5});
    CHECK_THROWS_AS(parse_int_list("4,x"), InputError);
    CHECK(to_decimal(Rational(1, 4), 5) == "0.25");
    CHECK(to_double(Rational(1, 3)) == doctest::Approx(1.0 / 3));
}

TEST_CASE("caps from the environment string")
{
    const auto l = parse_limits("nc=15,order=13,topo=6");
    CHECK(l.nc_max_m == 15);
    CHECK(l.series_max_order == 13);
    CHECK(l.topo_max_m == 6);
    CHECK(parse_limits("16").nc_max_m == 16);
    CHECK_THROWS_AS(parse_limits("bogus=1"), InputError);
    CHECK_THROWS_AS(parse_limits("nc=x"), InputError);
}

TEST_CASE("nc commands")
{
    CHECK(run({"nc", "count", "--m", "6"}).out == "132\n");
    CHECK(run({"nc", "kreweras", "--p", "1|2 6 7|3 5|4|8"}).out == "1 7 8|2 5|3 4|6\n");
    CHECK(run({"nc", "join", "--p", "1 3|2|4", "--q", "1|2 4|3"}).out == "1 2 3 4\n");
    CHECK(run({"nc", "meet", "--p", "1 2 3|4", "--q", "1|2 3 4"}).out == "1|2 3|4\n");
    CHECK(run({"nc", "rotate", "--p", "1|2 6 7|3 5|4|8", "--k", "1"}).out == "1|2|3 7 8|4 6|5\n");
    const auto mob = run({"nc", "mobius", "--p", "1|2|3|4", "--q", "1 2 3 4", "--route", "both"});
    CHECK(mob.code == 0);
    CHECK(mob.out.find("-5") != std::string::npos);
    const auto js = nlohmann::json::parse(run({"--format", "json", "nc", "kreweras", "--p", "1|2 3"}).out);
    CHECK(js["operation"] == "kreweras");
    CHECK(js["result"]["m"] == 3);
    CHECK(js["result"]["blocks"] == nlohmann::json::parse("[[1,3],[2]]"));
    const auto list = nlohmann::json::parse(run({"nc", "list", "--m", "4", "--format", "json"}).out);
    CHECK(list["count"] == 14);
    CHECK(list["partitions"].size() == 14);
}

TEST_CASE("free commands")
{
    CHECK(run({"free", "m2c", "--moments", "1,2,5,14"}).out == "1,1,1,1\n");
    CHECK(run({"free", "c2m", "--cumulants", "0,1,0,0,0,0"}).out == "0,1,0,2,0,5\n");
    CHECK(run({"free", "add", "--m1", "0,1,0,2", "--m2", "0,1,0,2"}).out == "0,2,0,8\n");
    CHECK(run({"free", "mult", "--m1", "1,2,5", "--m2", "1,2,5", "--route", "kreweras"}).out == "1,3,12\n");
    CHECK(run({"free", "mult", "--m1", "1,2,5", "--m2", "1,2,5", "--route", "stransform"}).out == "1,3,12\n");
    CHECK(run({"free", "law", "--name", "bessel", "--l", "3", "--order", "3"}).out == "1,4,22\n");
    CHECK(run({"free", "r", "--moments", "1,2,5,14"}).out == "1,1,1,1\n");
    CHECK(run({"free", "s", "--moments", "1,2,5,14"}).out == "1,-1,1,-1\n");
    const auto csv = run({"free", "c2m", "--cumulants", "1/2,1", "--format", "csv"}).out;
    CHECK(csv.rfind("index,exact,decimal\n", 0) == 0);
    const auto dec = run({"free", "m2c", "--moments", "1/3,1", "--decimal"});
    CHECK(dec.code == 0);
    CHECK(dec.out.find("0.333") != std::string::npos);
    const auto js = nlohmann::json::parse(run({"free", "law", "--name", "mp", "--order", "3", "--format", "json"}).out);
    CHECK(js["kind"] == "moments");
    CHECK(js["values"] == nlohmann::json::parse(R"(["1","2","5"])"));
    const auto bad = run({"free", "mult", "--m1", "0,1", "--m2", "1,2", "--route", "stransform"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("vanishing first moment") != std::string::npos);
}

TEST_CASE("cox, topo and rmt commands")
{
    CHECK(run({"cox", "nccount", "--family", "A", "--rank", "3"}).out == "14\n");
    CHECK(run({"cox", "nccount", "--family", "D", "--rank", "4"}).out == "50\n");
    CHECK(run({"cox", "hurwitz", "--family", "B", "--rank", "3"}).out.find("orbits=1") != std::string::npos);
    CHECK(run({"cox", "redt", "--family", "A", "--rank", "2"}).code == 0);
    CHECK(run({"cox", "dualrel", "--family", "A", "--rank", "2"}).code == 0);
    CHECK(run({"topo", "chains", "--m", "4"}).out.find("maximal_chains 16") != std::string::npos);
    CHECK(run({"topo", "euler", "--p", "1|2|3|4", "--q", "1 2 3 4"}).code == 0);
    const auto r = run({"rmt", "verify", "--family", "product", "--l", "1", "--k", "2", "--n", "32", "--trials", "10",
                        "--json"});
    REQUIRE(r.code == 0);
    const auto js = nlohmann::json::parse(r.out);
    CHECK(js["target"] == "2");
    CHECK(js["trials"] == 10);
}

TEST_CASE("exit codes")
{
    CHECK(run({}).code == 2);
    CHECK(run({"nc", "count"}).code == 2);
    CHECK(run({"nc", "kreweras", "--p", "1 3|2 4"}).code == 2);
    CHECK(run({"nc", "count", "--m", "x"}).code == 2);
    CHECK(run({"free", "m2c", "--moments", "1,2/0"}).code == 2);
    CHECK(run({"cox", "nccount", "--family", "E", "--rank", "3"}).code == 2);
    CHECK(run({"nc", "count", "--m", "30"}).code == 3);
    CHECK(run({"free", "c2m", "--cumulants", "1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1"}).code == 3);
    CHECK(run({"topo", "chains", "--m", "12"}).code == 3);
    CHECK(run({"nc", "meet", "--p", "1|2", "--q", "1|2|3"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
