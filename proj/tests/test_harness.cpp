#include <sstream>

#include <doctest.h>

#include <pqeuler/checks.hpp>
#include <pqeuler/cli.hpp>
#include <pqeuler/families.hpp>

using namespace pqeuler;

namespace
{

struct CliResult {
    int code;
    std::string out, err;
};

CliResult cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool has(const std::string &haystack, const std::string &needle) { return haystack.find(needle) != std::string::npos; }

} // namespace

TEST_SUITE("harness")
{
    TEST_CASE("registry")
    {
        CHECK(check_registry().size() == 16);
        CHECK(check_info("jv").param_name == "n");
        CHECK(check_info("contra").param_name == "order");
        CHECK_THROWS_AS(check_info("nope"), UnknownCheck);
        CHECK_THROWS_AS(run_check("nope"), UnknownCheck);
        CHECK_THROWS_AS(run_check("jv", 99), ParameterOutOfRange);
    }

    TEST_CASE("every check passes at its default")
    {
        for (const auto &info : check_registry()) {
            const auto r = run_check(info.id);
            CHECK_MESSAGE(r.pass, r.summary());
            CHECK(r.param == info.default_param);
            CHECK(r.witness.is_null());
        }
    }

    TEST_CASE("small parameters")
    {
        CHECK(run_check("jv", 5).pass);
        CHECK(run_check("jv", 4).pass);
        CHECK(run_check("euler_roselle", 2).pass);
        CHECK(run_check("thm2_1", 3).pass);
        const auto r = run_check("jv", 5);
        CHECK(r.summary().rfind("PASS jv n=5", 0) == 0);
        const auto j = r.to_json();
        CHECK(j["id"] == "jv");
        CHECK(j["status"] == "pass");
    }

    TEST_CASE("jv values")
    {
        // Odd n = 5 gives (-1)^3 E_5(q); even n gives zero.
        const auto s5 = stat_polynomial(Family::S, 5, Weight::parse("(-1)^wex*q^cros"));
        CHECK(s5 == -parse_laurent("2+5*q+5*q^2+3*q^3+q^4"));
        CHECK(stat_polynomial(Family::S, 4, Weight::parse("(-1)^wex*q^cros")).is_zero());
        CHECK(stat_polynomial(Family::D, 2, Weight::parse("(-1)^exc")) == LaurentPoly(-1));
    }

    TEST_CASE("foata-han as printed fails at n = 2")
    {
        const auto s2 = stat_polynomial(Family::S, 2, Weight::parse("(-1)^exc*q^maj"));
        CHECK(s2 == parse_laurent("1-q"));
        CHECK(!s2.is_zero());
        const auto d2 = stat_polynomial(Family::D, 2, Weight::parse("(-1/q)^exc*q^maj"));
        const auto printed_rhs = -var_q(-1) * stat_polynomial(Family::Astar, 2, Weight::parse("q^inv"));
        CHECK(d2 != printed_rhs);
        CHECK(stat_polynomial(Family::S, 2, Weight::parse("(-1/q)^exc*q^maj")).is_zero());
    }

    TEST_CASE("map certificates")
    {
        for (const auto &name : map_names()) {
            const auto r = verify_map(name, name == "fv" ? 5 : 6);
            CHECK_MESSAGE(r.pass, r.summary());
        }
        CHECK_THROWS(verify_map("nope", 4));
    }

    TEST_CASE("cli stats")
    {
        const auto r = cli({"stats", "231"});
        CHECK(r.code == 0);
        CHECK(has(r.out, "ndes=2"));
        CHECK(has(r.out, "fmax=1"));
        CHECK(has(r.out, "toht=0"));
        CHECK(has(r.out, "thto=1"));
        CHECK(has(r.out, "mad=3"));
        const auto j = cli({"stats", "231", "--json"});
        CHECK(nlohmann::json::parse(j.out)["mad"] == 3);
        CHECK(cli({"stats", "2a1"}).code == 2);
    }

    TEST_CASE("cli verify")
    {
        CHECK(cli({"verify", "jv", "--n", "5"}).code == 0);
        const auto j = cli({"verify", "jv", "--n", "5", "--json"});
        CHECK(nlohmann::json::parse(j.out)["status"] == "pass");
        CHECK(cli({"verify", "nope"}).code == 2);
        CHECK(cli({"verify", "jv", "--n", "99"}).code == 2);
        CHECK(has(cli({"verify", "--list"}).out, "shin_zeng"));
    }

    TEST_CASE("cli cf")
    {
        const auto r = cli({"cf", "secant-pq", "--order", "4"});
        CHECK(r.code == 0);
        CHECK(has(r.out, "1 + t^2 + (p^2+2*p*q+q^2+1)*t^4"));
        CHECK(cli({"cf", "secant-pq", "--order", "4", "--method", "dp"}).out == r.out);
        CHECK(cli({"cf", "bogus", "--order", "4"}).code == 2);
        CHECK(has(cli({"cf", "--list"}).out, "thm4.1"));
    }

    TEST_CASE("cli table, bij and export")
    {
        const auto t = cli({"table", "--family", "A", "--n", "4", "--weight", "q^toht"});
        CHECK(t.code == 0);
        CHECK(has(t.out, "q^2+2*q+2"));
        CHECK(cli({"table", "--family", "S", "--n", "13", "--weight", "q^inv"}).code == 2);
        CHECK(has(cli({"table", "--what", "euler", "--n", "4"}).out, "n=4 E=5 E(p,q)=p^2+2*p*q+q^2+1"));
        CHECK(nlohmann::json::parse(cli({"table", "--what", "euler", "--n", "4", "--json"}).out)["rows"].size() == 5);
        const auto b = cli({"bij", "csz", "412796583"});
        CHECK(b.code == 0);
        CHECK(has(b.out, "249385716"));
        CHECK(cli({"bij", "psi", "12"}).code == 2);
        CHECK(cli({"bij", "phi", "--verify", "--n", "5"}).code == 0);
        const auto e = cli({"export", "--n", "5"});
        CHECK(e.code == 0);
        CHECK(nlohmann::json::parse(e.out)["rows"].size() == 6);
        CHECK(cli({"nonsense"}).code == 2);
    }
}
