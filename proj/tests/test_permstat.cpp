#include <algorithm>
#include <cstdlib>
#include <set>

#include <doctest.h>

#include <pqeuler/concurrency.hpp>
#include <pqeuler/families.hpp>
#include <pqeuler/stats.hpp>

#include "oracles.hpp"

using namespace pqeuler;

namespace
{

Permutation perm(const oracle::Word &w) { return Permutation(w); }
Permutation perm(std::string_view s) { return Permutation::parse(s); }

std::set<std::string> as_strings(const std::vector<Permutation> &v)
{
    std::set<std::string> out;
    for (const auto &p : v) {
        out.insert(p.to_string());
    }
    return out;
}

} // namespace

TEST_SUITE("permstat")
{
    TEST_CASE("parse and print")
    {
        CHECK(perm("4723516").to_string() == "4723516");
        const auto big = Permutation::parse("10,2,1,3,4,5,6,7,8,9");
        CHECK(big.size() == 10);
        CHECK(big(1) == 10);
        CHECK(big.to_string() == "10,2,1,3,4,5,6,7,8,9");
        CHECK_THROWS_AS(perm("4157368"), std::invalid_argument);
        CHECK_THROWS_AS(perm("12a"), std::invalid_argument);
        CHECK(perm("312").inverse().to_string() == "231");
        CHECK(perm("312").inverse().inverse() == perm("312"));
        CHECK(Permutation::identity(0).size() == 0);
    }

    TEST_CASE("examples")
    {
        // The word 4157368 standardizes to 3146257; the foremaximums sit in the same places.
        CHECK(basic_stats(perm("3146257"))[Stat::fmax] == 2);

        const auto r = basic_stats(perm("231"));
        CHECK(r[Stat::ndes] == 2);
        CHECK(r[Stat::fmax] == 1);
        CHECK(r[Stat::toht] == 0);
        CHECK(r[Stat::thto] == 1);
        CHECK(r[Stat::mad] == 3);

        const auto t = basic_stats(perm("321"));
        CHECK(t[Stat::wex] == 2);
        CHECK(t[Stat::fix] == 1);
        CHECK(t[Stat::cros] == 0);
        CHECK(t[Stat::nest] == 1);
        CHECK(t[Stat::inv] == 3);
        const auto c = basic_stats(perm("231"));
        CHECK(c[Stat::wex] == 2);
        CHECK(c[Stat::fix] == 0);
        CHECK(c[Stat::cros] == 1);
        CHECK(c[Stat::nest] == 0);
        CHECK(c[Stat::inv] == 2);

        for (int n = 0; n <= 6; ++n) {
            const auto id = basic_stats(Permutation::identity(n));
            CHECK(id[Stat::exc] == 0);
            CHECK(id[Stat::wex] == n);
            CHECK(id[Stat::fix] == n);
            CHECK(id[Stat::inv] == 0);
            CHECK(id[Stat::cros] == 0);
            CHECK(id[Stat::nest] == 0);
            CHECK(id[Stat::mad] == 0);
        }
    }

    TEST_CASE("record text and json")
    {
        const auto r = basic_stats(perm("231"));
        CHECK(r.to_string().rfind("n=3 exc=", 0) == 0);
        CHECK(r.to_json()["mad"] == 3);
        CHECK(r.to_json()["thot"] == 0);
        CHECK(parse_stat("toht") == Stat::toht);
        CHECK(!parse_stat("nope").has_value());
    }

    TEST_CASE("per-index examples")
    {
        const auto s = perm("4723516");
        CHECK(pattern_k(s, 4, Pattern::thto) == 2);
        CHECK(pattern_k(s, 3, Pattern::toht) == 1);
        int cros = 0, nest = 0;
        for (int k = 1; k <= 3; ++k) {
            cros += cros_k(perm("231"), k);
            nest += nest_k(perm("231"), k);
        }
        CHECK(cros == 1);
        CHECK(nest == 0);
        int nest321 = 0;
        for (int k = 1; k <= 3; ++k) {
            nest321 += nest_k(perm("321"), k);
            CHECK(pattern_k(Permutation::identity(3), k, Pattern::toht) == 0);
            CHECK(inv_parts(Permutation::identity(3), k) == InvParts{});
        }
        CHECK(nest321 == 1);
        CHECK_THROWS_AS(cros_k(perm("231"), 4), std::out_of_range);
    }

    TEST_CASE("cyclic types")
    {
        CHECK(cyclic_type(perm("21"), 1) == CyclicType::valley);
        CHECK(cyclic_type(perm("21"), 2) == CyclicType::peak);
        CHECK(cyclic_type(perm("123"), 2) == CyclicType::fixed);
        CHECK(cyclic_type(perm("231"), 2) == CyclicType::double_ascent);
        CHECK(cyclic_type(perm("312"), 2) == CyclicType::double_descent);
    }

    TEST_CASE("all statistics against brute force")
    {
        for (int n = 1; n <= 7; ++n) {
            oracle::for_each_perm(n, [&](const oracle::Word &w) {
                const auto s = perm(w);
                const auto r = basic_stats(s);
                REQUIRE(r[Stat::n] == n);
                CHECK(r[Stat::exc] == oracle::exc(w));
                CHECK(r[Stat::wex] == oracle::wex(w));
                CHECK(r[Stat::fix] == oracle::fix(w));
                CHECK(r[Stat::des] == oracle::des(w));
                CHECK(r[Stat::ndes] == oracle::ndes(w));
                CHECK(r[Stat::maj] == oracle::maj(w));
                CHECK(r[Stat::inv] == oracle::inv(w));
                CHECK(r[Stat::cros] == oracle::cros(w));
                CHECK(r[Stat::nest] == oracle::nest(w));
                CHECK(r[Stat::toht] == oracle::toht(w));
                CHECK(r[Stat::thto] == oracle::thto(w));
                CHECK(r[Stat::thot] == oracle::thot(w));
                CHECK(r[Stat::fmax] == oracle::fmax(w));
                CHECK(r[Stat::mad] == oracle::mad(w));

                int ck = 0, nk = 0, th = 0, tt = 0, to = 0, iv = 0;
                for (int k = 1; k <= n; ++k) {
                    ck += cros_k(s, k);
                    nk += nest_k(s, k);
                    th += pattern_k(s, k, Pattern::toht);
                    tt += pattern_k(s, k, Pattern::thto);
                    to += pattern_k(s, k, Pattern::thot);
                    iv += inv_parts(s, k).total();
                }
                CHECK(ck == r[Stat::cros]);
                CHECK(nk == r[Stat::nest]);
                CHECK(th == r[Stat::toht]);
                CHECK(tt == r[Stat::thto]);
                CHECK(to == r[Stat::thot]);
                CHECK(iv == r[Stat::inv]);
            });
        }
    }

    TEST_CASE("identities over S_n")
    {
        for (int n = 1; n <= 8; ++n) {
            oracle::for_each_perm(n, [&](const oracle::Word &w) {
                const auto s = perm(w);
                const auto r = basic_stats(s);
                CHECK(r[Stat::inv] == n - r[Stat::wex] + r[Stat::cros] + 2 * r[Stat::nest]);
                CHECK(r[Stat::mad] == r[Stat::des] + r[Stat::toht] + 2 * r[Stat::thto]);
                CHECK(r[Stat::ndes] == n - r[Stat::des]);
                CHECK(r[Stat::exc] == n - basic_stats(s.inverse())[Stat::wex]);
            });
        }
    }

    TEST_CASE("suc and adj")
    {
        // suc uses sigma_{n+1} = n+1, adj uses sigma_{n+1} = 0.
        CHECK(basic_stats(perm("123"))[Stat::suc] == 3);
        CHECK(basic_stats(perm("321"))[Stat::adj] == 3);
        CHECK(basic_stats(perm("213"))[Stat::suc] == 1);
        CHECK(basic_stats(perm("213"))[Stat::adj] == 1);
    }

    TEST_CASE("joint distributions agree")
    {
        for (int n = 1; n <= 7; ++n) {
            std::multiset<std::pair<int, int>> suc, fm, fw;
            oracle::for_each_perm(n, [&](const oracle::Word &w) {
                const auto r = basic_stats(perm(w));
                suc.emplace(r[Stat::suc], r[Stat::ndes]);
                fm.emplace(r[Stat::fmax], r[Stat::ndes]);
                fw.emplace(r[Stat::fix], r[Stat::wex]);
            });
            CHECK(suc == fm);
            CHECK(fm == fw);
        }
    }

    TEST_CASE("families against filters")
    {
        using F = bool (*)(const oracle::Word &);
        const std::vector<std::pair<Family, F>> cases{
            {Family::S, [](const oracle::Word &) { return true; }},
            {Family::D, oracle::is_derangement},
            {Family::Dstar, oracle::is_coderangement},
            {Family::A, oracle::is_falling_alternating},
            {Family::Astar, oracle::is_alternating},
            {Family::Aprime,
             [](const oracle::Word &w) { return oracle::is_falling_alternating(w) && w.size() % 2 == 1; }},
            {Family::Adoubleprime,
             [](const oracle::Word &w) { return oracle::is_falling_alternating(w) && w.size() % 2 == 0; }},
        };
        for (const auto &[family, pred] : cases) {
            for (int n = 1; n <= 7; ++n) {
                std::vector<Permutation> expect;
                oracle::for_each_perm(n, [&](const oracle::Word &w) {
                    if (pred(w)) {
                        expect.push_back(perm(w));
                    }
                });
                const auto got = family_members(family, n);
                CHECK(got == expect);
                for (const auto &p : got) {
                    CHECK(in_family(family, p));
                }
            }
        }
    }

    TEST_CASE("family examples")
    {
        CHECK(as_strings(family_members(Family::Dstar, 4))
              == std::set<std::string>{"2143", "3142", "3241", "4123", "4132", "4213", "4231", "4312", "4321"});
        CHECK(as_strings(family_members(Family::A, 3)) == std::set<std::string>{"213", "312"});
        CHECK(family_members(Family::D, 1).empty());
        CHECK(family_members(Family::S, 0).size() == 1);
        CHECK(family_members(Family::Aprime, 4).empty());
        CHECK(family_members(Family::Adoubleprime, 5).empty());
    }

    TEST_CASE("stat polynomials")
    {
        CHECK(stat_polynomial(Family::S, 2, Weight::quintuple()) == parse_laurent("x^2*y^2+x*s"));
        CHECK(stat_polynomial(Family::A, 4, Weight::parse("q^toht")) == parse_laurent("2+2*q+q^2"));
        CHECK(stat_polynomial(Family::S, 1, Weight::quintuple()) == parse_laurent("x*y"));
        CHECK(stat_polynomial(Family::D, 2, Weight::parse("(-1/q)^exc*q^cros")) == parse_laurent("-q^-1"));
        CHECK(stat_polynomial(Family::A, 4, Weight::parse("q^(toht+2*thto)")) == parse_laurent("1+q^2+2*q^3+q^4"));
        CHECK_THROWS_AS(Weight::parse("q^bogus"), std::invalid_argument);
        CHECK_THROWS_WITH_AS(stat_polynomial(Family::S, 12, Weight::quintuple()),
                             doctest::Contains("enumeration too large"), EnumerationTooLarge);
    }

    TEST_CASE("quintuple polynomial against brute force")
    {
        for (int n = 1; n <= 7; ++n) {
            oracle::MPoly expect;
            oracle::for_each_perm(n, [&](const oracle::Word &w) {
                oracle::add(expect, oracle::mono(oracle::wex(w), oracle::fix(w), oracle::nest(w), oracle::cros(w),
                                                 oracle::inv(w)));
            });
            CHECK(stat_polynomial(Family::S, n, Weight::quintuple()) == oracle::to_laurent(expect));
        }
    }

    TEST_CASE("E_n(p,q) is symmetric in p and q")
    {
        for (int n = 1; n <= 8; ++n) {
            const auto w = Weight::parse(n % 2 ? "p^thot*q^toht" : "p^thto*q^toht");
            const auto e = stat_polynomial(Family::A, n, w);
            CHECK(e.substitute({{Var::p, var_q()}, {Var::q, var_p()}}) == e);
            CHECK(e == oracle::to_laurent(oracle::e_pq(n)));
        }
    }

    TEST_CASE("result does not depend on the worker count")
    {
        const char *old = std::getenv(workers_env_var);
        const std::string saved = old ? old : "";
        LaurentPoly reference;
        for (const char *workers : {"1", "2", "5"}) {
            setenv(workers_env_var, workers, 1);
            CHECK(worker_count() == static_cast<unsigned>(std::atoi(workers)));
            const auto got = stat_polynomial(Family::S, 7, Weight::quintuple());
            if (reference.is_zero()) {
                reference = got;
            }
            CHECK(got == reference);
        }
        if (old) {
            setenv(workers_env_var, saved.c_str(), 1);
        } else {
            unsetenv(workers_env_var);
        }
    }
}
