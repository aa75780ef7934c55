#include <cstdlib>
#include <set>

#include <doctest.h>

#include <pqeuler/families.hpp>
#include <pqeuler/maps.hpp>

#include "oracles.hpp"

using namespace pqeuler;

namespace
{

Permutation perm(std::string_view s) { return Permutation::parse(s); }

oracle::Word word(const Permutation &p) { return {p.word().begin(), p.word().end()}; }

bool double_ascent_or_descent_exists(const oracle::Word &w, int right)
{
    const int n = oracle::len(w);
    for (int i = 1; i <= n; ++i) {
        const int prev = i == 1 ? 0 : oracle::at(w, i - 1);
        const int next = i == n ? right : oracle::at(w, i + 1);
        const int cur = oracle::at(w, i);
        if ((prev < cur && cur < next) || (prev > cur && cur > next)) {
            return true;
        }
    }
    return false;
}

} // namespace

TEST_SUITE("maps")
{
    TEST_CASE("fv examples")
    {
        const auto a = fv(perm("213"));
        CHECK(a.path.to_string() == "UD");
        CHECK(a.xi == std::vector<int>{0, 0});
        const auto b = fv(perm("312"));
        CHECK(b.path.to_string() == "UD");
        CHECK(b.xi == std::vector<int>{0, 1});
        CHECK(fv(perm("1")).path.length() == 0);
        CHECK_THROWS_AS(fv(perm("123")), PreconditionError);
        CHECK_THROWS_AS(fv(perm("2143")), PreconditionError);
    }

    TEST_CASE("fv_star examples")
    {
        const auto d = fv_star(perm("21"));
        CHECK(d.restricted);
        CHECK(d.path.to_string() == "UD");
        CHECK(d.xi == std::vector<int>{0, 0});
        std::set<DyckDiagramme> image;
        for (const auto &s : family_members(Family::A, 4)) {
            const auto g = fv_star(s);
            CHECK(g.is_valid());
            image.insert(g);
        }
        CHECK(image.size() == 5);
        CHECK_THROWS_AS(fv_star(perm("213")), PreconditionError);
    }

    TEST_CASE("fv is a bijection onto diagrammes")
    {
        const auto e = oracle::euler_numbers(9);
        for (int n = 0; n <= 4; ++n) {
            std::set<DyckDiagramme> odd, even;
            for (const auto &s : family_members(Family::A, 2 * n + 1)) {
                const auto g = fv(s);
                CHECK(g.is_valid());
                CHECK(!g.restricted);
                odd.insert(g);
            }
            CHECK(static_cast<long long>(odd.size()) == e[static_cast<std::size_t>(2 * n + 1)]);
            CHECK(odd.size() == path_objects(PathKind::diagramme, 2 * n).size());
            if (n >= 1) {
                for (const auto &s : family_members(Family::A, 2 * n)) {
                    even.insert(fv_star(s));
                }
                CHECK(static_cast<long long>(even.size()) == e[static_cast<std::size_t>(2 * n)]);
                CHECK(even.size() == path_objects(PathKind::restricted_diagramme, 2 * n).size());
            }
        }
    }

    TEST_CASE("fz examples")
    {
        const auto h = fz(perm("21"));
        CHECK(h.path.to_string() == "UD");
        CHECK(h.xi == std::vector<int>{0, 0});
        const auto id = fz(Permutation::identity(4));
        CHECK(id.path.to_string() == "LLLL");
        CHECK(id.xi == std::vector<int>(4, 0));
        for (int n = 1; n <= 6; ++n) {
            std::set<LaguerreHistory> image;
            for (const auto &s : family_members(Family::S, n)) {
                const auto g = fz(s);
                CHECK(g.is_valid());
                image.insert(g);
            }
            CHECK(image.size() == path_objects(PathKind::laguerre, n).size());
        }
    }

    TEST_CASE("csz examples")
    {
        CHECK(csz(perm("412796583")).to_string() == "249385716");
        CHECK(csz(perm("123")).to_string() == "123");
        CHECK(csz(perm("231")).to_string() == "321");
        CszTrace trace;
        csz(perm("412796583"), &trace);
        CHECK(trace.emb.size() == 9);
        CHECK(trace.to_json().contains("f_prime"));
    }

    TEST_CASE("csz transports the quintuple statistic")
    {
        for (int n = 1; n <= 7; ++n) {
            std::set<Permutation> image;
            oracle::for_each_perm(n, [&](const oracle::Word &w) {
                const auto t = csz(Permutation(w));
                image.insert(t);
                const auto tw = word(t);
                CHECK(oracle::ndes(w) == oracle::wex(tw));
                CHECK(oracle::fmax(w) == oracle::fix(tw));
                CHECK(oracle::toht(w) == oracle::cros(tw));
                CHECK(oracle::thto(w) == oracle::nest(tw));
                CHECK(oracle::mad(w) == oracle::inv(tw));
            });
            CHECK(image.size() == oracle::all_perms(n).size());
        }
    }

    TEST_CASE("phi examples and involution")
    {
        CHECK(invol_phi(perm("123")).to_string() == "132");
        CHECK(invol_phi(perm("213")).to_string() == "213");
        for (int n = 1; n <= 7; ++n) {
            oracle::for_each_perm(n, [&](const oracle::Word &w) {
                const Permutation s(w);
                const auto t = invol_phi(s);
                CHECK(invol_phi(t) == s);
                const bool fixed = t == s;
                CHECK(fixed == !double_ascent_or_descent_exists(w, 0));
                if (!fixed) {
                    const auto tw = word(t);
                    CHECK(oracle::toht(tw) == oracle::toht(w));
                    CHECK(std::abs(oracle::ndes(tw) - oracle::ndes(w)) == 1);
                }
            });
        }
    }

    TEST_CASE("psi examples and involution")
    {
        CHECK(invol_psi(perm("21")).to_string() == "21");
        CHECK(invol_psi(perm("4321")).to_string() == "4213");
        CHECK_THROWS_AS(invol_psi(perm("12")), PreconditionError);
        for (int n = 1; n <= 7; ++n) {
            oracle::for_each_perm(n, [&](const oracle::Word &w) {
                if (!oracle::is_coderangement(w)) {
                    return;
                }
                const Permutation s(w);
                const auto t = invol_psi(s);
                const auto tw = word(t);
                CHECK(oracle::is_coderangement(tw));
                CHECK(invol_psi(t) == s);
                const bool fixed = t == s;
                CHECK(fixed == !double_ascent_or_descent_exists(w, n + 1));
                if (!fixed) {
                    CHECK(std::abs(oracle::ndes(tw) - oracle::ndes(w)) == 1);
                    CHECK(oracle::toht(tw) - oracle::ndes(tw) == oracle::toht(w) - oracle::ndes(w));
                    CHECK(oracle::mad(tw) == oracle::mad(w));
                }
            });
        }
    }
}
