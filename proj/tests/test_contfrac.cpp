#include <random>

#include <doctest.h>

#include <pqeuler/contfrac.hpp>
#include <pqeuler/qcalc.hpp>

#include "oracles.hpp"

using namespace pqeuler;

namespace
{

const std::map<Var, LaurentPoly> all_ones{{Var::x, LaurentPoly(1)}, {Var::y, LaurentPoly(1)},
                                          {Var::p, LaurentPoly(1)}, {Var::q, LaurentPoly(1)},
                                          {Var::s, LaurentPoly(1)}};

LaurentSeries at_ones(const LaurentSeries &f)
{
    LaurentSeries out(f.order());
    for (int k = 0; k <= f.order(); ++k) {
        out[k] = f[k].substitute(all_ones);
    }
    return out;
}

LaurentSeries ints(std::vector<long long> v)
{
    LaurentSeries out(static_cast<int>(v.size()) - 1);
    for (std::size_t k = 0; k < v.size(); ++k) {
        out[static_cast<int>(k)] = LaurentPoly(Int(v[k]));
    }
    return out;
}

// Generating function of the falling alternating sums, one parity only.
LaurentSeries alternating_series(int order, bool odd, oracle::MPoly (*sum)(int))
{
    LaurentSeries out(order);
    for (int n = odd ? 1 : 0; n <= order; n += 2) {
        out[n] = n == 0 ? LaurentPoly(1) : oracle::to_laurent(sum(n));
    }
    return out;
}

LaurentSeries shifted_up(const LaurentSeries &f, int shift)
{
    return f.shifted(shift);
}

SFraction random_sfraction(std::mt19937 &rng)
{
    std::uniform_int_distribution<int> coeff(-2, 2), ex(0, 2);
    std::vector<LaurentPoly> cs(16);
    for (auto &c : cs) {
        c = LaurentPoly::monomial(Int(coeff(rng)), {0, 0, ex(rng), ex(rng), 0})
            + LaurentPoly::monomial(Int(coeff(rng)), {ex(rng), 0, 0, ex(rng), 0});
    }
    SFraction sf;
    sf.c = [cs](int k) { return cs[static_cast<std::size_t>(k) % cs.size()]; };
    return sf;
}

} // namespace

TEST_SUITE("contfrac")
{
    TEST_CASE("classical tangent and secant")
    {
        SFraction tan;
        tan.c = [](int k) { return LaurentPoly(Int(k) * (k + 1)); };
        tan.power = 2;
        CHECK(shifted_up(expand_s(tan, 7), 1) == ints({0, 1, 0, 2, 0, 16, 0, 272}));
        SFraction sec;
        sec.c = [](int k) { return LaurentPoly(Int(k) * k); };
        sec.power = 2;
        CHECK(expand_s(sec, 6) == ints({1, 0, 1, 0, 5, 0, 61}));
    }

    TEST_CASE("preset examples")
    {
        CHECK(expand(preset("secant-pq"), 4).to_string() == "1 + t^2 + (p^2+2*p*q+q^2+1)*t^4");
        const auto tan = expand(preset("tangent-pq"), 5);
        CHECK(tan[1] == LaurentPoly(1));
        CHECK(tan[3] == parse_laurent("p+q"));
        CHECK(tan[5] == parse_laurent("p^4+3*q*p^3+4*p^2*q^2+3*q^3*p+q^4+p^2+2*q*p+q^2"));
        CHECK(expand(preset("secant-qstar"), 4)[4] == parse_laurent("1+q^2+2*q^3+q^4"));
        CHECK(expand(preset("thm4.1"), 2)[1] == parse_laurent("x*y"));
        CHECK(expand(preset("thm4.1"), 2)[2] == parse_laurent("x^2*y^2+x*s"));
        CHECK(at_ones(expand(preset("thm4.1"), 4)) == ints({1, 1, 2, 6, 24}));
        CHECK(at_ones(expand(preset("cf-A"), 6)) == ints({1, 1, 2, 6, 24, 120, 720}));
        CHECK_THROWS_AS(preset("no-such-preset"), UnknownPreset);
        CHECK(preset_names().size() == 13);
    }

    TEST_CASE("trivial fractions")
    {
        JFraction zero_j;
        zero_j.b = [](int) { return LaurentPoly(0); };
        zero_j.ac = [](int) { return LaurentPoly(0); };
        CHECK(expand_j(zero_j, 5) == LaurentSeries::one(5));
        SFraction zero_s;
        zero_s.c = [](int) { return LaurentPoly(0); };
        CHECK(expand_s(zero_s, 5) == LaurentSeries::one(5));
        CHECK(expand_j(contract_even(zero_s), 5) == LaurentSeries::one(5));
        CHECK(expand_odd(contract_odd(zero_s), 5) == LaurentSeries::one(5));
    }

    TEST_CASE("presets against alternating permutations")
    {
        const int order = 9;
        CHECK(expand(preset("tangent-pq"), order) == alternating_series(order, true, oracle::e_pq));
        CHECK(expand(preset("secant-pq"), order) == alternating_series(order, false, oracle::e_pq));
        CHECK(expand(preset("tangent-q"), order) == alternating_series(order, true, oracle::e_q));
        CHECK(expand(preset("secant-q"), order) == alternating_series(order, false, oracle::e_q));
        CHECK(expand(preset("tangent-qstar"), order) == alternating_series(order, true, oracle::e_star_q));
        CHECK(expand(preset("secant-qstar"), order) == alternating_series(order, false, oracle::e_star_q));
    }

    TEST_CASE("J-fractions against permutation sums")
    {
        const int order = 6;
        LaurentSeries quint(order), a(order), sz(order);
        for (int n = 0; n <= order; ++n) {
            oracle::MPoly mq, ma, ms;
            oracle::for_each_perm(n, [&](const oracle::Word &w) {
                using namespace oracle;
                add(mq, mono(wex(w), fix(w), nest(w), cros(w), inv(w)));
                add(ma, mono(wex(w), fix(w), 0, cros(w), 0));
                add(ms, mono(exc(w), fix(w), 0, inv(w), 0));
            });
            quint[n] = oracle::to_laurent(mq);
            a[n] = oracle::to_laurent(ma);
            sz[n] = oracle::to_laurent(ms);
        }
        CHECK(expand(preset("thm4.1"), order) == quint);
        CHECK(expand(preset("cf-A"), order) == a);
        CHECK(expand(preset("cf-SZ"), order) == sz);
    }

    TEST_CASE("contraction of the tangent specialization")
    {
        const auto sf = specialization_sfraction("cf-A-tan");
        CHECK(sf.c(1) == LaurentPoly(-1));
        CHECK(sf.c(2) == LaurentPoly(1));
        CHECK(sf.c(3) == -q_bracket(2));
        CHECK(sf.c(4) == q_bracket(2));
        const auto j = contract_even(sf);
        for (int h = 0; h <= 6; ++h) {
            CHECK(j.b(h) == -var_q(h));
            CHECK(j.ac(h) == -q_bracket(static_cast<unsigned>(h + 1)).pow(2));
        }
        const auto pre = std::get<JFraction>(preset("cf-A-tan").fraction);
        for (int h = 0; h <= 6; ++h) {
            CHECK(pre.b(h) == j.b(h));
            CHECK(pre.ac(h) == j.ac(h));
        }
    }

    TEST_CASE("contractions on random S-fractions")
    {
        std::mt19937 rng(42);
        for (int trial = 0; trial < 20; ++trial) {
            const auto sf = random_sfraction(rng);
            const auto direct = expand_s(sf, 10);
            CHECK(expand_j(contract_even(sf), 10) == direct);
            CHECK(expand_odd(contract_odd(sf), 10) == direct);
        }
    }

    TEST_CASE("substitution commutes with expansion")
    {
        const auto thm = std::get<JFraction>(preset("thm4.1").fraction);
        const std::map<Var, LaurentPoly> img{{Var::p, LaurentPoly(1)}, {Var::s, LaurentPoly(1)}};
        const auto lhs = expand_j(substitute(thm, img), 6);
        const auto rhs = expand(preset("cf-A"), 6);
        CHECK(lhs == rhs);
    }

    TEST_CASE("expansion is stable beyond the default depth")
    {
        for (const auto &name : preset_names()) {
            const auto p = preset(name);
            for (int order : {4, 7, 10}) {
                const auto base = expand(p, order);
                Fraction deeper = p.fraction;
                std::visit([order](auto &f) { f.depth = f.depth_for(order) + 5; }, deeper);
                CHECK_MESSAGE(expand(Preset{name, deeper, p.shift}, order) == base, name);
            }
        }
    }

    TEST_CASE("path expansion matches")
    {
        for (const auto &name : preset_names()) {
            const auto p = preset(name);
            const auto base = expand(p, 8);
            CHECK_MESSAGE(expand_by_paths(p, 8, SumMethod::dp) == base, name);
            CHECK_MESSAGE(expand_by_paths(p, 8, SumMethod::enumerate) == base, name);
        }
    }
}
