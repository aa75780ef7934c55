#include <pqeuler/contfrac.hpp>
#include <pqeuler/qcalc.hpp>

#include <functional>

namespace pqeuler
{

namespace
{

LaurentPoly pqb(int n)
{
    return pq_bracket(static_cast<unsigned>(n));
}

LaurentPoly qb(int n)
{
    return q_bracket(static_cast<unsigned>(n));
}

// [n]_{q,ps}
LaurentPoly qps_bracket(int n)
{
    return bracket(static_cast<unsigned>(n), var_q(), var_p() * var_s());
}

SFraction sfrac(HeightWeight c, int power)
{
    SFraction s;
    s.c = std::move(c);
    s.power = power;
    return s;
}

JFraction jfrac(HeightWeight b, HeightWeight ac)
{
    JFraction j;
    j.b = std::move(b);
    j.ac = std::move(ac);
    return j;
}

JFraction quintuple_fraction()
{
    return jfrac(
        [](int h) {
            return var_x() * var_y() * var_p(h) * var_s(2 * h) + (1 + var_x() * var_q()) * var_s(h) * qps_bracket(h);
        },
        [](int h) { return var_x() * var_s(2 * h + 1) * qps_bracket(h + 1) * qps_bracket(h + 1); });
}

JFraction cf_a()
{
    return jfrac([](int h) { return var_x() * var_y() + (1 + var_x() * var_q()) * qb(h); },
                 [](int h) { return var_x() * qb(h + 1) * qb(h + 1); });
}

JFraction cf_sz()
{
    return jfrac([](int h) { return var_y() * var_q(2 * h) + (1 + var_x()) * var_q(h) * qb(h); },
                 [](int h) { return var_x() * var_q(2 * h + 1) * qb(h + 1) * qb(h + 1); });
}

std::map<Var, LaurentPoly> xy_images(LaurentPoly x, LaurentPoly y)
{
    return {{Var::x, std::move(x)}, {Var::y, std::move(y)}};
}

LaurentPoly minus_one()
{
    return LaurentPoly(-1);
}

LaurentPoly minus_inv_q()
{
    return -var_q(-1);
}

using Builder = std::function<Preset()>;

const std::vector<std::pair<std::string, Builder>> &registry()
{
    static const std::vector<std::pair<std::string, Builder>> table = {
        {"tangent-pq", [] { return Preset{"", sfrac([](int k) { return pqb(k) * pqb(k + 1); }, 2), 1}; }},
        {"secant-pq", [] { return Preset{"", sfrac([](int k) { return pqb(k) * pqb(k); }, 2), 0}; }},
        {"tangent-q", [] { return Preset{"", sfrac([](int k) { return qb(k) * qb(k + 1); }, 2), 1}; }},
        {"secant-q", [] { return Preset{"", sfrac([](int k) { return qb(k) * qb(k); }, 2), 0}; }},
        {"tangent-qstar",
         [] { return Preset{"", sfrac([](int k) { return var_q(2 * k - 1) * qb(k) * qb(k + 1); }, 2), 1}; }},
        {"secant-qstar",
         [] { return Preset{"", sfrac([](int k) { return var_q(2 * k - 2) * qb(k) * qb(k); }, 2), 0}; }},
        {"thm4.1", [] { return Preset{"", quintuple_fraction(), 0}; }},
        {"cf-A", [] { return Preset{"", cf_a(), 0}; }},
        {"cf-SZ", [] { return Preset{"", cf_sz(), 0}; }},
        {"cf-A-tan", [] { return Preset{"", substitute(cf_a(), xy_images(minus_one(), 1)), 0}; }},
        {"cf-A-sec", [] { return Preset{"", substitute(cf_a(), xy_images(minus_inv_q(), 0)), 0}; }},
        {"cf-SZ-tan", [] { return Preset{"", substitute(cf_sz(), xy_images(minus_inv_q(), 1)), 0}; }},
        {"cf-SZ-sec", [] { return Preset{"", substitute(cf_sz(), xy_images(minus_one(), 0)), 0}; }},
    };
    return table;
}

} // namespace

Preset preset(std::string_view name)
{
    for (const auto &[n, build] : registry()) {
        if (n == name) {
            Preset p = build();
            p.name = n;
            return p;
        }
    }
    throw UnknownPreset("unknown preset '" + std::string(name) + "'");
}

const std::vector<std::string> &preset_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto &entry : registry()) {
            v.push_back(entry.first);
        }
        return v;
    }();
    return names;
}

SFraction specialization_sfraction(std::string_view name)
{
    if (name == "cf-A-tan") {
        return sfrac([](int k) { return k % 2 == 1 ? -qb((k + 1) / 2) : qb(k / 2); }, 1);
    }
    if (name == "cf-A-sec") {
        return sfrac([](int k) { return -var_q(-1) * qb(k) * qb(k); }, 2);
    }
    if (name == "cf-SZ-tan") {
        return sfrac(
            [](int k) {
                const int i = (k + 1) / 2;
                return k % 2 == 1 ? var_q(i - 1) * qb(i) : -var_q(i - 1) * qb(i);
            },
            1);
    }
    if (name == "cf-SZ-sec") {
        return sfrac([](int k) { return -var_q(2 * k - 1) * qb(k) * qb(k); }, 2);
    }
    throw UnknownPreset("no contraction form for preset '" + std::string(name) + "'");
}

} // namespace pqeuler
