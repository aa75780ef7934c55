#include <pqeuler/checks.hpp>

#include <pqeuler/contfrac.hpp>
#include <pqeuler/families.hpp>
#include <pqeuler/lattice.hpp>
#include <pqeuler/maps.hpp>
#include <pqeuler/qeuler.hpp>
#include <pqeuler/stats.hpp>

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace pqeuler
{

namespace
{

// Records the first mismatch; later comparisons are skipped once one fails.
class Outcome
{
public:
    bool ok() const { return ok_; }
    const nlohmann::json &witness() const { return witness_; }

    bool equal(const LaurentPoly &lhs, const LaurentPoly &rhs, nlohmann::json where)
    {
        if (ok_ && lhs != rhs) {
            where["lhs"] = lhs.to_string();
            where["rhs"] = rhs.to_string();
            fail(std::move(where));
        }
        return ok_;
    }

    bool require(bool cond, nlohmann::json where)
    {
        if (ok_ && !cond) {
            fail(std::move(where));
        }
        return ok_;
    }

    void fail(nlohmann::json where)
    {
        if (ok_) {
            ok_ = false;
            witness_ = std::move(where);
        }
    }

private:
    bool ok_ = true;
    nlohmann::json witness_;
};

LaurentPoly family_sum(Family f, int n, const char *weight)
{
    return stat_polynomial(f, n, Weight::parse(weight));
}

LaurentPoly power(const LaurentPoly &base, int k)
{
    return base.pow(static_cast<unsigned>(k));
}

LaurentPoly minus_inv_q()
{
    return -var_q(-1);
}

nlohmann::json at_n(const char *side, int n)
{
    return {{"identity", side}, {"n", n}};
}

LaurentPoly product_of_valuation(const MotzkinPath &path, const std::vector<int> &xi, const StepValuation &v)
{
    LaurentPoly r(1);
    for (int k = 1; k <= path.length(); ++k) {
        r *= v(path.step(k), path.height(k), xi[static_cast<std::size_t>(k - 1)]);
    }
    return r;
}

LaurentPoly monomial_of(const StatRecord &r, const char *weight)
{
    return Weight::parse(weight).evaluate(r);
}

// ---- sign-alternating sums ----

void euler_roselle(int n, Outcome &out)
{
    for (int k = 1; k <= n && out.ok(); ++k) {
        const LaurentPoly e(e_int(k));
        const LaurentPoly s = family_sum(Family::S, k, "(-1)^exc");
        const LaurentPoly d = family_sum(Family::D, k, "(-1)^exc");
        out.equal(s, k % 2 == 1 ? power(LaurentPoly(-1), (k - 1) / 2) * e : LaurentPoly(), at_n("S", k));
        out.equal(d, k % 2 == 0 ? power(LaurentPoly(-1), k / 2) * e : LaurentPoly(), at_n("D", k));
    }
}

// Both sides use (-1/q)^exc q^maj, i.e. (-1)^exc q^(maj-exc). With q^maj alone
// on S_n, or with a (-1/q)^(n/2) factor on the derangement side, the
// identities already fail at n = 2.
void foata_han(int n, Outcome &out)
{
    for (int k = 1; k <= n && out.ok(); ++k) {
        const LaurentPoly alt = family_sum(Family::Astar, k, "q^inv");
        const LaurentPoly s = family_sum(Family::S, k, "(-1/q)^exc*q^maj");
        const LaurentPoly d = family_sum(Family::D, k, "(-1/q)^exc*q^maj");
        out.equal(s, k % 2 == 1 ? power(LaurentPoly(-1), (k - 1) / 2) * alt : LaurentPoly(), at_n("S", k));
        out.equal(d, k % 2 == 0 ? power(LaurentPoly(-1), k / 2) * alt : LaurentPoly(), at_n("D", k));
    }
}

void jv(int n, Outcome &out)
{
    for (int k = 1; k <= n && out.ok(); ++k) {
        const LaurentPoly e = e_q(k);
        const LaurentPoly s = family_sum(Family::S, k, "(-1)^wex*q^cros");
        const LaurentPoly d = family_sum(Family::D, k, "(-1/q)^exc*q^cros");
        out.equal(s, k % 2 == 1 ? power(LaurentPoly(-1), (k + 1) / 2) * e : LaurentPoly(), at_n("S", k));
        out.equal(d, k % 2 == 0 ? power(minus_inv_q(), k / 2) * e : LaurentPoly(), at_n("D", k));
    }
}

void shin_zeng(int n, Outcome &out)
{
    for (int k = 1; k <= n && out.ok(); ++k) {
        const LaurentPoly e = e_star_q(k);
        const LaurentPoly s = family_sum(Family::S, k, "(-1/q)^exc*q^inv");
        const LaurentPoly d = family_sum(Family::D, k, "(-1)^exc*q^inv");
        out.equal(s, k % 2 == 1 ? power(LaurentPoly(-1), (k - 1) / 2) * e : LaurentPoly(), at_n("S", k));
        out.equal(d, k % 2 == 0 ? power(-var_q(), k / 2) * e : LaurentPoly(), at_n("D", k));
    }
}

// ---- continued fractions against enumeration ----

void series_vs(const char *tangent, const char *secant, int order, const char *odd_weight,
               const char *even_weight, Outcome &out)
{
    const LaurentSeries tan = expand(preset(tangent), order);
    const LaurentSeries sec = expand(preset(secant), order);
    for (int k = 0; k <= order && out.ok(); ++k) {
        const bool odd = k % 2 == 1;
        const LaurentPoly direct = k == 0 ? LaurentPoly(1) : family_sum(Family::A, k, odd ? odd_weight : even_weight);
        out.equal(odd ? tan[k] : sec[k], direct, {{"preset", odd ? tangent : secant}, {"coefficient", k}});
        out.equal(odd ? sec[k] : tan[k], LaurentPoly(),
                  {{"preset", odd ? secant : tangent}, {"coefficient", k}, {"expected", "zero"}});
    }
}

void thm2_1(int order, Outcome &out)
{
    series_vs("tangent-pq", "secant-pq", order, "p^thot*q^toht", "p^thto*q^toht", out);
}

void cor2_2(int order, Outcome &out)
{
    series_vs("tangent-q", "secant-q", order, "q^toht", "q^toht", out);
}

void cor2_3(int order, Outcome &out)
{
    series_vs("tangent-qstar", "secant-qstar", order, "q^(toht+2*thot)", "q^(toht+2*thto)", out);
}

void preset_vs_sum(const char *name, const char *weight, int n, Outcome &out)
{
    const LaurentSeries f = expand(preset(name), n);
    for (int k = 0; k <= n && out.ok(); ++k) {
        out.equal(f[k], family_sum(Family::S, k, weight), {{"preset", name}, {"coefficient", k}});
    }
}

void thm4_1(int n, Outcome &out)
{
    preset_vs_sum("thm4.1", "x^wex*y^fix*q^cros*p^nest*s^inv", n, out);
    // The same polynomials as weighted Laguerre histories.
    const WeightSpec spec = WeightSpec::with_valuation(quintuple_valuation());
    for (int k = 0; k <= n && out.ok(); ++k) {
        out.equal(weighted_sum(PathKind::laguerre, k, spec, SumMethod::dp, n),
                  family_sum(Family::S, k, "x^wex*y^fix*q^cros*p^nest*s^inv"),
                  {{"identity", "laguerre"}, {"n", k}});
    }
}

void cor_cf_a(int n, Outcome &out)
{
    preset_vs_sum("cf-A", "x^wex*y^fix*q^cros", n, out);
    const LaurentSeries general = expand(preset("thm4.1"), n);
    const LaurentSeries special = expand(preset("cf-A"), n);
    for (int k = 0; k <= n && out.ok(); ++k) {
        out.equal(special[k], general[k].substitute({{Var::p, LaurentPoly(1)}, {Var::s, LaurentPoly(1)}}),
                  {{"identity", "substitution p=1, s=1"}, {"coefficient", k}});
    }
}

void cor_cf_sz(int n, Outcome &out)
{
    preset_vs_sum("cf-SZ", "x^exc*y^fix*q^inv", n, out);
}

// ---- contraction ----

LaurentSeries signed_euler_series(std::string_view name, int order)
{
    LaurentSeries r(order);
    const bool tangent = name.ends_with("-tan");
    const bool star = name.starts_with("cf-SZ");
    if (tangent) {
        r[0] = LaurentPoly(1);
    }
    for (int k = tangent ? 1 : 0; k <= order; k += 2) {
        const int i = k / 2;
        const LaurentPoly e = star ? e_star_q(k) : e_q(k);
        LaurentPoly sign;
        if (tangent) {
            sign = power(LaurentPoly(-1), star ? i : i + 1);
        } else {
            sign = star ? power(-var_q(), i) : power(minus_inv_q(), i);
        }
        r[k] = r[k] + sign * e;
    }
    return r;
}

SFraction random_sfraction(std::mt19937 &rng, int levels)
{
    std::uniform_int_distribution<int> terms(0, 3), coeff(-3, 3), ex(0, 2), eq(-1, 2);
    std::vector<LaurentPoly> c(static_cast<std::size_t>(levels) + 1);
    for (auto &p : c) {
        const int count = terms(rng);
        for (int i = 0; i < count; ++i) {
            p += LaurentPoly::monomial(Int(coeff(rng)), Exponents{ex(rng), 0, 0, eq(rng), 0});
        }
    }
    SFraction sf;
    sf.c = [c = std::move(c)](int k) {
        return k < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(k)] : LaurentPoly();
    };
    return sf;
}

void compare_series(const LaurentSeries &a, const LaurentSeries &b, nlohmann::json where, Outcome &out)
{
    for (int k = 0; k <= a.order() && out.ok(); ++k) {
        where["coefficient"] = k;
        out.equal(a[k], b[k], where);
    }
}

void contraction_identities(const SFraction &sf, int order, nlohmann::json where, Outcome &out)
{
    const LaurentSeries s = expand_s(sf, order);
    where["form"] = "even";
    compare_series(s, expand_j(contract_even(sf), order), where, out);
    where["form"] = "odd";
    compare_series(s, expand_odd(contract_odd(sf), order), where, out);
}

constexpr int random_fraction_count = 100;

void contra(int order, Outcome &out)
{
    for (const char *name : {"cf-A-tan", "cf-A-sec", "cf-SZ-tan", "cf-SZ-sec"}) {
        const SFraction sf = specialization_sfraction(name);
        contraction_identities(sf, order, {{"specialization", name}}, out);
        const LaurentSeries j = expand(preset(name), order);
        compare_series(j, expand_s(sf, order), {{"specialization", name}, {"form", "preset"}}, out);
        compare_series(j, signed_euler_series(name, order), {{"specialization", name}, {"form", "euler"}}, out);
    }
    std::mt19937 rng(20100101);
    for (int i = 0; i < random_fraction_count && out.ok(); ++i) {
        const SFraction sf = random_sfraction(rng, order + 8);
        contraction_identities(sf, order, {{"random", i}}, out);
    }
}

// ---- linear model and involutions ----

void certify_phi(int n, Outcome &out)
{
    for_each_in_family(Family::S, n, [&](const Permutation &s) {
        if (!out.ok()) {
            return;
        }
        const Permutation t = invol_phi(s);
        const nlohmann::json where = {{"map", "phi"}, {"sigma", s.to_string()}, {"image", t.to_string()}};
        out.require(invol_phi(t) == s, where);
        out.require((t == s) == in_family(Family::Aprime, s), where);
        if (t != s) {
            const StatRecord a = basic_stats(s), b = basic_stats(t);
            out.require(a[Stat::toht] == b[Stat::toht], where);
            out.require(std::abs(a[Stat::ndes] - b[Stat::ndes]) == 1, where);
        }
    });
}

void certify_psi(int n, Outcome &out)
{
    for_each_in_family(Family::Dstar, n, [&](const Permutation &s) {
        if (!out.ok()) {
            return;
        }
        const Permutation t = invol_psi(s);
        const nlohmann::json where = {{"map", "psi"}, {"sigma", s.to_string()}, {"image", t.to_string()}};
        out.require(in_family(Family::Dstar, t) && invol_psi(t) == s, where);
        out.require((t == s) == in_family(Family::Adoubleprime, s), where);
        if (t != s) {
            const StatRecord a = basic_stats(s), b = basic_stats(t);
            const int dt = b[Stat::toht] - a[Stat::toht];
            const int dn = b[Stat::ndes] - a[Stat::ndes];
            out.require(dt == dn && std::abs(dn) == 1, where);
            out.require(a[Stat::mad] == b[Stat::mad], where);
        }
    });
}

void sz_linear(int n, Outcome &out)
{
    for (int k = 1; k <= n && out.ok(); ++k) {
        const LaurentPoly e = e_q(k);
        const LaurentPoly s = family_sum(Family::S, k, "(-1)^ndes*q^toht");
        const LaurentPoly d = family_sum(Family::Dstar, k, "(-1/q)^ndes*q^toht");
        out.equal(s, k % 2 == 1 ? power(LaurentPoly(-1), (k + 1) / 2) * e : LaurentPoly(), at_n("S", k));
        out.equal(d, k % 2 == 0 ? power(minus_inv_q(), k / 2) * e : LaurentPoly(), at_n("Dstar", k));
        out.equal(s, family_sum(Family::Aprime, k, "(-1)^ndes*q^toht"), at_n("S vs Aprime", k));
        out.equal(d, family_sum(Family::Adoubleprime, k, "(-1/q)^ndes*q^toht"), at_n("Dstar vs Adoubleprime", k));
        certify_phi(k, out);
        certify_psi(k, out);
    }
}

void mad_remark(int n, Outcome &out)
{
    for (int k = 1; k <= n && out.ok(); ++k) {
        const LaurentPoly lhs = family_sum(Family::Dstar, k, "(-1)^ndes*q^mad");
        out.equal(lhs, family_sum(Family::Adoubleprime, k, "(-1)^ndes*q^mad"), at_n("Dstar vs Adoubleprime", k));
        out.equal(lhs, family_sum(Family::D, k, "(-1)^exc*q^inv"), at_n("Dstar vs D", k));
        out.equal(lhs, k % 2 == 0 ? power(-var_q(), k / 2) * e_star_q(k) : LaurentPoly(), at_n("closed form", k));
    }
}

void sec7(int order, Outcome &out)
{
    const RationalSeries rz = rz_series(order);
    const auto hrz = hrz_series(order);
    for (int k = 0; k <= order && out.ok(); ++k) {
        const Int e = e_int(k);
        const Int parity = parity_formula(k);
        out.require(rz[k] == Rational(e), {{"identity", "rz"}, {"n", k}, {"lhs", rz[k].str()}, {"rhs", e.str()}});
        out.require(parity == e, {{"identity", "parity"}, {"n", k}, {"lhs", parity.str()}, {"rhs", e.str()}});
        const LaurentPoly eq = e_q(k);
        const auto h = hrz[k].as_polynomial();
        out.require(h.has_value(), {{"identity", "hrz"}, {"n", k}, {"lhs", hrz[k].to_string()}});
        if (h) {
            out.equal(*h, eq, at_n("hrz", k));
        }
        const LaurentPoly qp = q_parity_formula(k);
        out.equal(qp, eq, at_n("q-parity", k));
        out.equal(qp.substitute({{Var::q, LaurentPoly(1)}}), LaurentPoly(parity), at_n("q-parity at q=1", k));
    }
}

void equidist_remark(int n, Outcome &out)
{
    using Joint = std::map<std::pair<int, int>, long>;
    for (int k = 1; k <= n && out.ok(); ++k) {
        Joint suc_ndes, adj_des, fmax_ndes, fix_wex;
        for_each_in_family(Family::S, k, [&](const Permutation &s) {
            const StatRecord r = basic_stats(s);
            ++suc_ndes[{r[Stat::suc], r[Stat::ndes]}];
            ++adj_des[{r[Stat::adj], r[Stat::des] + 1}];
            ++fmax_ndes[{r[Stat::fmax], r[Stat::ndes]}];
            ++fix_wex[{r[Stat::fix], r[Stat::wex]}];
            if (!out.ok()) {
                return;
            }
            std::vector<int> w(s.word().begin(), s.word().end());
            for (int &v : w) {
                v = k + 1 - v;
            }
            const StatRecord c = basic_stats(Permutation(std::move(w)));
            out.require(r[Stat::suc] == c[Stat::adj] && r[Stat::ndes] == c[Stat::des] + 1,
                        {{"identity", "complement"}, {"sigma", s.to_string()}});
        });
        out.require(suc_ndes == adj_des, at_n("(suc,ndes) vs (adj,des+1)", k));
        out.require(suc_ndes == fmax_ndes, at_n("(suc,ndes) vs (fmax,ndes)", k));
        out.require(fmax_ndes == fix_wex, at_n("(fmax,ndes) vs (fix,wex)", k));
    }
}

// ---- map certificates ----

void certify_thm3_2(int n, Outcome &out)
{
    std::map<Permutation, Permutation> seen;
    for_each_in_family(Family::S, n, [&](const Permutation &s) {
        if (!out.ok()) {
            return;
        }
        const Permutation t = csz(s);
        const StatRecord a = basic_stats(s), b = basic_stats(t);
        const nlohmann::json where = {{"sigma", s.to_string()}, {"image", t.to_string()}};
        out.require(a[Stat::ndes] == b[Stat::wex] && a[Stat::fmax] == b[Stat::fix] && a[Stat::toht] == b[Stat::cros]
                        && a[Stat::thto] == b[Stat::nest] && a[Stat::mad] == b[Stat::inv],
                    where);
        for (int k = 1; k <= n && out.ok(); ++k) {
            out.require(pattern_k(s, k, Pattern::thto) == nest_k(t, k), where);
        }
        const auto [it, inserted] = seen.emplace(t, s);
        if (!inserted) {
            out.fail({{"sigma", s.to_string()}, {"collides_with", it->second.to_string()}, {"image", t.to_string()}});
        }
    });
}

void thm3_2(int n, Outcome &out)
{
    out.require(csz(Permutation::parse("412796583")) == Permutation::parse("249385716"),
                {{"example", "412796583"}, {"image", csz(Permutation::parse("412796583")).to_string()}});
    for (int k = 1; k <= n && out.ok(); ++k) {
        certify_thm3_2(k, out);
    }
}

void certify_diagrammes(bool star, int n, Outcome &out)
{
    const PathKind kind = star ? PathKind::restricted_diagramme : PathKind::diagramme;
    const int length = star ? n : n - 1;
    const StepValuation v = star ? fv_star_valuation() : fv_valuation();
    const char *weight = star ? "p^thto*q^toht" : "p^thot*q^toht";
    std::set<DyckDiagramme> images;
    long members = 0;
    for_each_in_family(Family::A, n, [&](const Permutation &s) {
        if (!out.ok()) {
            return;
        }
        ++members;
        const DyckDiagramme d = star ? fv_star(s) : fv(s);
        const nlohmann::json where = {{"sigma", s.to_string()}, {"image", d.to_string()}};
        out.require(d.is_valid() && d.restricted == star && d.path.length() == length, where);
        out.equal(product_of_valuation(d.path, d.xi, v), monomial_of(basic_stats(s), weight), where);
        if (!images.insert(d).second) {
            out.fail({{"sigma", s.to_string()}, {"duplicate_image", d.to_string()}});
        }
    });
    const auto total = static_cast<long>(path_objects(kind, length, length).size());
    out.require(members == total && static_cast<long>(images.size()) == total,
                {{"members", members}, {"images", images.size()}, {"objects", total}});
}

void certify_fz(int n, Outcome &out)
{
    std::set<LaguerreHistory> images;
    const StepValuation v = quintuple_valuation();
    for_each_in_family(Family::S, n, [&](const Permutation &s) {
        if (!out.ok()) {
            return;
        }
        const LaguerreHistory h = fz(s);
        const nlohmann::json where = {{"sigma", s.to_string()}, {"image", h.to_string()}};
        out.require(h.is_valid() && h.path.length() == n, where);
        out.equal(product_of_valuation(h.path, h.xi, v),
                  monomial_of(basic_stats(s), "x^wex*y^fix*q^cros*p^nest*s^inv"), where);
        if (!images.insert(h).second) {
            out.fail({{"sigma", s.to_string()}, {"duplicate_image", h.to_string()}});
        }
    });
    const auto total = static_cast<long>(path_objects(PathKind::laguerre, n, n).size());
    out.require(static_cast<long>(images.size()) == total, {{"images", images.size()}, {"objects", total}});
}

struct CheckEntry {
    CheckInfo info;
    std::function<void(int, Outcome &)> run;
};

const std::vector<CheckEntry> &entries()
{
    static const std::vector<CheckEntry> table = {
        {{"euler_roselle", "signed excedance sums over S_n and D_n against Euler numbers", "n", 7, 1, 10},
         euler_roselle},
        {{"foata_han", "exc/maj sums against inversions of alternating permutations", "n", 7, 1, 10}, foata_han},
        {{"jv", "wex/cros and exc/cros signed sums against E_n(q)", "n", 7, 1, 10}, jv},
        {{"shin_zeng", "exc/inv signed sums against E*_n(q)", "n", 7, 1, 10}, shin_zeng},
        {{"thm2_1", "(p,q)-tangent and secant fractions against enumeration", "order", 8, 0, 11}, thm2_1},
        {{"cor2_2", "q-tangent and secant fractions against enumeration", "order", 8, 0, 11}, cor2_2},
        {{"cor2_3", "E*-tangent and secant fractions against enumeration", "order", 8, 0, 11}, cor2_3},
        {{"thm3_2", "quintuple statistic transport and injectivity of csz", "n", 7, 1, 9}, thm3_2},
        {{"thm4_1", "quintuple J-fraction against enumeration and Laguerre histories", "n", 7, 0, 9}, thm4_1},
        {{"cor_cf_A", "wex/fix/cros J-fraction against enumeration", "n", 7, 0, 10}, cor_cf_a},
        {{"cor_cf_SZ", "exc/fix/inv J-fraction against enumeration", "n", 7, 0, 10}, cor_cf_sz},
        {{"contra", "even and odd contraction on specializations and random S-fractions", "order", 8, 0, 14},
         contra},
        {{"sz_linear", "ndes/toht sums over S_n and D*_n with the involution certificates", "n", 7, 1, 10},
         sz_linear},
        {{"mad_remark", "ndes/MAD sums over coderangements", "n", 7, 1, 10}, mad_remark},
        {{"sec7", "explicit generating functions and double sums for E_n and E_n(q)", "order", 8, 0, 12}, sec7},
        {{"equidist_remark", "(suc,ndes), (adj,des+1), (fmax,ndes), (fix,wex) joint distributions", "n", 7, 1,
          10},
         equidist_remark},
    };
    return table;
}

const std::vector<std::string> &map_name_list()
{
    static const std::vector<std::string> names = {"fv", "fv_star", "fz", "csz", "phi", "psi"};
    return names;
}

template <typename F>
CheckReport timed(std::string id, std::string param_name, int param, F &&body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    body(out);
    CheckReport r;
    r.id = std::move(id);
    r.param_name = std::move(param_name);
    r.param = param;
    r.pass = out.ok();
    r.witness = out.witness();
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace

nlohmann::json CheckReport::to_json() const
{
    return {{"id", id},
            {"param", {{"name", param_name}, {"value", param}}},
            {"status", pass ? "pass" : "fail"},
            {"elapsed_seconds", elapsed_seconds},
            {"witness", witness}};
}

std::string CheckReport::summary() const
{
    std::ostringstream os;
    os << (pass ? "PASS " : "FAIL ") << id << ' ' << param_name << '=' << param;
    os.precision(3);
    os << " (" << std::fixed << elapsed_seconds << "s)";
    if (!pass) {
        os << " witness: " << witness.dump();
    }
    return os.str();
}

const std::vector<CheckInfo> &check_registry()
{
    static const std::vector<CheckInfo> infos = [] {
        std::vector<CheckInfo> v;
        for (const auto &e : entries()) {
            v.push_back(e.info);
        }
        return v;
    }();
    return infos;
}

const CheckInfo &check_info(std::string_view id)
{
    for (const auto &info : check_registry()) {
        if (info.id == id) {
            return info;
        }
    }
    throw UnknownCheck("unknown check '" + std::string(id) + "'");
}

CheckReport run_check(std::string_view id, std::optional<int> param)
{
    for (const auto &e : entries()) {
        if (e.info.id != id) {
            continue;
        }
        const int p = param.value_or(e.info.default_param);
        if (p < e.info.min_param || p > e.info.max_param) {
            throw ParameterOutOfRange(e.info.param_name + "=" + std::to_string(p) + " outside ["
                                      + std::to_string(e.info.min_param) + ", " + std::to_string(e.info.max_param)
                                      + "] for check " + e.info.id);
        }
        return timed(e.info.id, e.info.param_name, p, [&](Outcome &out) { e.run(p, out); });
    }
    throw UnknownCheck("unknown check '" + std::string(id) + "'");
}

const std::vector<std::string> &map_names()
{
    return map_name_list();
}

CheckReport verify_map(std::string_view name, int n)
{
    constexpr int max_n = 9;
    if (n < 1 || n > max_n) {
        throw ParameterOutOfRange("n=" + std::to_string(n) + " outside [1, " + std::to_string(max_n) + "]");
    }
    const std::string id = "map:" + std::string(name);
    if (name == "fv" || name == "fv_star") {
        const bool star = name == "fv_star";
        if ((n % 2 == 0) != star) {
            throw ParameterOutOfRange(std::string(name) + " needs " + (star ? "even" : "odd") + " n");
        }
        return timed(id, "n", n, [&](Outcome &out) { certify_diagrammes(star, n, out); });
    }
    if (name == "fz") {
        return timed(id, "n", n, [&](Outcome &out) { certify_fz(n, out); });
    }
    if (name == "csz") {
        return timed(id, "n", n, [&](Outcome &out) { certify_thm3_2(n, out); });
    }
    if (name == "phi") {
        return timed(id, "n", n, [&](Outcome &out) { certify_phi(n, out); });
    }
    if (name == "psi") {
        return timed(id, "n", n, [&](Outcome &out) { certify_psi(n, out); });
    }
    throw std::invalid_argument("unknown map '" + std::string(name) + "'");
}

} // namespace pqeuler
