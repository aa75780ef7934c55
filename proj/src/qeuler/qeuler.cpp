#include <pqeuler/qeuler.hpp>

#include <pqeuler/contfrac.hpp>
#include <pqeuler/json_io.hpp>
#include <pqeuler/qcalc.hpp>

#include <map>
#include <stdexcept>

namespace pqeuler
{

namespace
{

void require_nonnegative(int n)
{
    if (n < 0) {
        throw std::invalid_argument("negative index " + std::to_string(n));
    }
}

void require_closed_form(int n)
{
    require_nonnegative(n);
    if (n > closed_form_cap) {
        throw std::length_error("order " + std::to_string(n) + " exceeds cap " + std::to_string(closed_form_cap));
    }
}

Rational rational_power(const Rational &base, int k)
{
    Rational r(1);
    for (int i = 0; i < k; ++i) {
        r *= base;
    }
    return r;
}

// (a)_k = a (a+1) ... (a+k-1)
Int rising(int a, int k)
{
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= a + i;
    }
    return r;
}

int sign_of(int e)
{
    return e % 2 == 0 ? 1 : -1;
}

RationalFunctionQ rf(const LaurentPoly &p)
{
    return RationalFunctionQ(p);
}

} // namespace

std::string_view euler_method_name(EulerMethod m)
{
    return m == EulerMethod::enumerate ? "enumerate" : "cf";
}

LaurentPoly e_pq(int n, EulerMethod method, int cap)
{
    require_nonnegative(n);
    if (method == EulerMethod::enumerate) {
        if (n == 0) {
            return LaurentPoly(1);
        }
        const Weight w = Weight::parse(n % 2 == 1 ? "p^thot*q^toht" : "p^thto*q^toht");
        return stat_polynomial(Family::A, n, w, cap);
    }
    return expand(preset(n % 2 == 1 ? "tangent-pq" : "secant-pq"), n)[n];
}

LaurentPoly e_q(int n, EulerMethod method, int cap)
{
    return e_pq(n, method, cap).substitute({{Var::p, LaurentPoly(1)}});
}

LaurentPoly e_star_q(int n, EulerMethod method, int cap)
{
    return e_pq(n, method, cap).substitute({{Var::p, var_q(2)}});
}

Int e_int(int n, EulerMethod method, int cap)
{
    const auto c = e_pq(n, method, cap).substitute({{Var::p, LaurentPoly(1)}, {Var::q, LaurentPoly(1)}}).to_constant();
    return c ? *c : Int(0);
}

RatPolySeries egf_exc_fix(int order)
{
    require_nonnegative(order);
    const RatPoly x = to_ratpoly(var_x());
    const RatPoly y = to_ratpoly(var_y());
    const RatPoly one_minus_x = RatPoly(1) - x;
    RatPolySeries exp_y(order), den(order);
    RatPoly y_pow(1), x_pow(1);
    Rational inv_fact(1);
    for (int n = 0; n <= order; ++n) {
        if (n > 0) {
            inv_fact /= n;
            y_pow *= y;
            x_pow *= x;
        }
        exp_y[n] = RatPoly(inv_fact) * y_pow;
        // (x^n - x)/n!, divided by the common factor (1 - x).
        const auto q = ((x_pow - x) * RatPoly(inv_fact)).exact_divide(one_minus_x);
        if (!q) {
            throw std::logic_error("exponential denominator not divisible by 1-x");
        }
        den[n] = *q;
    }
    den[0] = RatPoly(1);
    return exp_y * series_recip(den);
}

RationalSeries rz_series(int order)
{
    require_closed_form(order);
    RationalSeries sum(order);
    Rational fact(1);
    for (int m = 0; m <= order; ++m) {
        if (m > 0) {
            fact *= m;
        }
        RationalSeries den = RationalSeries::one(order);
        for (int k = 0; k <= m / 2; ++k) {
            RationalSeries factor = RationalSeries::one(order);
            const int a = m - 2 * k + 1;
            if (order >= 2) {
                factor[2] = Rational(a * a);
            }
            den = den * factor;
        }
        sum = sum + (fact * series_recip(den)).shifted(m);
    }
    return sum;
}

Int parity_formula(int n)
{
    require_closed_form(n);
    Rational total(0);
    for (int m = 0; m <= n; ++m) {
        if ((n - m) % 2 != 0) {
            continue;
        }
        const int hm = m / 2;
        Rational inner(0);
        for (int k = 0; k <= hm; ++k) {
            const Int num = sign_of((n - m) / 2 + k) * boost::multiprecision::pow(Int(m - 2 * k + 1), 2 * (n / 2));
            const Int den = factorial(k) * factorial(hm - k) * rising(m - 2 * k + 2, k)
                            * rising((m + 1) / 2 - k + 1, hm - k);
            inner += Rational(num, den);
        }
        total += Rational(factorial(m)) / rational_power(Rational(4), hm) * inner;
    }
    if (boost::multiprecision::denominator(total) != 1) {
        throw std::logic_error("parity formula did not produce an integer");
    }
    return boost::multiprecision::numerator(total);
}

TruncSeries<RationalFunctionQ> hrz_series(int order)
{
    require_closed_form(order);
    using Series = TruncSeries<RationalFunctionQ>;
    Series sum(order);
    for (int m = 0; m <= order; ++m) {
        Series den = Series::one(order);
        for (int k = 0; k <= m / 2; ++k) {
            const int a = m - 2 * k + 1;
            Series factor = Series::constant(order, rf(var_q(a)));
            if (order >= 2) {
                const LaurentPoly b = q_bracket(static_cast<unsigned>(a));
                factor[2] = rf(b * b);
            }
            den = den * factor;
        }
        const RationalFunctionQ c = rf(var_q(m + 1) * q_factorial(static_cast<unsigned>(m)));
        sum = sum + (c * series_recip(den)).shifted(m);
    }
    return sum;
}

LaurentPoly q_parity_formula(int n)
{
    require_closed_form(n);
    // Every summand denominator is a product of binomials 1 - q^e. Summands
    // are brought over the common multiple with the largest multiplicity of
    // each e, and the total numerator must then divide exactly.
    struct Summand {
        LaurentPoly num;
        std::map<int, int> den; // e -> multiplicity of (1 - q^e)
    };
    std::vector<Summand> summands;
    std::map<int, int> common;
    const LaurentPoly one_minus_q = LaurentPoly(1) - var_q();
    auto add_pochhammer = [](std::map<int, int> &den, int base, int k) {
        for (int i = 0; i < k; ++i) {
            ++den[base + 2 * i];
        }
    };
    for (int m = 0; m <= n; ++m) {
        if ((n - m) % 2 != 0) {
            continue;
        }
        const int hm = m / 2;
        const LaurentPoly mf = q_factorial(static_cast<unsigned>(m));
        for (int k = 0; k <= hm; ++k) {
            const int a = k * k + k * (n - m + 1) - (n - m) / 2 + hm * hm - m * (n / 2);
            Summand s;
            s.num = LaurentPoly(sign_of((n - m) / 2 + k)) * mf * one_minus_q.pow(2 * hm)
                    * q_bracket(static_cast<unsigned>(m - 2 * k + 1)).pow(2 * (n / 2)) * var_q(a);
            add_pochhammer(s.den, 2, k);
            add_pochhammer(s.den, 2, hm - k);
            add_pochhammer(s.den, 2 * (m - 2 * k + 2), k);
            add_pochhammer(s.den, 2 * ((m + 1) / 2 - k + 1), hm - k);
            if (s.den.contains(0)) {
                throw std::logic_error("zero denominator in summand m=" + std::to_string(m) + " k=" + std::to_string(k));
            }
            for (const auto &[e, c] : s.den) {
                common[e] = std::max(common[e], c);
            }
            summands.push_back(std::move(s));
        }
    }
    auto binomial = [](int e) { return LaurentPoly(1) - var_q(e); };
    LaurentPoly::Accumulator acc;
    for (const auto &s : summands) {
        LaurentPoly term = s.num;
        for (const auto &[e, c] : common) {
            const auto it = s.den.find(e);
            const int missing = c - (it == s.den.end() ? 0 : it->second);
            if (missing > 0) {
                term *= binomial(e).pow(static_cast<unsigned>(missing));
            }
        }
        acc.add(term);
    }
    LaurentPoly total = acc.finish();
    for (const auto &[e, c] : common) {
        for (int i = 0; i < c; ++i) {
            auto q = total.exact_divide(binomial(e));
            if (!q) {
                throw std::logic_error("q-parity formula did not reduce to a polynomial at n=" + std::to_string(n));
            }
            total = std::move(*q);
        }
    }
    return total;
}

nlohmann::json EulerTable::to_json() const
{
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto &r : rows) {
        rows_json.push_back({{"n", r.n},
                             {"E", r.e.str()},
                             {"E_pq", pqeuler::to_json(r.e_pq)},
                             {"E_q", pqeuler::to_json(r.e_q)},
                             {"E_star_q", pqeuler::to_json(r.e_star_q)}});
    }
    return {{"method", std::string(euler_method_name(method))}, {"rows", rows_json}};
}

EulerTable euler_table(int max_n, EulerMethod method)
{
    require_nonnegative(max_n);
    EulerTable t;
    t.method = method;
    for (int n = 0; n <= max_n; ++n) {
        EulerRow r;
        r.n = n;
        r.e_pq = e_pq(n, method);
        r.e_q = r.e_pq.substitute({{Var::p, LaurentPoly(1)}});
        r.e_star_q = r.e_pq.substitute({{Var::p, var_q(2)}});
        const auto c = r.e_q.substitute({{Var::q, LaurentPoly(1)}}).to_constant();
        r.e = c ? *c : Int(0);
        t.rows.push_back(std::move(r));
    }
    return t;
}

} // namespace pqeuler
