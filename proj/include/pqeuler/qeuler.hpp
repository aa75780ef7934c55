#ifndef PQEULER_QEULER_HPP
#define PQEULER_QEULER_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <pqeuler/bigint.hpp>
#include <pqeuler/families.hpp>
#include <pqeuler/polynomial.hpp>
#include <pqeuler/ratfunc.hpp>
#include <pqeuler/series.hpp>

namespace pqeuler
{

enum class EulerMethod { enumerate, cf };

std::string_view euler_method_name(EulerMethod m);

inline constexpr int closed_form_cap = 12;

// E_n(p,q): sum of p^thot q^toht over A_n for odd n, p^thto q^toht for even n.
LaurentPoly e_pq(int n, EulerMethod method = EulerMethod::cf, int cap = default_enumeration_cap);

// E_n(q) = E_n(1,q), E*_n(q) = E_n(q^2,q), E_n = E_n(1,1).
LaurentPoly e_q(int n, EulerMethod method = EulerMethod::cf, int cap = default_enumeration_cap);
LaurentPoly e_star_q(int n, EulerMethod method = EulerMethod::cf, int cap = default_enumeration_cap);
Int e_int(int n, EulerMethod method = EulerMethod::cf, int cap = default_enumeration_cap);

// (1-x) exp(yt) / (exp(xt) - x exp(t)) to order N; n! [t^n] is the
// exc/fix polynomial of S_n.
RatPolySeries egf_exc_fix(int order);

// sum_m m! t^m / prod_{k <= m/2} (1 + (m-2k+1)^2 t^2), m <= order.
RationalSeries rz_series(int order);

// E_n by the parity-independent double sum.
Int parity_formula(int n);

// sum_m q^{m+1} [m]_q! t^m / prod_{k <= m/2} (q^{m-2k+1} + [m-2k+1]_q^2 t^2).
TruncSeries<RationalFunctionQ> hrz_series(int order);

// E_n(q) by the q-analogue of the double sum. Throws std::logic_error if the
// sum does not reduce to a polynomial.
LaurentPoly q_parity_formula(int n);

struct EulerRow {
    int n = 0;
    Int e;
    LaurentPoly e_pq, e_q, e_star_q;
};

struct EulerTable {
    EulerMethod method = EulerMethod::cf;
    std::vector<EulerRow> rows;

    nlohmann::json to_json() const;
};

EulerTable euler_table(int max_n, EulerMethod method = EulerMethod::cf);

} // namespace pqeuler

#endif
