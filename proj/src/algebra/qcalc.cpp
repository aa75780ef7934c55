#include <pqeuler/qcalc.hpp>

namespace pqeuler
{

LaurentPoly bracket(unsigned n, const LaurentPoly &a, const LaurentPoly &b)
{
    LaurentPoly sum;
    LaurentPoly bpow(1);
    for (unsigned i = 0; i < n; ++i) {
        sum += a.pow(n - 1 - i) * bpow;
        bpow *= b;
    }
    return sum;
}

LaurentPoly pq_bracket(unsigned n)
{
    return bracket(n, var_p(), var_q());
}

LaurentPoly q_bracket(unsigned n)
{
    LaurentPoly sum;
    for (unsigned i = 0; i < n; ++i) {
        sum += var_q(static_cast<int>(i));
    }
    return sum;
}

LaurentPoly q_factorial(unsigned n)
{
    LaurentPoly r(1);
    for (unsigned i = 2; i <= n; ++i) {
        r *= q_bracket(i);
    }
    return r;
}

LaurentPoly q_pochhammer(int base_exponent, int step_exponent, unsigned k)
{
    LaurentPoly r(1);
    for (unsigned i = 0; i < k; ++i) {
        r *= LaurentPoly(1) - var_q(base_exponent + static_cast<int>(i) * step_exponent);
    }
    return r;
}

} // namespace pqeuler
