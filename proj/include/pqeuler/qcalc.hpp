#ifndef PQEULER_QCALC_HPP
#define PQEULER_QCALC_HPP

#include <pqeuler/polynomial.hpp>

namespace pqeuler
{

// [n]_{a,b} = a^{n-1} + a^{n-2} b + ... + b^{n-1}; zero for n = 0.
LaurentPoly bracket(unsigned n, const LaurentPoly &a, const LaurentPoly &b);

// [n]_{p,q}.
LaurentPoly pq_bracket(unsigned n);

// [n]_q = 1 + q + ... + q^{n-1}.
LaurentPoly q_bracket(unsigned n);

// [n]_q! = [1]_q [2]_q ... [n]_q.
LaurentPoly q_factorial(unsigned n);

// prod_{i=0}^{k-1} (1 - q^{base + i*step}); e.g. (q^2;q^2)_k = q_pochhammer(2, 2, k).
LaurentPoly q_pochhammer(int base_exponent, int step_exponent, unsigned k);

} // namespace pqeuler

#endif
