#ifndef PQEULER_CONTFRAC_HPP
#define PQEULER_CONTFRAC_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <pqeuler/lattice.hpp>
#include <pqeuler/polynomial.hpp>
#include <pqeuler/series.hpp>

namespace pqeuler
{

// 1 / (1 - b(0) u - ac(0) u^2 / (1 - b(1) u - ac(1) u^2 / ...)) with u = t^power.
// ac(h) is the product a_h c_{h+1}.
struct JFraction {
    HeightWeight b;
    HeightWeight ac;
    int power = 1;
    int depth = 0; // 0 selects the default ceil(N / (2 power)) + 1

    int depth_for(int order) const;
};

// 1 / (1 - c(1) u / (1 - c(2) u / ...)) with u = t^power, levels k >= 1.
struct SFraction {
    HeightWeight c;
    int power = 1;
    int depth = 0; // 0 selects ceil(N / power) + 1

    int depth_for(int order) const;
};

LaurentSeries expand_j(const JFraction &jf, int order);
LaurentSeries expand_s(const SFraction &sf, int order);

// b(0) = c1, b(h) = c(2h) + c(2h+1), ac(h) = c(2h+1) c(2h+2).
JFraction contract_even(const SFraction &sf);

// The S-fraction equals 1 + lead * u * J.
struct OddContraction {
    LaurentPoly lead;
    JFraction j;
};

// lead = c1, b(h) = c(2h+1) + c(2h+2), ac(h) = c(2h+2) c(2h+3).
OddContraction contract_odd(const SFraction &sf);

LaurentSeries expand_odd(const OddContraction &oc, int order);

// Coefficient-wise substitution of variables.
JFraction substitute(const JFraction &jf, const std::map<Var, LaurentPoly> &images);
SFraction substitute(const SFraction &sf, const std::map<Var, LaurentPoly> &images);

// Path weights whose weighted sums give the coefficients: the t^{power n}
// coefficient is the motzkin sum of length n (J) or the dyck sum of length 2n (S).
WeightSpec lattice_spec(const JFraction &jf);
WeightSpec lattice_spec(const SFraction &sf);

using Fraction = std::variant<JFraction, SFraction>;

// A named fraction. The generating function is t^shift times the fraction.
struct Preset {
    std::string name;
    Fraction fraction;
    int shift = 0;
};

class UnknownPreset : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// tangent-pq, secant-pq, tangent-q, secant-q, tangent-qstar, secant-qstar,
// thm4.1, cf-A, cf-SZ, cf-A-tan, cf-A-sec, cf-SZ-tan, cf-SZ-sec.
Preset preset(std::string_view name);
const std::vector<std::string> &preset_names();

// The S-fraction that contracts to a specialization preset (cf-A-tan,
// cf-A-sec, cf-SZ-tan, cf-SZ-sec); tangent forms use the odd contraction.
SFraction specialization_sfraction(std::string_view name);

LaurentSeries expand(const Fraction &f, int order);
LaurentSeries expand(const Preset &p, int order);

// Same expansion computed by lattice.weighted_sum order by order.
LaurentSeries expand_by_paths(const Preset &p, int order, SumMethod method);

} // namespace pqeuler

#endif
