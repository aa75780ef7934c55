#ifndef PQEULER_FAMILIES_HPP
#define PQEULER_FAMILIES_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <pqeuler/permutation.hpp>
#include <pqeuler/polynomial.hpp>
#include <pqeuler/stats.hpp>

namespace pqeuler
{

// S: all permutations; D: derangements; Dstar: coderangements (no
// foremaximum); A: falling alternating (s1 > s2 < s3 > ...); Astar:
// alternating (s1 < s2 > s3 < ...); Aprime / Adoubleprime: the members of A
// ending with an ascent / descent, i.e. A for odd / even n.
enum class Family { S, D, Dstar, A, Astar, Aprime, Adoubleprime };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

bool in_family(Family f, const Permutation &sigma);

inline constexpr int default_enumeration_cap = 11;

class EnumerationTooLarge : public std::length_error
{
public:
    using std::length_error::length_error;
};

// Visits the members of the family in lexicographic order.
void for_each_in_family(Family f, int n, const std::function<void(const Permutation &)> &visit);

// Visits only the members whose first letter is `first` (1 <= first <= n).
void for_each_in_family(Family f, int n, int first, const std::function<void(const Permutation &)> &visit);

std::vector<Permutation> family_members(Family f, int n);

// A monomial weight in the statistics, e.g. x^wex*y^fix*q^cros*p^nest*s^inv
// or (-1/q)^exc*q^(toht+2*thto). Each factor raises a signed unit monomial
// to an integer linear combination of statistics.
class Weight
{
public:
    struct Factor {
        int sign = 1;          // base coefficient, +1 or -1
        Exponents base{};      // base monomial
        int constant = 0;      // constant part of the exponent
        std::vector<std::pair<Stat, int>> terms; // stat coefficients of the exponent
    };

    Weight() = default;
    explicit Weight(std::vector<Factor> factors) : factors_(std::move(factors)) {}

    static Weight parse(std::string_view text);

    // The quintuple weight x^wex y^fix q^cros p^nest s^inv.
    static Weight quintuple();

    // Evaluates to sign * monomial; returns the sign, writes the exponents.
    int evaluate(const StatRecord &r, Exponents &out) const;

    LaurentPoly evaluate(const StatRecord &r) const;

    const std::vector<Factor> &factors() const { return factors_; }

private:
    std::vector<Factor> factors_;
};

// Sum over the family of the weight; parallel over first letters.
LaurentPoly stat_polynomial(Family f, int n, const Weight &w, int cap = default_enumeration_cap);

} // namespace pqeuler

#endif
