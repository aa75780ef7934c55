#ifndef PQEULER_STATS_HPP
#define PQEULER_STATS_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include <pqeuler/permutation.hpp>

namespace pqeuler
{

// Every permutation statistic used in the library, in StatRecord field order.
enum class Stat {
    n,
    exc,
    wex,
    fix,
    des,
    ndes,
    maj,
    inv,
    cros,
    nest,
    toht, // occurrences of 31-2
    thto, // occurrences of 2-31
    thot, // occurrences of 2-13
    fmax,
    mad,
    suc,
    adj,
};

inline constexpr std::size_t num_stats = 17;

std::string_view stat_name(Stat s);
std::optional<Stat> parse_stat(std::string_view name);

struct StatRecord {
    std::array<int, num_stats> values{};

    int operator[](Stat s) const { return values[static_cast<std::size_t>(s)]; }
    int &operator[](Stat s) { return values[static_cast<std::size_t>(s)]; }

    friend bool operator==(const StatRecord &, const StatRecord &) = default;

    // "n=3 exc=1 wex=2 ..." in field order.
    std::string to_string() const;
    nlohmann::json to_json() const;
};

StatRecord basic_stats(const Permutation &sigma);

// Crossing and nesting indices on k; summing over k gives cros and nest.
int cros_k(const Permutation &sigma, int k);
int nest_k(const Permutation &sigma, int k);

enum class Pattern { toht, thto, thot };

// Embracing counts anchored at the letter k:
//   toht_k = #{l : l+1 < pos(k), sigma_l > k > sigma_{l+1}}
//   thto_k = #{l : pos(k) < l,   sigma_l > k > sigma_{l+1}}
//   thot_k = #{l : pos(k) < l,   sigma_l < k < sigma_{l+1}}
int pattern_k(const Permutation &sigma, int k, Pattern which);

// Sizes of the four inversion classes Inv_k^(1..4) related to k.
struct InvParts {
    int i1 = 0, i2 = 0, i3 = 0, i4 = 0;
    int total() const { return i1 + i2 + i3 + i4; }
    friend bool operator==(const InvParts &, const InvParts &) = default;
};

InvParts inv_parts(const Permutation &sigma, int k);

enum class CyclicType { valley, peak, double_ascent, double_descent, fixed };

std::string_view cyclic_type_name(CyclicType t);

CyclicType cyclic_type(const Permutation &sigma, int k);

} // namespace pqeuler

#endif
