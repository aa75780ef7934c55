#ifndef PQEULER_LATTICE_HPP
#define PQEULER_LATTICE_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <pqeuler/polynomial.hpp>

namespace pqeuler
{

enum class Step : char { Up = 'U', Level = 'L', Down = 'D' };

// A Motzkin path: y_0 = y_n = 0, y_i >= 0, |y_i - y_{i-1}| <= 1.
// The height of step k (1-based) is its starting ordinate y_{k-1}.
class MotzkinPath
{
public:
    MotzkinPath() = default;
    // Throws std::invalid_argument if the steps do not form a Motzkin path.
    explicit MotzkinPath(std::vector<Step> steps);

    static MotzkinPath parse(std::string_view text);

    int length() const { return static_cast<int>(steps_.size()); }
    const std::vector<Step> &steps() const { return steps_; }
    Step step(int k) const { return steps_.at(static_cast<std::size_t>(k - 1)); }

    // h_k = y_{k-1}, for k in [1, length].
    int height(int k) const { return heights_.at(static_cast<std::size_t>(k - 1)); }

    bool is_dyck() const;

    std::string to_string() const;

    friend bool operator==(const MotzkinPath &a, const MotzkinPath &b) { return a.steps_ == b.steps_; }
    friend auto operator<=>(const MotzkinPath &a, const MotzkinPath &b) { return a.steps_ <=> b.steps_; }

private:
    std::vector<Step> steps_;
    std::vector<int> heights_;
};

// The decorated object families.
enum class PathKind { motzkin, dyck, diagramme, restricted_diagramme, laguerre };

std::string_view path_kind_name(PathKind k);
std::optional<PathKind> parse_path_kind(std::string_view name);

// Allowed range [lo, hi] of the choice xi_k for a step of the given type at
// height h. Undecorated kinds allow only 0.
std::pair<int, int> xi_range(PathKind kind, Step step, int h);

// A path with a choice sequence xi. For motzkin/dyck kinds xi is all zero.
struct DecoratedPath {
    MotzkinPath path;
    std::vector<int> xi;

    std::string to_string() const;
    friend auto operator<=>(const DecoratedPath &, const DecoratedPath &) = default;
};

// Dyck path diagramme: 0 <= xi_k <= h_k; restricted members (P*) also have
// xi_k < h_k on every down step.
struct DyckDiagramme {
    MotzkinPath path;
    std::vector<int> xi;
    bool restricted = false;

    bool is_valid() const;
    std::string to_string() const;
    friend bool operator==(const DyckDiagramme &, const DyckDiagramme &) = default;
    friend auto operator<=>(const DyckDiagramme &, const DyckDiagramme &) = default;
};

// Laguerre history: up 0..h, level -h..h, down 0..h-1.
struct LaguerreHistory {
    MotzkinPath path;
    std::vector<int> xi;

    bool is_valid() const;
    std::string to_string() const;
    friend bool operator==(const LaguerreHistory &, const LaguerreHistory &) = default;
    friend auto operator<=>(const LaguerreHistory &, const LaguerreHistory &) = default;
};

inline constexpr int default_path_cap = 12;

// Visits every object of the kind and length once, depth first, trying U,
// L, D at each position and xi in increasing order.
void enumerate_paths(PathKind kind, int length, const std::function<void(const DecoratedPath &)> &visit,
                     int cap = default_path_cap);

std::vector<DecoratedPath> path_objects(PathKind kind, int length, int cap = default_path_cap);

using HeightWeight = std::function<LaurentPoly(int)>;
using StepValuation = std::function<LaurentPoly(Step, int h, int xi)>;

// Height-indexed step weights a(h) (up), b(h) (level), c(h) (down), or a
// xi-dependent valuation that takes precedence when set.
struct WeightSpec {
    HeightWeight up;
    HeightWeight level;
    HeightWeight down;
    StepValuation valuation;

    LaurentPoly step_weight(Step s, int h, int xi) const;

    // Pure a/b/c weights.
    static WeightSpec heights(HeightWeight a, HeightWeight b, HeightWeight c);
    static WeightSpec with_valuation(StepValuation v);
};

// Valuations attached to the decorated objects:
//   fv:        p^{h-xi} q^xi on every step (diagrammes)
//   fv_star:   up p^{h-xi} q^xi, down p^{h-1-xi} q^xi (restricted diagrammes)
//   quintuple: the Laguerre history valuation whose sum is the
//              x^wex y^fix q^cros p^nest s^inv generating polynomial.
StepValuation fv_valuation();
StepValuation fv_star_valuation();
StepValuation quintuple_valuation();

enum class SumMethod { enumerate, dp };

// Sum over objects of the product of step weights. The enumerate method
// visits each object; dp is a transfer over (position, height) with the
// xi-choices aggregated per step.
LaurentPoly weighted_sum(PathKind kind, int length, const WeightSpec &spec, SumMethod method,
                         int cap = default_path_cap);

} // namespace pqeuler

#endif
