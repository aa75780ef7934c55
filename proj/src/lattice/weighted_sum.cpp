#include <pqeuler/lattice.hpp>

#include <map>
#include <stdexcept>
#include <tuple>

namespace pqeuler
{

namespace
{

LaurentPoly mono(int x, int y, int p, int q, int s)
{
    return LaurentPoly::monomial(Int(1), Exponents{x, y, p, q, s});
}

bool is_dyck_kind(PathKind kind)
{
    return kind == PathKind::dyck || kind == PathKind::diagramme || kind == PathKind::restricted_diagramme;
}

void check_length(PathKind kind, int length, int cap)
{
    if (length < 0) {
        throw std::invalid_argument("negative path length");
    }
    if (is_dyck_kind(kind) && length % 2 != 0) {
        throw std::invalid_argument("Dyck-type objects need even length, got " + std::to_string(length));
    }
    if (length > cap) {
        throw std::length_error("enumeration too large: length " + std::to_string(length) + " exceeds cap "
                                + std::to_string(cap));
    }
}

class WeightCache
{
public:
    WeightCache(PathKind kind, const WeightSpec &spec) : kind_(kind), spec_(spec) {}

    const LaurentPoly &single(Step s, int h, int xi)
    {
        const auto key = std::make_tuple(static_cast<char>(s), h, xi);
        auto it = single_.find(key);
        if (it == single_.end()) {
            it = single_.emplace(key, spec_.step_weight(s, h, xi)).first;
        }
        return it->second;
    }

    // Sum of the weights over every admissible xi.
    const LaurentPoly &aggregate(Step s, int h)
    {
        const auto key = std::make_pair(static_cast<char>(s), h);
        auto it = aggregate_.find(key);
        if (it == aggregate_.end()) {
            const auto [lo, hi] = xi_range(kind_, s, h);
            LaurentPoly::Accumulator acc;
            for (int v = lo; v <= hi; ++v) {
                acc.add(single(s, h, v));
            }
            it = aggregate_.emplace(key, acc.finish()).first;
        }
        return it->second;
    }

private:
    PathKind kind_;
    const WeightSpec &spec_;
    std::map<std::tuple<char, int, int>, LaurentPoly> single_;
    std::map<std::pair<char, int>, LaurentPoly> aggregate_;
};

LaurentPoly sum_by_enumeration(PathKind kind, int length, WeightCache &cache)
{
    const bool allow_level = !is_dyck_kind(kind);
    LaurentPoly::Accumulator acc;
    std::vector<LaurentPoly> prefix(static_cast<std::size_t>(length) + 1);
    prefix[0] = LaurentPoly(1);

    std::function<void(int, int)> rec = [&](int pos, int h) {
        const auto &here = prefix[static_cast<std::size_t>(pos)];
        if (pos == length) {
            acc.add(here);
            return;
        }
        if (here.is_zero()) {
            return;
        }
        const int remaining = length - pos;
        for (Step s : {Step::Up, Step::Level, Step::Down}) {
            if ((s == Step::Level && !allow_level) || (s == Step::Down && h == 0)) {
                continue;
            }
            const int next = h + (s == Step::Up ? 1 : s == Step::Down ? -1 : 0);
            if (next > remaining - 1) {
                continue;
            }
            const auto [lo, hi] = xi_range(kind, s, h);
            for (int v = lo; v <= hi; ++v) {
                prefix[static_cast<std::size_t>(pos) + 1] = here * cache.single(s, h, v);
                rec(pos + 1, next);
            }
        }
    };
    rec(0, 0);
    return acc.finish();
}

LaurentPoly sum_by_transfer(PathKind kind, int length, WeightCache &cache)
{
    const bool allow_level = !is_dyck_kind(kind);
    const auto max_height = static_cast<std::size_t>(length / 2 + 1);
    std::vector<LaurentPoly> cur(max_height + 1), next(max_height + 1);
    cur[0] = LaurentPoly(1);
    for (int pos = 0; pos < length; ++pos) {
        const int remaining = length - pos;
        std::fill(next.begin(), next.end(), LaurentPoly());
        for (std::size_t h = 0; h <= max_height; ++h) {
            if (cur[h].is_zero()) {
                continue;
            }
            const int hi = static_cast<int>(h);
            if (hi + 1 <= remaining - 1) {
                next[h + 1] += cur[h] * cache.aggregate(Step::Up, hi);
            }
            if (allow_level && hi <= remaining - 1) {
                next[h] += cur[h] * cache.aggregate(Step::Level, hi);
            }
            if (h > 0) {
                next[h - 1] += cur[h] * cache.aggregate(Step::Down, hi);
            }
        }
        std::swap(cur, next);
    }
    return cur[0];
}

} // namespace

LaurentPoly WeightSpec::step_weight(Step s, int h, int xi) const
{
    if (valuation) {
        return valuation(s, h, xi);
    }
    switch (s) {
    case Step::Up:
        return up(h);
    case Step::Level:
        return level ? level(h) : LaurentPoly();
    case Step::Down:
        return down(h);
    }
    return LaurentPoly();
}

WeightSpec WeightSpec::heights(HeightWeight a, HeightWeight b, HeightWeight c)
{
    WeightSpec w;
    w.up = std::move(a);
    w.level = std::move(b);
    w.down = std::move(c);
    return w;
}

WeightSpec WeightSpec::with_valuation(StepValuation v)
{
    WeightSpec w;
    w.valuation = std::move(v);
    return w;
}

StepValuation fv_valuation()
{
    return [](Step, int h, int xi) { return mono(0, 0, h - xi, xi, 0); };
}

StepValuation fv_star_valuation()
{
    return [](Step s, int h, int xi) {
        if (s == Step::Down) {
            return mono(0, 0, h - 1 - xi, xi, 0);
        }
        return mono(0, 0, h - xi, xi, 0);
    };
}

StepValuation quintuple_valuation()
{
    return [](Step s, int h, int xi) {
        switch (s) {
        case Step::Up:
            return mono(1, 0, h - xi, xi, h - xi + 2 * h + 1);
        case Step::Level:
            if (xi == 0) {
                return mono(1, 1, h, 0, 2 * h);
            }
            if (xi > 0) {
                return mono(1, 0, h - xi, xi, h - xi + h);
            }
            return mono(0, 0, h + xi, -xi - 1, h + xi + h);
        case Step::Down:
            return mono(0, 0, h - 1 - xi, xi, h - 1 - xi);
        }
        return LaurentPoly();
    };
}

LaurentPoly weighted_sum(PathKind kind, int length, const WeightSpec &spec, SumMethod method, int cap)
{
    check_length(kind, length, cap);
    WeightCache cache(kind, spec);
    if (method == SumMethod::enumerate) {
        return sum_by_enumeration(kind, length, cache);
    }
    return sum_by_transfer(kind, length, cache);
}

} // namespace pqeuler
