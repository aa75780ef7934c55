#include <pqeuler/stats.hpp>

#include <stdexcept>

namespace pqeuler
{

namespace
{

constexpr std::array<std::string_view, num_stats> stat_names{
    "n", "exc", "wex", "fix", "des", "ndes", "maj", "inv", "cros",
    "nest", "toht", "thto", "thot", "fmax", "mad", "suc", "adj",
};

void require_index(const Permutation &sigma, int k)
{
    if (k < 1 || k > sigma.size()) {
        throw std::out_of_range("index " + std::to_string(k) + " outside [" + std::to_string(sigma.size()) + "]");
    }
}

} // namespace

std::string_view stat_name(Stat s)
{
    return stat_names[static_cast<std::size_t>(s)];
}

std::optional<Stat> parse_stat(std::string_view name)
{
    for (std::size_t i = 0; i < num_stats; ++i) {
        if (stat_names[i] == name) {
            return static_cast<Stat>(i);
        }
    }
    return std::nullopt;
}

std::string StatRecord::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < num_stats; ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += std::string(stat_names[i]) + "=" + std::to_string(values[i]);
    }
    return out;
}

nlohmann::json StatRecord::to_json() const
{
    nlohmann::json j = nlohmann::json::object();
    for (std::size_t i = 0; i < num_stats; ++i) {
        j[std::string(stat_names[i])] = values[i];
    }
    return j;
}

StatRecord basic_stats(const Permutation &sigma)
{
    const int n = sigma.size();
    auto w = [&](int i) { return sigma(i); };
    StatRecord r;
    r[Stat::n] = n;
    int running_max = 0;
    for (int i = 1; i <= n; ++i) {
        if (w(i) > i) {
            ++r[Stat::exc];
        }
        if (w(i) >= i) {
            ++r[Stat::wex];
        }
        if (w(i) == i) {
            ++r[Stat::fix];
        }
        const bool descent = i < n && w(i) > w(i + 1);
        if (descent) {
            ++r[Stat::des];
            r[Stat::maj] += i;
        }
        running_max = std::max(running_max, w(i));
        if (!descent && w(i) == running_max) {
            ++r[Stat::fmax];
        }
        const int next_suc = i < n ? w(i + 1) : n + 1;
        const int next_adj = i < n ? w(i + 1) : 0;
        if (next_suc == w(i) + 1) {
            ++r[Stat::suc];
        }
        if (next_adj == w(i) - 1) {
            ++r[Stat::adj];
        }
        for (int j = i + 1; j <= n; ++j) {
            if (w(i) > w(j)) {
                ++r[Stat::inv];
            }
            // crossing: i < j <= w(i) < w(j)  or  w(i) < w(j) < i < j
            if ((j <= w(i) && w(i) < w(j)) || (w(i) < w(j) && w(j) < i)) {
                ++r[Stat::cros];
            }
            // nesting: i < j <= w(j) < w(i)  or  w(j) < w(i) < i < j
            if ((j <= w(j) && w(j) < w(i)) || (w(j) < w(i) && w(i) < i)) {
                ++r[Stat::nest];
            }
        }
    }
    r[Stat::ndes] = n - r[Stat::des];
    // Vincular patterns; the undashed pair is adjacent.
    for (int i = 1; i + 1 <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            // 31-2: sigma_i > sigma_j > sigma_{i+1}, j > i+1
            if (j > i + 1 && w(i) > w(j) && w(j) > w(i + 1)) {
                ++r[Stat::toht];
            }
            // 2-31: sigma_i > sigma_j > sigma_{i+1}, j < i
            if (j < i && w(i) > w(j) && w(j) > w(i + 1)) {
                ++r[Stat::thto];
            }
            // 2-13: sigma_i < sigma_j < sigma_{i+1}, j < i
            if (j < i && w(i) < w(j) && w(j) < w(i + 1)) {
                ++r[Stat::thot];
            }
        }
    }
    r[Stat::mad] = r[Stat::des] + r[Stat::toht] + 2 * r[Stat::thto];
    return r;
}

int cros_k(const Permutation &sigma, int k)
{
    require_index(sigma, k);
    const int sk = sigma(k);
    int count = 0;
    for (int l = 1; l <= sigma.size(); ++l) {
        const int sl = sigma(l);
        if ((l < k && k <= sl && sl < sk) || (sk < sl && sl < k && k < l)) {
            ++count;
        }
    }
    return count;
}

int nest_k(const Permutation &sigma, int k)
{
    require_index(sigma, k);
    const int sk = sigma(k);
    int count = 0;
    for (int l = 1; l <= sigma.size(); ++l) {
        const int sl = sigma(l);
        if ((l < k && k <= sk && sk < sl) || (sl < sk && sk < k && k < l)) {
            ++count;
        }
    }
    return count;
}

int pattern_k(const Permutation &sigma, int k, Pattern which)
{
    require_index(sigma, k);
    int pos = 0;
    for (int i = 1; i <= sigma.size(); ++i) {
        if (sigma(i) == k) {
            pos = i;
        }
    }
    int count = 0;
    for (int l = 1; l < sigma.size(); ++l) {
        const int a = sigma(l), b = sigma(l + 1);
        switch (which) {
        case Pattern::toht:
            count += (l + 1 < pos && a > k && k > b) ? 1 : 0;
            break;
        case Pattern::thto:
            count += (pos < l && a > k && k > b) ? 1 : 0;
            break;
        case Pattern::thot:
            count += (pos < l && a < k && k < b) ? 1 : 0;
            break;
        }
    }
    return count;
}

InvParts inv_parts(const Permutation &sigma, int k)
{
    require_index(sigma, k);
    const int n = sigma.size();
    InvParts parts;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const int si = sigma(i), sj = sigma(j);
            if (sj >= si) {
                continue;
            }
            if (j <= sj) {
                parts.i1 += (k == j) ? 1 : 0;
            } else if (sj <= i && si < i) {
                parts.i2 += (k == i) ? 1 : 0;
            } else if (sj <= i && i <= si) {
                parts.i3 += (k == i) ? 1 : 0;
            } else {
                // i < sigma_j < j
                parts.i4 += (k == sj) ? 1 : 0;
            }
        }
    }
    return parts;
}

std::string_view cyclic_type_name(CyclicType t)
{
    switch (t) {
    case CyclicType::valley:
        return "cyclic-valley";
    case CyclicType::peak:
        return "cyclic-peak";
    case CyclicType::double_ascent:
        return "cyclic-double-ascent";
    case CyclicType::double_descent:
        return "cyclic-double-descent";
    case CyclicType::fixed:
        return "fixed";
    }
    return "";
}

CyclicType cyclic_type(const Permutation &sigma, int k)
{
    require_index(sigma, k);
    const int after = sigma(k);
    int before = 0;
    for (int i = 1; i <= sigma.size(); ++i) {
        if (sigma(i) == k) {
            before = i;
        }
    }
    if (after == k) {
        return CyclicType::fixed;
    }
    if (before > k && k < after) {
        return CyclicType::valley;
    }
    if (before < k && k > after) {
        return CyclicType::peak;
    }
    if (before < k && k < after) {
        return CyclicType::double_ascent;
    }
    return CyclicType::double_descent;
}

} // namespace pqeuler
