#include <pqeuler/families.hpp>

#include <array>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include <pqeuler/concurrency.hpp>

namespace pqeuler
{

namespace
{

constexpr std::array<std::pair<std::string_view, Family>, 7> family_names{{
    {"S", Family::S},
    {"D", Family::D},
    {"Dstar", Family::Dstar},
    {"A", Family::A},
    {"Astar", Family::Astar},
    {"Aprime", Family::Aprime},
    {"Adoubleprime", Family::Adoubleprime},
}};

bool falling_alternating(const Permutation &s)
{
    for (int i = 1; i < s.size(); ++i) {
        const bool down = s(i) > s(i + 1);
        if (down != (i % 2 == 1)) {
            return false;
        }
    }
    return true;
}

bool rising_alternating(const Permutation &s)
{
    for (int i = 1; i < s.size(); ++i) {
        const bool up = s(i) < s(i + 1);
        if (up != (i % 2 == 1)) {
            return false;
        }
    }
    return true;
}

bool coderangement(const Permutation &s)
{
    int running_max = 0;
    for (int i = 1; i <= s.size(); ++i) {
        running_max = std::max(running_max, s(i));
        const bool descent = i < s.size() && s(i) > s(i + 1);
        if (!descent && s(i) == running_max) {
            return false;
        }
    }
    return true;
}

void check_size(Family f, int n)
{
    if (n < 0 || (n == 0 && f != Family::S)) {
        throw std::invalid_argument("family " + std::string(family_name(f)) + " needs n >= 1, got "
                                    + std::to_string(n));
    }
}

} // namespace

std::string_view family_name(Family f)
{
    for (const auto &[name, fam] : family_names) {
        if (fam == f) {
            return name;
        }
    }
    return "";
}

std::optional<Family> parse_family(std::string_view name)
{
    for (const auto &[n, fam] : family_names) {
        if (n == name) {
            return fam;
        }
    }
    return std::nullopt;
}

bool in_family(Family f, const Permutation &sigma)
{
    switch (f) {
    case Family::S:
        return true;
    case Family::D:
        for (int i = 1; i <= sigma.size(); ++i) {
            if (sigma(i) == i) {
                return false;
            }
        }
        return true;
    case Family::Dstar:
        return coderangement(sigma);
    case Family::A:
        return falling_alternating(sigma);
    case Family::Astar:
        return rising_alternating(sigma);
    case Family::Aprime:
        return sigma.size() % 2 == 1 && falling_alternating(sigma);
    case Family::Adoubleprime:
        return sigma.size() % 2 == 0 && falling_alternating(sigma);
    }
    return false;
}

void for_each_in_family(Family f, int n, int first, const std::function<void(const Permutation &)> &visit)
{
    check_size(f, n);
    if (first < 1 || first > n) {
        throw std::invalid_argument("first letter out of range");
    }
    std::vector<int> w;
    w.push_back(first);
    for (int v = 1; v <= n; ++v) {
        if (v != first) {
            w.push_back(v);
        }
    }
    Permutation sigma(std::move(w));
    do {
        if (sigma(1) != first) {
            break;
        }
        if (in_family(f, sigma)) {
            visit(sigma);
        }
    } while (sigma.advance());
}

void for_each_in_family(Family f, int n, const std::function<void(const Permutation &)> &visit)
{
    check_size(f, n);
    if (n == 0) {
        visit(Permutation{});
        return;
    }
    for (int first = 1; first <= n; ++first) {
        for_each_in_family(f, n, first, visit);
    }
}

std::vector<Permutation> family_members(Family f, int n)
{
    std::vector<Permutation> out;
    for_each_in_family(f, n, [&](const Permutation &s) { out.push_back(s); });
    return out;
}

LaurentPoly stat_polynomial(Family f, int n, const Weight &w, int cap)
{
    check_size(f, n);
    if (n > cap) {
        throw EnumerationTooLarge("enumeration too large: n = " + std::to_string(n) + " exceeds cap "
                                  + std::to_string(cap));
    }
    std::unordered_map<std::uint64_t, long long> total;
    std::mutex total_mutex;
    auto accumulate = [&](std::unordered_map<std::uint64_t, long long> &local, const Permutation &s) {
        Exponents e{};
        const int sign = w.evaluate(basic_stats(s), e);
        local[detail::pack(e)] += sign;
    };
    if (n == 0) {
        accumulate(total, Permutation{});
    } else {
        parallel_for(n, [&](int i) {
            std::unordered_map<std::uint64_t, long long> local;
            for_each_in_family(f, n, i + 1, [&](const Permutation &s) { accumulate(local, s); });
            std::lock_guard lock(total_mutex);
            for (const auto &[k, c] : local) {
                total[k] += c;
            }
        });
    }
    std::vector<LaurentPoly::term_type> terms;
    terms.reserve(total.size());
    for (const auto &[k, c] : total) {
        if (c != 0) {
            terms.emplace_back(k, Int(c));
        }
    }
    return LaurentPoly::from_terms(std::move(terms));
}

} // namespace pqeuler
