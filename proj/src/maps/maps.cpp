#include <pqeuler/maps.hpp>

#include <pqeuler/families.hpp>
#include <pqeuler/stats.hpp>

#include <algorithm>

namespace pqeuler
{

namespace
{

DyckDiagramme fv_impl(const Permutation &sigma, int steps, bool restricted)
{
    const Permutation inv = sigma.inverse();
    std::vector<Step> path;
    std::vector<int> xi;
    for (int k = 1; k <= steps; ++k) {
        path.push_back(inv(k) % 2 == 0 ? Step::Up : Step::Down);
        xi.push_back(pattern_k(sigma, k, Pattern::toht));
    }
    return DyckDiagramme{MotzkinPath(std::move(path)), std::move(xi), restricted};
}

void require_alternating(const Permutation &sigma, bool odd)
{
    if (!in_family(Family::A, sigma)) {
        throw PreconditionError("not falling alternating: " + sigma.to_string());
    }
    if ((sigma.size() % 2 == 1) != odd) {
        throw PreconditionError(std::string("expected ") + (odd ? "odd" : "even") + " length: " + sigma.to_string());
    }
}

// Word with the sentinels at both ends.
std::vector<int> padded(const Permutation &sigma, int last)
{
    std::vector<int> w{0};
    w.insert(w.end(), sigma.word().begin(), sigma.word().end());
    w.push_back(last);
    return w;
}

// Position (1..n) of the largest double ascent or descent value, or 0.
int largest_double(const std::vector<int> &w)
{
    int best = 0;
    const int n = static_cast<int>(w.size()) - 2;
    for (int i = 1; i <= n; ++i) {
        const bool up = w[i - 1] < w[i] && w[i] < w[i + 1];
        const bool down = w[i - 1] > w[i] && w[i] > w[i + 1];
        if ((up || down) && (best == 0 || w[i] > w[best])) {
            best = i;
        }
    }
    return best;
}

// Moves w[m] so that it sits just before index k (k > m) or just after
// index k (k < m), then strips the sentinels.
Permutation move_letter(std::vector<int> w, int m, int k)
{
    const int v = w[m];
    if (k > m) {
        w.insert(w.begin() + k, v);
        w.erase(w.begin() + m);
    } else {
        w.erase(w.begin() + m);
        w.insert(w.begin() + k + 1, v);
    }
    return Permutation(std::vector<int>(w.begin() + 1, w.end() - 1));
}

} // namespace

DyckDiagramme fv(const Permutation &sigma)
{
    require_alternating(sigma, true);
    return fv_impl(sigma, sigma.size() - 1, false);
}

DyckDiagramme fv_star(const Permutation &sigma)
{
    require_alternating(sigma, false);
    std::vector<int> w(sigma.word().begin(), sigma.word().end());
    w.push_back(sigma.size() + 1);
    return fv_impl(Permutation(std::move(w)), sigma.size(), true);
}

LaguerreHistory fz(const Permutation &sigma)
{
    std::vector<Step> path;
    std::vector<int> xi;
    for (int k = 1; k <= sigma.size(); ++k) {
        const int c = cros_k(sigma, k);
        switch (cyclic_type(sigma, k)) {
        case CyclicType::valley:
            path.push_back(Step::Up);
            xi.push_back(c);
            break;
        case CyclicType::fixed:
            path.push_back(Step::Level);
            xi.push_back(0);
            break;
        case CyclicType::double_ascent:
            path.push_back(Step::Level);
            xi.push_back(c);
            break;
        case CyclicType::double_descent:
            path.push_back(Step::Level);
            xi.push_back(-(c + 1));
            break;
        case CyclicType::peak:
            path.push_back(Step::Down);
            xi.push_back(c);
            break;
        }
    }
    return LaguerreHistory{MotzkinPath(std::move(path)), std::move(xi)};
}

nlohmann::json CszTrace::to_json() const
{
    return {{"f", f}, {"f_prime", f_prime}, {"g", g}, {"g_prime", g_prime}, {"emb", emb}};
}

Permutation csz(const Permutation &sigma, CszTrace *trace)
{
    const int n = sigma.size();
    std::vector<bool> descent_top(static_cast<std::size_t>(n) + 1), descent_bottom(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i < n; ++i) {
        if (sigma(i) > sigma(i + 1)) {
            descent_top[static_cast<std::size_t>(sigma(i))] = true;
            descent_bottom[static_cast<std::size_t>(sigma(i + 1))] = true;
        }
    }
    CszTrace t;
    for (int k = 1; k <= n; ++k) {
        t.emb.push_back(pattern_k(sigma, k, Pattern::thto));
        (descent_bottom[static_cast<std::size_t>(k)] ? t.f : t.g).push_back(k);
    }
    // Descent tops, largest first: every placed letter is larger, so exactly
    // emb(a) of them end up to the left of a.
    for (int a = n; a >= 1; --a) {
        if (descent_top[static_cast<std::size_t>(a)]) {
            const int e = std::min(t.emb[static_cast<std::size_t>(a - 1)], static_cast<int>(t.f_prime.size()));
            t.f_prime.insert(t.f_prime.begin() + e, a);
        }
    }
    for (int b = 1; b <= n; ++b) {
        if (!descent_top[static_cast<std::size_t>(b)]) {
            const int e = std::min(t.emb[static_cast<std::size_t>(b - 1)], static_cast<int>(t.g_prime.size()));
            t.g_prime.insert(t.g_prime.end() - e, b);
        }
    }
    std::vector<int> image(static_cast<std::size_t>(n));
    auto place = [&](const std::vector<int> &top, const std::vector<int> &bottom) {
        for (std::size_t i = 0; i < top.size(); ++i) {
            image[static_cast<std::size_t>(bottom[i] - 1)] = top[i];
        }
    };
    place(t.f, t.f_prime);
    place(t.g, t.g_prime);
    if (trace) {
        *trace = std::move(t);
    }
    return Permutation(std::move(image));
}

Permutation invol_phi(const Permutation &sigma)
{
    const auto w = padded(sigma, 0);
    const int m = largest_double(w);
    if (m == 0) {
        return sigma;
    }
    if (w[m - 1] < w[m]) {
        int k = m + 1;
        while (w[k] >= w[m]) {
            ++k;
        }
        return move_letter(w, m, k);
    }
    int k = m - 1;
    while (w[k] >= w[m]) {
        --k;
    }
    return move_letter(w, m, k);
}

Permutation invol_psi(const Permutation &sigma)
{
    if (!in_family(Family::Dstar, sigma)) {
        throw PreconditionError("not a coderangement: " + sigma.to_string());
    }
    const auto w = padded(sigma, sigma.size() + 1);
    const int m = largest_double(w);
    if (m == 0) {
        return sigma;
    }
    if (w[m - 1] < w[m]) {
        int k = m - 1;
        while (k > 0 && w[k] <= w[m]) {
            --k;
        }
        if (k == 0) {
            throw PreconditionError("no larger letter before a double ascent in " + sigma.to_string());
        }
        return move_letter(w, m, k);
    }
    int k = m + 1;
    while (w[k] <= w[m]) {
        ++k;
    }
    return move_letter(w, m, k);
}

} // namespace pqeuler
