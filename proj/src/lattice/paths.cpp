#include <pqeuler/lattice.hpp>

#include <array>
#include <stdexcept>

namespace pqeuler
{

MotzkinPath::MotzkinPath(std::vector<Step> steps) : steps_(std::move(steps))
{
    int y = 0;
    heights_.reserve(steps_.size());
    for (Step s : steps_) {
        heights_.push_back(y);
        switch (s) {
        case Step::Up:
            ++y;
            break;
        case Step::Level:
            break;
        case Step::Down:
            --y;
            break;
        default:
            throw std::invalid_argument("unknown step");
        }
        if (y < 0) {
            throw std::invalid_argument("path goes below the axis");
        }
    }
    if (y != 0) {
        throw std::invalid_argument("path does not end on the axis");
    }
}

MotzkinPath MotzkinPath::parse(std::string_view text)
{
    std::vector<Step> steps;
    for (char c : text) {
        switch (c) {
        case 'U':
            steps.push_back(Step::Up);
            break;
        case 'L':
            steps.push_back(Step::Level);
            break;
        case 'D':
            steps.push_back(Step::Down);
            break;
        default:
            throw std::invalid_argument("bad step character '" + std::string(1, c) + "'");
        }
    }
    return MotzkinPath(std::move(steps));
}

bool MotzkinPath::is_dyck() const
{
    for (Step s : steps_) {
        if (s == Step::Level) {
            return false;
        }
    }
    return true;
}

std::string MotzkinPath::to_string() const
{
    std::string out;
    for (Step s : steps_) {
        out += static_cast<char>(s);
    }
    return out;
}

namespace
{

constexpr std::array<std::pair<std::string_view, PathKind>, 5> kind_names{{
    {"motzkin", PathKind::motzkin},
    {"dyck", PathKind::dyck},
    {"diagramme", PathKind::diagramme},
    {"restricted_diagramme", PathKind::restricted_diagramme},
    {"laguerre", PathKind::laguerre},
}};

std::string xi_string(const std::vector<int> &xi)
{
    std::string out = "[";
    for (std::size_t i = 0; i < xi.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(xi[i]);
    }
    return out + "]";
}

bool xi_fits(PathKind kind, const MotzkinPath &path, const std::vector<int> &xi)
{
    if (xi.size() != path.steps().size()) {
        return false;
    }
    for (int k = 1; k <= path.length(); ++k) {
        const auto [lo, hi] = xi_range(kind, path.step(k), path.height(k));
        const int v = xi[static_cast<std::size_t>(k - 1)];
        if (v < lo || v > hi) {
            return false;
        }
    }
    return true;
}

bool is_dyck_kind(PathKind kind)
{
    return kind == PathKind::dyck || kind == PathKind::diagramme || kind == PathKind::restricted_diagramme;
}

} // namespace

std::string_view path_kind_name(PathKind k)
{
    for (const auto &[name, kind] : kind_names) {
        if (kind == k) {
            return name;
        }
    }
    return "";
}

std::optional<PathKind> parse_path_kind(std::string_view name)
{
    for (const auto &[n, kind] : kind_names) {
        if (n == name) {
            return kind;
        }
    }
    return std::nullopt;
}

std::pair<int, int> xi_range(PathKind kind, Step step, int h)
{
    switch (kind) {
    case PathKind::motzkin:
    case PathKind::dyck:
        return {0, 0};
    case PathKind::diagramme:
        return {0, h};
    case PathKind::restricted_diagramme:
        return {0, step == Step::Down ? h - 1 : h};
    case PathKind::laguerre:
        switch (step) {
        case Step::Up:
            return {0, h};
        case Step::Level:
            return {-h, h};
        case Step::Down:
            return {0, h - 1};
        }
    }
    return {0, -1};
}

std::string DecoratedPath::to_string() const
{
    return path.to_string() + " " + xi_string(xi);
}

bool DyckDiagramme::is_valid() const
{
    return path.is_dyck() && xi_fits(restricted ? PathKind::restricted_diagramme : PathKind::diagramme, path, xi);
}

std::string DyckDiagramme::to_string() const
{
    return path.to_string() + " " + xi_string(xi);
}

bool LaguerreHistory::is_valid() const
{
    return xi_fits(PathKind::laguerre, path, xi);
}

std::string LaguerreHistory::to_string() const
{
    return path.to_string() + " " + xi_string(xi);
}

void enumerate_paths(PathKind kind, int length, const std::function<void(const DecoratedPath &)> &visit, int cap)
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
    const bool allow_level = !is_dyck_kind(kind);
    std::vector<Step> steps(static_cast<std::size_t>(length));
    std::vector<int> xi(static_cast<std::size_t>(length));

    std::function<void(int, int)> rec = [&](int pos, int h) {
        if (pos == length) {
            visit(DecoratedPath{MotzkinPath(steps), xi});
            return;
        }
        const int remaining = length - pos;
        for (Step s : {Step::Up, Step::Level, Step::Down}) {
            if (s == Step::Level && !allow_level) {
                continue;
            }
            if (s == Step::Down && h == 0) {
                continue;
            }
            const int next = h + (s == Step::Up ? 1 : s == Step::Down ? -1 : 0);
            if (next > remaining - 1) {
                continue;
            }
            const auto [lo, hi] = xi_range(kind, s, h);
            steps[static_cast<std::size_t>(pos)] = s;
            for (int v = lo; v <= hi; ++v) {
                xi[static_cast<std::size_t>(pos)] = v;
                rec(pos + 1, next);
            }
        }
    };
    rec(0, 0);
}

std::vector<DecoratedPath> path_objects(PathKind kind, int length, int cap)
{
    std::vector<DecoratedPath> out;
    enumerate_paths(kind, length, [&](const DecoratedPath &d) { out.push_back(d); }, cap);
    return out;
}

} // namespace pqeuler
