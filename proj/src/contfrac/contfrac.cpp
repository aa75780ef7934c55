#include <pqeuler/contfrac.hpp>

namespace pqeuler
{

namespace
{

int ceil_div(int a, int b)
{
    return (a + b - 1) / b;
}

void check_power(int power)
{
    if (power < 1) {
        throw std::invalid_argument("continued fraction power must be positive");
    }
}

// Places the u-series at t^{power k}.
LaurentSeries spread(const LaurentSeries &u_series, int power, int order)
{
    LaurentSeries r(order);
    for (int k = 0; k <= u_series.order() && k * power <= order; ++k) {
        r[k * power] = u_series[k];
    }
    return r;
}

HeightWeight substituted(HeightWeight f, std::map<Var, LaurentPoly> images)
{
    return [f = std::move(f), images = std::move(images)](int h) { return f(h).substitute(images); };
}

} // namespace

int JFraction::depth_for(int order) const
{
    return depth > 0 ? depth : ceil_div(std::max(order, 0), 2 * power) + 1;
}

int SFraction::depth_for(int order) const
{
    return depth > 0 ? depth : ceil_div(std::max(order, 0), power) + 1;
}

LaurentSeries expand_j(const JFraction &jf, int order)
{
    check_power(jf.power);
    const int m = order / jf.power;
    LaurentSeries f = LaurentSeries::one(m);
    for (int h = jf.depth_for(order) - 1; h >= 0; --h) {
        LaurentSeries den = LaurentSeries::one(m) - LaurentSeries::monomial(m, 1, jf.b(h))
                            - (jf.ac(h) * f).shifted(2);
        f = series_recip(den);
    }
    return spread(f, jf.power, order);
}

LaurentSeries expand_s(const SFraction &sf, int order)
{
    check_power(sf.power);
    const int m = order / sf.power;
    LaurentSeries f = LaurentSeries::one(m);
    for (int k = sf.depth_for(order); k >= 1; --k) {
        f = series_recip(LaurentSeries::one(m) - (sf.c(k) * f).shifted(1));
    }
    return spread(f, sf.power, order);
}

JFraction contract_even(const SFraction &sf)
{
    JFraction j;
    j.power = sf.power;
    j.b = [c = sf.c](int h) { return h == 0 ? c(1) : c(2 * h) + c(2 * h + 1); };
    j.ac = [c = sf.c](int h) { return c(2 * h + 1) * c(2 * h + 2); };
    return j;
}

OddContraction contract_odd(const SFraction &sf)
{
    OddContraction oc;
    oc.lead = sf.c(1);
    oc.j.power = sf.power;
    oc.j.b = [c = sf.c](int h) { return c(2 * h + 1) + c(2 * h + 2); };
    oc.j.ac = [c = sf.c](int h) { return c(2 * h + 2) * c(2 * h + 3); };
    return oc;
}

LaurentSeries expand_odd(const OddContraction &oc, int order)
{
    const LaurentSeries j = expand_j(oc.j, order);
    return LaurentSeries::one(order) + (oc.lead * j).shifted(oc.j.power);
}

JFraction substitute(const JFraction &jf, const std::map<Var, LaurentPoly> &images)
{
    JFraction r = jf;
    r.b = substituted(jf.b, images);
    r.ac = substituted(jf.ac, images);
    return r;
}

SFraction substitute(const SFraction &sf, const std::map<Var, LaurentPoly> &images)
{
    SFraction r = sf;
    r.c = substituted(sf.c, images);
    return r;
}

WeightSpec lattice_spec(const JFraction &jf)
{
    return WeightSpec::heights(jf.ac, jf.b, [](int) { return LaurentPoly(1); });
}

WeightSpec lattice_spec(const SFraction &sf)
{
    // A down step from height h is the level-h numerator.
    return WeightSpec::heights([](int) { return LaurentPoly(1); }, nullptr, sf.c);
}

LaurentSeries expand(const Fraction &f, int order)
{
    return std::visit(
        [order](const auto &fr) -> LaurentSeries {
            if constexpr (std::is_same_v<std::decay_t<decltype(fr)>, JFraction>) {
                return expand_j(fr, order);
            } else {
                return expand_s(fr, order);
            }
        },
        f);
}

LaurentSeries expand(const Preset &p, int order)
{
    const LaurentSeries inner = expand(p.fraction, std::max(order - p.shift, 0));
    return inner.with_order(order).shifted(p.shift);
}

LaurentSeries expand_by_paths(const Preset &p, int order, SumMethod method)
{
    LaurentSeries r(order);
    std::visit(
        [&](const auto &fr) {
            const WeightSpec spec = lattice_spec(fr);
            const bool is_j = std::is_same_v<std::decay_t<decltype(fr)>, JFraction>;
            for (int n = 0; p.shift + n * fr.power <= order; ++n) {
                const LaurentPoly c = is_j ? weighted_sum(PathKind::motzkin, n, spec, method, order)
                                           : weighted_sum(PathKind::dyck, 2 * n, spec, method, 2 * order);
                r[p.shift + n * fr.power] = c;
            }
        },
        p.fraction);
    return r;
}

} // namespace pqeuler
