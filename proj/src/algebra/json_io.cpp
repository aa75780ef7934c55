#include <pqeuler/json_io.hpp>

#include <stdexcept>

namespace pqeuler
{

namespace
{

template <typename C>
nlohmann::json poly_json(const Polynomial<C> &p)
{
    auto out = nlohmann::json::array();
    const auto &terms = p.raw_terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const Exponents e = detail::unpack(it->first);
        out.push_back({{"e", e}, {"c", ring_traits<C>::to_string(it->second)}});
    }
    return out;
}

template <typename C, typename Parse>
Polynomial<C> poly_from(const nlohmann::json &j, Parse parse)
{
    if (!j.is_array()) {
        throw std::invalid_argument("polynomial JSON must be an array");
    }
    std::vector<typename Polynomial<C>::term_type> terms;
    for (const auto &t : j) {
        const auto e = t.at("e").get<std::vector<int>>();
        if (e.size() != num_vars) {
            throw std::invalid_argument("exponent vector must have 5 entries");
        }
        Exponents ex{};
        std::copy(e.begin(), e.end(), ex.begin());
        terms.emplace_back(detail::pack(ex), parse(t.at("c").get<std::string>()));
    }
    return Polynomial<C>::from_terms(std::move(terms));
}

template <typename C>
nlohmann::json series_json(const TruncSeries<C> &f)
{
    auto coeffs = nlohmann::json::array();
    for (const auto &c : f.coeffs()) {
        coeffs.push_back(to_json(c));
    }
    return {{"order", f.order()}, {"coeffs", coeffs}};
}

} // namespace

nlohmann::json to_json(const LaurentPoly &p)
{
    return poly_json(p);
}

nlohmann::json to_json(const RatPoly &p)
{
    return poly_json(p);
}

nlohmann::json to_json(const LaurentSeries &f)
{
    return series_json(f);
}

nlohmann::json to_json(const RatPolySeries &f)
{
    return series_json(f);
}

LaurentPoly laurent_from_json(const nlohmann::json &j)
{
    return poly_from<Int>(j, [](const std::string &s) { return Int(s); });
}

RatPoly ratpoly_from_json(const nlohmann::json &j)
{
    return poly_from<Rational>(j, [](const std::string &s) { return parse_rational(s); });
}

LaurentSeries laurent_series_from_json(const nlohmann::json &j)
{
    const int order = j.at("order").get<int>();
    std::vector<LaurentPoly> coeffs;
    for (const auto &c : j.at("coeffs")) {
        coeffs.push_back(laurent_from_json(c));
    }
    if (coeffs.size() != static_cast<std::size_t>(order) + 1) {
        throw std::invalid_argument("series JSON has wrong number of coefficients");
    }
    return LaurentSeries(order, std::move(coeffs));
}

} // namespace pqeuler
