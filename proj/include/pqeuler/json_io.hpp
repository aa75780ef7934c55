#ifndef PQEULER_JSON_IO_HPP
#define PQEULER_JSON_IO_HPP

#include <json.hpp>

#include <pqeuler/polynomial.hpp>
#include <pqeuler/series.hpp>

namespace pqeuler
{

// Canonical JSON: a polynomial is an array of {"e":[ex,ey,ep,eq,es],"c":"..."}
// in descending lexicographic order of exponents; a series is
// {"order":N,"coeffs":[poly,...]}.
nlohmann::json to_json(const LaurentPoly &p);
nlohmann::json to_json(const RatPoly &p);
nlohmann::json to_json(const LaurentSeries &f);
nlohmann::json to_json(const RatPolySeries &f);

LaurentPoly laurent_from_json(const nlohmann::json &j);
RatPoly ratpoly_from_json(const nlohmann::json &j);
LaurentSeries laurent_series_from_json(const nlohmann::json &j);

} // namespace pqeuler

#endif
