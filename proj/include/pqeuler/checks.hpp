#ifndef PQEULER_CHECKS_HPP
#define PQEULER_CHECKS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace pqeuler
{

// Result of one identity check. witness is null on pass; on failure it
// describes the first place the two sides differ.
struct CheckReport {
    std::string id;
    std::string param_name; // "n" or "order"
    int param = 0;
    bool pass = false;
    double elapsed_seconds = 0.0;
    nlohmann::json witness;

    nlohmann::json to_json() const;
    // "PASS jv n=5 (0.01s)" plus the witness on failure.
    std::string summary() const;
};

struct CheckInfo {
    std::string id;
    std::string description;
    std::string param_name;
    int default_param;
    int min_param;
    int max_param;
};

class UnknownCheck : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class ParameterOutOfRange : public std::out_of_range
{
public:
    using std::out_of_range::out_of_range;
};

const std::vector<CheckInfo> &check_registry();
const CheckInfo &check_info(std::string_view id);

CheckReport run_check(std::string_view id, std::optional<int> param = std::nullopt);

// Names accepted by verify_map: fv, fv_star, fz, csz, phi, psi.
const std::vector<std::string> &map_names();

// Exhaustive certificate for one of the maps on permutations of size n:
// injectivity, image size, and the statistic transport of the map.
CheckReport verify_map(std::string_view name, int n);

} // namespace pqeuler

#endif
