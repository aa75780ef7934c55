#include <pqeuler/families.hpp>

#include <algorithm>
#include <cctype>

namespace pqeuler
{

namespace
{

[[noreturn]] void bad_weight(std::string_view text, const std::string &what)
{
    throw std::invalid_argument("cannot parse weight '" + std::string(text) + "': " + what);
}

std::string strip(std::string_view s)
{
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            out += c;
        }
    }
    return out;
}

// Splits on `sep` at parenthesis depth zero.
std::vector<std::string> split_top(const std::string &s, char sep)
{
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') {
            ++depth;
        } else if (c == ')') {
            --depth;
        }
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

bool all_digits(const std::string &s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// Base of a factor: a variable, or a parenthesized signed unit monomial
// such as (-1), (-q), (-1/q), (p*s).
void parse_base(std::string_view text, const std::string &base, Weight::Factor &f)
{
    std::string inner = base;
    if (inner.size() >= 2 && inner.front() == '(' && inner.back() == ')') {
        inner = inner.substr(1, inner.size() - 2);
    }
    if (inner.empty()) {
        bad_weight(text, "empty base");
    }
    const auto slash = inner.find('/');
    LaurentPoly value;
    try {
        value = parse_laurent(inner.substr(0, slash));
        if (slash != std::string::npos) {
            auto den = parse_laurent(inner.substr(slash + 1)).unit_inverse();
            if (!den) {
                bad_weight(text, "denominator of base must be a unit monomial");
            }
            value *= *den;
        }
    } catch (const std::invalid_argument &e) {
        bad_weight(text, e.what());
    }
    if (!value.is_monomial()) {
        bad_weight(text, "base must be a signed monomial");
    }
    const auto [e, c] = value.terms().front();
    if (c != 1 && c != -1) {
        bad_weight(text, "base coefficient must be +1 or -1");
    }
    f.sign = c == 1 ? 1 : -1;
    f.base = e;
}

// Exponent: an integer linear combination of statistics, e.g. "inv",
// "3", "(toht+2*thto)", "(n-wex)".
void parse_exponent(std::string_view text, std::string expo, Weight::Factor &f)
{
    if (expo.size() >= 2 && expo.front() == '(' && expo.back() == ')') {
        expo = expo.substr(1, expo.size() - 2);
    }
    if (expo.empty()) {
        bad_weight(text, "empty exponent");
    }
    std::size_t pos = 0;
    while (pos < expo.size()) {
        int sign = 1;
        if (expo[pos] == '+' || expo[pos] == '-') {
            sign = expo[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            bad_weight(text, "expected '+' or '-' in exponent");
        }
        const auto end = std::min(expo.find_first_of("+-", pos), expo.size());
        const std::string term = expo.substr(pos, end - pos);
        pos = end;
        int coeff = 1;
        std::string name = term;
        if (const auto star = term.find('*'); star != std::string::npos) {
            if (!all_digits(term.substr(0, star))) {
                bad_weight(text, "exponent coefficient must be an integer");
            }
            coeff = std::stoi(term.substr(0, star));
            name = term.substr(star + 1);
        }
        if (all_digits(name)) {
            f.constant += sign * coeff * std::stoi(name);
        } else if (auto s = parse_stat(name)) {
            f.terms.emplace_back(*s, sign * coeff);
        } else {
            bad_weight(text, "unknown statistic '" + name + "'");
        }
    }
}

} // namespace

Weight Weight::parse(std::string_view text)
{
    const std::string s = strip(text);
    if (s.empty()) {
        bad_weight(text, "empty weight");
    }
    if (s == "1") {
        return Weight{};
    }
    std::vector<Factor> factors;
    for (const auto &part : split_top(s, '*')) {
        if (part.empty()) {
            bad_weight(text, "empty factor");
        }
        Factor f;
        // The exponent follows the last top-level '^'.
        int depth = 0;
        std::size_t caret = std::string::npos;
        for (std::size_t i = 0; i < part.size(); ++i) {
            if (part[i] == '(') {
                ++depth;
            } else if (part[i] == ')') {
                --depth;
            } else if (part[i] == '^' && depth == 0) {
                caret = i;
            }
        }
        parse_base(text, part.substr(0, caret), f);
        if (caret == std::string::npos) {
            f.constant = 1;
        } else {
            parse_exponent(text, part.substr(caret + 1), f);
        }
        factors.push_back(std::move(f));
    }
    return Weight(std::move(factors));
}

Weight Weight::quintuple()
{
    return parse("x^wex*y^fix*q^cros*p^nest*s^inv");
}

int Weight::evaluate(const StatRecord &r, Exponents &out) const
{
    out = Exponents{};
    int sign = 1;
    for (const auto &f : factors_) {
        int e = f.constant;
        for (const auto &[stat, c] : f.terms) {
            e += c * r[stat];
        }
        if (f.sign < 0 && (e % 2 != 0)) {
            sign = -sign;
        }
        for (std::size_t i = 0; i < num_vars; ++i) {
            out[i] += e * f.base[i];
        }
    }
    return sign;
}

LaurentPoly Weight::evaluate(const StatRecord &r) const
{
    Exponents e{};
    const int sign = evaluate(r, e);
    return LaurentPoly::monomial(Int(sign), e);
}

} // namespace pqeuler
