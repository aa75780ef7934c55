#ifndef PQEULER_POLYNOMIAL_HPP
#define PQEULER_POLYNOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <pqeuler/bigint.hpp>

namespace pqeuler
{

// The closed variable universe. Order matters: it is the lexicographic
// order used for canonical term ordering.
enum class Var : unsigned { x = 0, y = 1, p = 2, q = 3, s = 4 };

inline constexpr std::size_t num_vars = 5;
inline constexpr std::array<Var, num_vars> all_vars{Var::x, Var::y, Var::p, Var::q, Var::s};

using Exponents = std::array<int, num_vars>;

char var_name(Var v);
std::optional<Var> parse_var(char c);

inline Exponents exponents_of(Var v, int power = 1)
{
    Exponents e{};
    e[static_cast<unsigned>(v)] = power;
    return e;
}

class NotInvertible : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

class NonInvertibleSubstitution : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

class ExponentOverflow : public std::overflow_error
{
public:
    using std::overflow_error::overflow_error;
};

namespace detail
{

// Exponent vectors are packed into one 64-bit key, 12 bits per variable,
// biased so that unsigned key order coincides with lexicographic order on
// the signed exponents (x most significant).
inline constexpr int key_bits = 12;
inline constexpr int exp_bias = 1 << (key_bits - 1);
inline constexpr int min_exponent = -exp_bias;
inline constexpr int max_exponent = exp_bias - 1;

inline constexpr std::uint64_t bias_key = [] {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < num_vars; ++i) {
        k = (k << key_bits) | static_cast<std::uint64_t>(exp_bias);
    }
    return k;
}();

inline std::uint64_t pack(const Exponents &e)
{
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < num_vars; ++i) {
        if (e[i] < min_exponent || e[i] > max_exponent) {
            throw ExponentOverflow("exponent " + std::to_string(e[i]) + " out of range");
        }
        k = (k << key_bits) | static_cast<std::uint64_t>(e[i] + exp_bias);
    }
    return k;
}

inline Exponents unpack(std::uint64_t k)
{
    Exponents e{};
    constexpr std::uint64_t mask = (std::uint64_t(1) << key_bits) - 1;
    for (std::size_t i = num_vars; i-- > 0;) {
        e[i] = static_cast<int>(k & mask) - exp_bias;
        k >>= key_bits;
    }
    return e;
}

// Key of the product monomial. Caller guarantees the result is in range.
inline std::uint64_t mul_keys(std::uint64_t a, std::uint64_t b)
{
    return a + b - bias_key;
}

std::string monomial_string(const Exponents &e);

} // namespace detail

// Sparse multivariate Laurent polynomial in x, y, p, q, s with coefficients
// in C (Int for LaurentPoly, Rational for RatPoly). Terms are kept sorted by
// packed key with no zero coefficients, so equality is structural.
template <typename C>
class Polynomial
{
public:
    using coeff_type = C;
    using term_type = std::pair<std::uint64_t, C>;
    using traits = ring_traits<C>;

    Polynomial() = default;
    Polynomial(const C &c)
    {
        if (!traits::is_zero(c)) {
            terms_.emplace_back(detail::bias_key, c);
        }
    }
    Polynomial(int c) : Polynomial(C(c)) {}

    static Polynomial monomial(const C &c, const Exponents &e)
    {
        Polynomial r;
        if (!traits::is_zero(c)) {
            r.terms_.emplace_back(detail::pack(e), c);
        }
        return r;
    }
    static Polynomial variable(Var v, int power = 1) { return monomial(traits::one(), exponents_of(v, power)); }

    // Builds from unordered (key, coefficient) pairs; merges duplicates.
    static Polynomial from_terms(std::vector<term_type> terms)
    {
        std::sort(terms.begin(), terms.end(), [](const term_type &a, const term_type &b) { return a.first < b.first; });
        Polynomial r;
        for (auto &t : terms) {
            if (!r.terms_.empty() && r.terms_.back().first == t.first) {
                r.terms_.back().second += t.second;
            } else {
                r.terms_.push_back(std::move(t));
            }
        }
        r.drop_zeros();
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<term_type> &raw_terms() const { return terms_; }

    // (exponents, coefficient) pairs in ascending canonical order.
    std::vector<std::pair<Exponents, C>> terms() const
    {
        std::vector<std::pair<Exponents, C>> out;
        out.reserve(terms_.size());
        for (const auto &[k, c] : terms_) {
            out.emplace_back(detail::unpack(k), c);
        }
        return out;
    }

    C coefficient(const Exponents &e) const
    {
        const auto key = detail::pack(e);
        auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                                   [](const term_type &t, std::uint64_t k) { return t.first < k; });
        if (it != terms_.end() && it->first == key) {
            return it->second;
        }
        return traits::zero();
    }
    C constant_term() const { return coefficient(Exponents{}); }

    std::optional<C> to_constant() const
    {
        if (terms_.empty()) {
            return traits::zero();
        }
        if (terms_.size() == 1 && terms_[0].first == detail::bias_key) {
            return terms_[0].second;
        }
        return std::nullopt;
    }

    bool is_monomial() const { return terms_.size() == 1; }

    // A unit is a single term whose coefficient is a unit of C.
    std::optional<Polynomial> unit_inverse() const
    {
        if (terms_.size() != 1) {
            return std::nullopt;
        }
        auto inv = traits::inverse(terms_[0].second);
        if (!inv) {
            return std::nullopt;
        }
        Exponents e = detail::unpack(terms_[0].first);
        for (auto &v : e) {
            v = -v;
        }
        return monomial(*inv, e);
    }

    // Per-variable minimum and maximum exponents; zeros for the zero polynomial.
    std::pair<Exponents, Exponents> exponent_bounds() const
    {
        Exponents lo{}, hi{};
        bool first = true;
        for (const auto &t : terms_) {
            const Exponents e = detail::unpack(t.first);
            for (std::size_t i = 0; i < num_vars; ++i) {
                if (first) {
                    lo[i] = hi[i] = e[i];
                } else {
                    lo[i] = std::min(lo[i], e[i]);
                    hi[i] = std::max(hi[i], e[i]);
                }
            }
            first = false;
        }
        return {lo, hi};
    }

    Polynomial operator-() const
    {
        Polynomial r = *this;
        for (auto &t : r.terms_) {
            t.second = -t.second;
        }
        return r;
    }

    Polynomial &operator+=(const Polynomial &o) { return *this = merge(*this, o, false); }
    Polynomial &operator-=(const Polynomial &o) { return *this = merge(*this, o, true); }
    Polynomial &operator*=(const Polynomial &o) { return *this = multiply(*this, o); }

    friend Polynomial operator+(const Polynomial &a, const Polynomial &b) { return merge(a, b, false); }
    friend Polynomial operator-(const Polynomial &a, const Polynomial &b) { return merge(a, b, true); }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b) { return multiply(a, b); }

    friend bool operator==(const Polynomial &a, const Polynomial &b) { return a.terms_ == b.terms_; }

    Polynomial pow(unsigned k) const
    {
        Polynomial result(1);
        Polynomial base = *this;
        while (k > 0) {
            if (k & 1u) {
                result *= base;
            }
            k >>= 1;
            if (k > 0) {
                base *= base;
            }
        }
        return result;
    }

    // Integer power; negative powers require a unit.
    Polynomial ipow(int k) const
    {
        if (k >= 0) {
            return pow(static_cast<unsigned>(k));
        }
        auto inv = unit_inverse();
        if (!inv) {
            throw NotInvertible("cannot raise non-unit " + to_string() + " to a negative power");
        }
        return inv->pow(static_cast<unsigned>(-k));
    }

    // Simultaneous substitution. Variables absent from the assignment stay.
    // A variable that occurs with a negative exponent must be mapped to a unit.
    Polynomial substitute(const std::map<Var, Polynomial> &assignment) const
    {
        if (assignment.empty()) {
            return *this;
        }
        std::map<std::pair<unsigned, int>, Polynomial> power_cache;
        auto power_of = [&](Var v, int e) -> const Polynomial & {
            auto key = std::make_pair(static_cast<unsigned>(v), e);
            auto it = power_cache.find(key);
            if (it != power_cache.end()) {
                return it->second;
            }
            const Polynomial &image = assignment.at(v);
            Polynomial value;
            if (e >= 0) {
                value = image.pow(static_cast<unsigned>(e));
            } else {
                auto inv = image.unit_inverse();
                if (!inv) {
                    throw NonInvertibleSubstitution(std::string("non-invertible substitution: ") + var_name(v)
                                                    + " occurs with exponent " + std::to_string(e)
                                                    + " but is mapped to " + image.to_string());
                }
                value = inv->pow(static_cast<unsigned>(-e));
            }
            return power_cache.emplace(key, std::move(value)).first->second;
        };

        Accumulator acc;
        for (const auto &[key, c] : terms_) {
            Exponents e = detail::unpack(key);
            Polynomial term(c);
            for (Var v : all_vars) {
                const auto i = static_cast<unsigned>(v);
                if (e[i] != 0 && assignment.count(v)) {
                    term *= power_of(v, e[i]);
                    e[i] = 0;
                }
            }
            term *= monomial(traits::one(), e);
            acc.add(term);
        }
        return acc.finish();
    }

    // Exact division. Returns nullopt when d does not divide *this.
    std::optional<Polynomial> exact_divide(const Polynomial &d) const
    {
        if (d.is_zero()) {
            throw std::domain_error("division by the zero polynomial");
        }
        if (auto inv = d.unit_inverse()) {
            return *this * *inv;
        }
        Polynomial rem = *this;
        Polynomial quot;
        if (rem.is_zero()) {
            return quot;
        }
        const auto &lead = d.terms_.back();
        const Exponents lead_e = detail::unpack(lead.first);
        // If d divides *this, the lex-smallest term of *this is the product of
        // the lex-smallest terms of quotient and divisor; quotient terms below
        // that bound mean d does not divide.
        Exponents floor = detail::unpack(terms_.front().first);
        {
            const Exponents low_d = detail::unpack(d.terms_.front().first);
            for (std::size_t i = 0; i < num_vars; ++i) {
                floor[i] -= low_d[i];
            }
        }
        while (!rem.is_zero()) {
            const auto &top = rem.terms_.back();
            auto c = traits::divide(top.second, lead.second);
            if (!c) {
                return std::nullopt;
            }
            Exponents e = detail::unpack(top.first);
            for (std::size_t i = 0; i < num_vars; ++i) {
                e[i] -= lead_e[i];
            }
            if (e < floor) {
                return std::nullopt;
            }
            const Polynomial t = monomial(*c, e);
            quot += t;
            rem -= t * d;
        }
        return quot;
    }

    // Canonical text: terms in descending lexicographic order, e.g.
    // "p^2+2*p*q+q^2+1".
    std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const bool neg = traits::is_negative(it->second);
            const C mag = neg ? C(-it->second) : it->second;
            const std::string mono = detail::monomial_string(detail::unpack(it->first));
            std::string body;
            if (mono.empty()) {
                body = traits::to_string(mag);
            } else if (mag == traits::one()) {
                body = mono;
            } else {
                body = traits::to_string(mag) + "*" + mono;
            }
            if (it == terms_.rbegin()) {
                out += neg ? "-" + body : body;
            } else {
                out += (neg ? "-" : "+") + body;
            }
        }
        return out;
    }

    // Hash-map accumulation for sums of many polynomials.
    class Accumulator
    {
    public:
        void add_term(std::uint64_t key, const C &c)
        {
            auto [it, inserted] = map_.try_emplace(key, c);
            if (!inserted) {
                it->second += c;
            }
        }
        void add(const Polynomial &p)
        {
            for (const auto &[k, c] : p.terms_) {
                add_term(k, c);
            }
        }
        Polynomial finish()
        {
            std::vector<term_type> v;
            v.reserve(map_.size());
            for (auto &[k, c] : map_) {
                if (!traits::is_zero(c)) {
                    v.emplace_back(k, std::move(c));
                }
            }
            map_.clear();
            return from_terms(std::move(v));
        }

    private:
        std::unordered_map<std::uint64_t, C> map_;
    };

private:
    std::vector<term_type> terms_;

    void drop_zeros()
    {
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                    [](const term_type &t) { return traits::is_zero(t.second); }),
                     terms_.end());
    }

    static Polynomial merge(const Polynomial &a, const Polynomial &b, bool subtract)
    {
        Polynomial r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
                r.terms_.emplace_back(b.terms_[j].first, subtract ? C(-b.terms_[j].second) : b.terms_[j].second);
                ++j;
            } else {
                C c = subtract ? C(a.terms_[i].second - b.terms_[j].second)
                               : C(a.terms_[i].second + b.terms_[j].second);
                if (!traits::is_zero(c)) {
                    r.terms_.emplace_back(a.terms_[i].first, std::move(c));
                }
                ++i;
                ++j;
            }
        }
        return r;
    }

    static void check_product_range(const Polynomial &a, const Polynomial &b)
    {
        const auto [alo, ahi] = a.exponent_bounds();
        const auto [blo, bhi] = b.exponent_bounds();
        for (std::size_t i = 0; i < num_vars; ++i) {
            if (alo[i] + blo[i] < detail::min_exponent || ahi[i] + bhi[i] > detail::max_exponent) {
                throw ExponentOverflow("product exponent out of range");
            }
        }
    }

    static Polynomial multiply(const Polynomial &a, const Polynomial &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        check_product_range(a, b);
        const Polynomial &big = a.size() >= b.size() ? a : b;
        const Polynomial &small = a.size() >= b.size() ? b : a;
        Polynomial r;
        if (small.size() == 1) {
            // Shifting every key by the same offset preserves order.
            const auto &[sk, sc] = small.terms_[0];
            r.terms_.reserve(big.size());
            for (const auto &[k, c] : big.terms_) {
                r.terms_.emplace_back(detail::mul_keys(k, sk), c * sc);
            }
            r.drop_zeros();
            return r;
        }
        std::unordered_map<std::uint64_t, C> acc;
        acc.reserve(a.size() * b.size());
        for (const auto &[ka, ca] : small.terms_) {
            for (const auto &[kb, cb] : big.terms_) {
                C prod = ca * cb;
                auto [it, inserted] = acc.try_emplace(detail::mul_keys(ka, kb), std::move(prod));
                if (!inserted) {
                    it->second += prod;
                }
            }
        }
        std::vector<term_type> v;
        v.reserve(acc.size());
        for (auto &[k, c] : acc) {
            if (!traits::is_zero(c)) {
                v.emplace_back(k, std::move(c));
            }
        }
        std::sort(v.begin(), v.end(), [](const term_type &x, const term_type &y) { return x.first < y.first; });
        r.terms_ = std::move(v);
        return r;
    }
};

using LaurentPoly = Polynomial<Int>;
using RatPoly = Polynomial<Rational>;

template <>
struct ring_traits<LaurentPoly> {
    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return LaurentPoly(1); }
    static bool is_zero(const LaurentPoly &c) { return c.is_zero(); }
    static std::optional<LaurentPoly> inverse(const LaurentPoly &c) { return c.unit_inverse(); }
    static std::string to_string(const LaurentPoly &c) { return c.to_string(); }
};

template <>
struct ring_traits<RatPoly> {
    static RatPoly zero() { return {}; }
    static RatPoly one() { return RatPoly(1); }
    static bool is_zero(const RatPoly &c) { return c.is_zero(); }
    static std::optional<RatPoly> inverse(const RatPoly &c) { return c.unit_inverse(); }
    static std::string to_string(const RatPoly &c) { return c.to_string(); }
};

// Convenience constructors for the common one-letter monomials.
inline LaurentPoly var_x(int k = 1) { return LaurentPoly::variable(Var::x, k); }
inline LaurentPoly var_y(int k = 1) { return LaurentPoly::variable(Var::y, k); }
inline LaurentPoly var_p(int k = 1) { return LaurentPoly::variable(Var::p, k); }
inline LaurentPoly var_q(int k = 1) { return LaurentPoly::variable(Var::q, k); }
inline LaurentPoly var_s(int k = 1) { return LaurentPoly::variable(Var::s, k); }

// Parses the canonical text form ("p^2+2*p*q-q^-1+3"); no parentheses.
LaurentPoly parse_laurent(const std::string &text);

RatPoly to_ratpoly(const LaurentPoly &p);

// Inverse of to_ratpoly; nullopt if some coefficient is not an integer.
std::optional<LaurentPoly> to_laurent(const RatPoly &p);

} // namespace pqeuler

#endif
