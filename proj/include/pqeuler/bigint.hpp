#ifndef PQEULER_BIGINT_HPP
#define PQEULER_BIGINT_HPP

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pqeuler
{

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Per-coefficient-ring operations needed by the polynomial and series
// templates. Specialized for Int and Rational here, for the rational
// function field in ratfunc.hpp.
template <typename C>
struct ring_traits;

template <>
struct ring_traits<Int> {
    static Int zero() { return Int(0); }
    static Int one() { return Int(1); }
    static bool is_zero(const Int &c) { return c.is_zero(); }
    static std::optional<Int> inverse(const Int &c)
    {
        if (c == 1 || c == -1) {
            return c;
        }
        return std::nullopt;
    }
    // Exact quotient a/b, or nullopt when b does not divide a.
    static std::optional<Int> divide(const Int &a, const Int &b)
    {
        if (b.is_zero() || a % b != 0) {
            return std::nullopt;
        }
        return Int(a / b);
    }
    static bool is_negative(const Int &c) { return c < 0; }
    static std::string to_string(const Int &c) { return c.str(); }
};

template <>
struct ring_traits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational &c) { return c.is_zero(); }
    static std::optional<Rational> inverse(const Rational &c)
    {
        if (c.is_zero()) {
            return std::nullopt;
        }
        return Rational(1) / c;
    }
    static std::optional<Rational> divide(const Rational &a, const Rational &b)
    {
        if (b.is_zero()) {
            return std::nullopt;
        }
        return Rational(a / b);
    }
    static bool is_negative(const Rational &c) { return c < 0; }
    static std::string to_string(const Rational &c)
    {
        if (denominator(c) == 1) {
            return numerator(c).str();
        }
        return numerator(c).str() + "/" + denominator(c).str();
    }
};

Int factorial(unsigned n);

// (a)_k = a(a+1)...(a+k-1); 1 when k = 0.
Rational rising_factorial(const Rational &a, unsigned k);

// Parses "123", "-4" or "3/7".
Rational parse_rational(const std::string &text);

} // namespace pqeuler

#endif
