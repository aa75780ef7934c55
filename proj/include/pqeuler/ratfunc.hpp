#ifndef PQEULER_RATFUNC_HPP
#define PQEULER_RATFUNC_HPP

#include <optional>
#include <string>

#include <pqeuler/polynomial.hpp>

namespace pqeuler
{

// Element of Q(q): a quotient of two Laurent polynomials in q alone.
// Stored reduced: gcd(num, den) = 1, den has nonzero constant term, integer
// coefficients with no common content, and positive leading coefficient.
class RationalFunctionQ
{
public:
    RationalFunctionQ() : den_(1) {}
    RationalFunctionQ(int c) : num_(c), den_(1) {}
    RationalFunctionQ(const LaurentPoly &num);
    RationalFunctionQ(const LaurentPoly &num, const LaurentPoly &den);

    const LaurentPoly &numerator() const { return num_; }
    const LaurentPoly &denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    // The value as a Laurent polynomial when the denominator has cleared.
    std::optional<LaurentPoly> as_polynomial() const;

    std::optional<RationalFunctionQ> inverse() const;

    RationalFunctionQ operator-() const;
    friend RationalFunctionQ operator+(const RationalFunctionQ &a, const RationalFunctionQ &b);
    friend RationalFunctionQ operator-(const RationalFunctionQ &a, const RationalFunctionQ &b);
    friend RationalFunctionQ operator*(const RationalFunctionQ &a, const RationalFunctionQ &b);
    friend RationalFunctionQ operator/(const RationalFunctionQ &a, const RationalFunctionQ &b);

    // Cross-multiplication.
    friend bool operator==(const RationalFunctionQ &a, const RationalFunctionQ &b)
    {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    std::string to_string() const;

private:
    struct reduced_tag {
    };
    RationalFunctionQ(LaurentPoly num, LaurentPoly den, reduced_tag) : num_(std::move(num)), den_(std::move(den)) {}

    LaurentPoly num_;
    LaurentPoly den_;
};

template <>
struct ring_traits<RationalFunctionQ> {
    static RationalFunctionQ zero() { return {}; }
    static RationalFunctionQ one() { return RationalFunctionQ(1); }
    static bool is_zero(const RationalFunctionQ &c) { return c.is_zero(); }
    static std::optional<RationalFunctionQ> inverse(const RationalFunctionQ &c) { return c.inverse(); }
    static std::string to_string(const RationalFunctionQ &c) { return c.to_string(); }
};

} // namespace pqeuler

#endif
