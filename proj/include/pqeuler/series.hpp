#ifndef PQEULER_SERIES_HPP
#define PQEULER_SERIES_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <pqeuler/polynomial.hpp>

namespace pqeuler
{

// Power series in t truncated after t^order, with coefficients in the ring C.
// All arithmetic is exact modulo t^(order+1).
template <typename C>
class TruncSeries
{
public:
    using traits = ring_traits<C>;

    TruncSeries() : TruncSeries(0) {}
    explicit TruncSeries(int order) : coeffs_(check_order(order) + 1, traits::zero()) {}
    TruncSeries(int order, std::vector<C> coeffs) : TruncSeries(order)
    {
        for (std::size_t k = 0; k < coeffs.size() && k < coeffs_.size(); ++k) {
            coeffs_[k] = std::move(coeffs[k]);
        }
    }

    static TruncSeries one(int order) { return constant(order, traits::one()); }
    static TruncSeries constant(int order, const C &c)
    {
        TruncSeries r(order);
        r.coeffs_[0] = c;
        return r;
    }
    // c * t^k (zero when k exceeds the order).
    static TruncSeries monomial(int order, int k, const C &c)
    {
        TruncSeries r(order);
        if (k >= 0 && k <= order) {
            r.coeffs_[static_cast<std::size_t>(k)] = c;
        }
        return r;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const C &operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    C &operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
    const std::vector<C> &coeffs() const { return coeffs_; }

    // Same series viewed at a different order (truncating or zero-padding).
    TruncSeries with_order(int order) const
    {
        TruncSeries r(order);
        for (int k = 0; k <= std::min(order, this->order()); ++k) {
            r[k] = (*this)[k];
        }
        return r;
    }

    // Multiply by t^k, k >= 0.
    TruncSeries shifted(int k) const
    {
        TruncSeries r(order());
        for (int i = 0; i + k <= order(); ++i) {
            r[i + k] = (*this)[i];
        }
        return r;
    }

    // Substitute t -> t^k.
    TruncSeries dilated(int k) const
    {
        TruncSeries r(order());
        for (int i = 0; i * k <= order(); ++i) {
            r[i * k] = (*this)[i];
        }
        return r;
    }

    TruncSeries operator-() const
    {
        TruncSeries r(order());
        for (int k = 0; k <= order(); ++k) {
            r[k] = -(*this)[k];
        }
        return r;
    }

    friend TruncSeries operator+(const TruncSeries &a, const TruncSeries &b)
    {
        require_same_order(a, b);
        TruncSeries r = a;
        for (int k = 0; k <= a.order(); ++k) {
            r[k] = a[k] + b[k];
        }
        return r;
    }
    friend TruncSeries operator-(const TruncSeries &a, const TruncSeries &b) { return a + (-b); }
    friend TruncSeries operator*(const TruncSeries &a, const TruncSeries &b) { return series_mul(a, b); }
    friend TruncSeries operator*(const C &c, const TruncSeries &a)
    {
        TruncSeries r(a.order());
        for (int k = 0; k <= a.order(); ++k) {
            r[k] = c * a[k];
        }
        return r;
    }
    friend bool operator==(const TruncSeries &a, const TruncSeries &b) { return a.coeffs_ == b.coeffs_; }

    friend TruncSeries series_mul(const TruncSeries &f, const TruncSeries &g)
    {
        require_same_order(f, g);
        const int n = f.order();
        TruncSeries r(n);
        for (int i = 0; i <= n; ++i) {
            if (traits::is_zero(f[i])) {
                continue;
            }
            for (int j = 0; i + j <= n; ++j) {
                if (!traits::is_zero(g[j])) {
                    r[i + j] = r[i + j] + f[i] * g[j];
                }
            }
        }
        return r;
    }

    // Multiplicative inverse; the constant term must be a unit of C.
    friend TruncSeries series_recip(const TruncSeries &f)
    {
        auto inv0 = traits::inverse(f[0]);
        if (!inv0) {
            throw NotInvertible("series not invertible: constant term " + traits::to_string(f[0])
                                + " is not a unit");
        }
        const int n = f.order();
        TruncSeries g(n);
        g[0] = *inv0;
        for (int k = 1; k <= n; ++k) {
            C acc = traits::zero();
            for (int i = 1; i <= k; ++i) {
                if (!traits::is_zero(f[i]) && !traits::is_zero(g[k - i])) {
                    acc = acc + f[i] * g[k - i];
                }
            }
            g[k] = -(*inv0 * acc);
        }
        return g;
    }

    // num / den, for den with a unit constant term.
    friend TruncSeries series_from_fraction(const TruncSeries &num, const TruncSeries &den)
    {
        return series_mul(num, series_recip(den));
    }

    std::string to_string() const;

private:
    std::vector<C> coeffs_;

    static std::size_t check_order(int order)
    {
        if (order < 0) {
            throw std::invalid_argument("series order must be non-negative");
        }
        return static_cast<std::size_t>(order);
    }

    static void require_same_order(const TruncSeries &a, const TruncSeries &b)
    {
        if (a.order() != b.order()) {
            throw std::invalid_argument("series orders differ: " + std::to_string(a.order()) + " vs "
                                        + std::to_string(b.order()));
        }
    }
};

using LaurentSeries = TruncSeries<LaurentPoly>;
using RatPolySeries = TruncSeries<RatPoly>;
using RationalSeries = TruncSeries<Rational>;

namespace detail
{

// True when s has a top-level '+' or '-' after its first character (an
// exponent sign such as "q^-1" does not count).
inline bool has_binary_sign(const std::string &s)
{
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '^') {
            return true;
        }
    }
    return false;
}

template <typename C>
std::string coefficient_text(const C &c, bool &negative, bool &is_one, bool &compound)
{
    std::string s = ring_traits<C>::to_string(c);
    negative = false;
    compound = has_binary_sign(s);
    if (!compound && !s.empty() && s[0] == '-') {
        negative = true;
        s = s.substr(1);
    }
    is_one = (s == "1");
    return s;
}

} // namespace detail

// Human-readable form: "1 + t^2 + (p^2+2*p*q+q^2+1)*t^4".
template <typename C>
std::string TruncSeries<C>::to_string() const
{
    std::string out;
    for (int k = 0; k <= order(); ++k) {
        if (traits::is_zero((*this)[k])) {
            continue;
        }
        bool neg = false, one = false, compound = false;
        std::string c = detail::coefficient_text((*this)[k], neg, one, compound);
        std::string tpow = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
        std::string body;
        if (k == 0) {
            body = c;
        } else if (one) {
            body = tpow;
        } else if (compound) {
            body = "(" + c + ")*" + tpow;
        } else {
            body = c + "*" + tpow;
        }
        if (out.empty()) {
            out = neg ? "-" + body : body;
        } else {
            out += neg ? " - " + body : " + " + body;
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace pqeuler

#endif
