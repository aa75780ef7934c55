#include <pqeuler/ratfunc.hpp>

#include <stdexcept>
#include <vector>

namespace pqeuler
{

namespace
{

// q^valuation * (c[0] + c[1] q + ...), c[0] != 0 and c.back() != 0 unless empty.
struct DenseQ {
    int valuation = 0;
    std::vector<Rational> c;
};

constexpr unsigned q_index = static_cast<unsigned>(Var::q);

DenseQ to_dense(const LaurentPoly &p)
{
    DenseQ d;
    if (p.is_zero()) {
        return d;
    }
    const auto terms = p.terms();
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto &[e, c] : terms) {
        for (std::size_t i = 0; i < num_vars; ++i) {
            if (i != q_index && e[i] != 0) {
                throw std::invalid_argument("rational function in q received " + p.to_string());
            }
        }
        const int k = e[q_index];
        lo = first ? k : std::min(lo, k);
        hi = first ? k : std::max(hi, k);
        first = false;
    }
    d.valuation = lo;
    d.c.assign(static_cast<std::size_t>(hi - lo + 1), Rational(0));
    for (const auto &[e, c] : terms) {
        d.c[static_cast<std::size_t>(e[q_index] - lo)] = Rational(c);
    }
    return d;
}

void trim(std::vector<Rational> &c)
{
    while (!c.empty() && c.back().is_zero()) {
        c.pop_back();
    }
}

// Remainder of a / b over Q (ordinary polynomials, no valuation).
std::vector<Rational> poly_rem(std::vector<Rational> a, const std::vector<Rational> &b)
{
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        const Rational f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] -= f * b[i];
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

std::vector<Rational> poly_quot(std::vector<Rational> a, const std::vector<Rational> &b)
{
    trim(a);
    if (a.size() < b.size()) {
        return {};
    }
    std::vector<Rational> quot(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        const Rational f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        quot[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] -= f * b[i];
        }
        a.pop_back();
        trim(a);
    }
    if (!a.empty()) {
        throw std::logic_error("inexact polynomial division");
    }
    return quot;
}

std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

LaurentPoly from_dense(int valuation, const std::vector<Int> &c)
{
    std::vector<LaurentPoly::term_type> terms;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i].is_zero()) {
            terms.emplace_back(detail::pack(exponents_of(Var::q, valuation + static_cast<int>(i))), c[i]);
        }
    }
    return LaurentPoly::from_terms(std::move(terms));
}

Int lcm_of_denominators(const std::vector<Rational> &a, const std::vector<Rational> &b)
{
    Int l = 1;
    for (const auto *v : {&a, &b}) {
        for (const auto &x : *v) {
            l = boost::multiprecision::lcm(l, Int(boost::multiprecision::denominator(x)));
        }
    }
    return l;
}

} // namespace

RationalFunctionQ::RationalFunctionQ(const LaurentPoly &num) : RationalFunctionQ(num, LaurentPoly(1)) {}

RationalFunctionQ::RationalFunctionQ(const LaurentPoly &num, const LaurentPoly &den)
{
    if (den.is_zero()) {
        throw std::domain_error("rational function with zero denominator");
    }
    DenseQ n = to_dense(num);
    DenseQ d = to_dense(den);
    if (n.c.empty()) {
        num_ = LaurentPoly();
        den_ = LaurentPoly(1);
        return;
    }
    const int valuation = n.valuation - d.valuation;
    const auto g = poly_gcd(n.c, d.c);
    auto nq = poly_quot(n.c, g);
    auto dq = poly_quot(d.c, g);
    // Clear denominators, then remove the common content.
    const Int l = lcm_of_denominators(nq, dq);
    std::vector<Int> ni, di;
    Int content = 0;
    for (const auto &x : nq) {
        ni.push_back(Int(boost::multiprecision::numerator(Rational(x * l))));
        content = boost::multiprecision::gcd(content, ni.back());
    }
    for (const auto &x : dq) {
        di.push_back(Int(boost::multiprecision::numerator(Rational(x * l))));
        content = boost::multiprecision::gcd(content, di.back());
    }
    if (di.back() < 0) {
        content = -content;
    }
    for (auto &x : ni) {
        x /= content;
    }
    for (auto &x : di) {
        x /= content;
    }
    num_ = from_dense(valuation, ni);
    den_ = from_dense(0, di);
}

std::optional<LaurentPoly> RationalFunctionQ::as_polynomial() const
{
    if (den_ == LaurentPoly(1)) {
        return num_;
    }
    return std::nullopt;
}

std::optional<RationalFunctionQ> RationalFunctionQ::inverse() const
{
    if (num_.is_zero()) {
        return std::nullopt;
    }
    return RationalFunctionQ(den_, num_);
}

RationalFunctionQ RationalFunctionQ::operator-() const
{
    return RationalFunctionQ(-num_, den_, reduced_tag{});
}

RationalFunctionQ operator+(const RationalFunctionQ &a, const RationalFunctionQ &b)
{
    const LaurentPoly one(1);
    if (a.den_ == one && b.den_ == one) {
        return RationalFunctionQ(a.num_ + b.num_, one, RationalFunctionQ::reduced_tag{});
    }
    if (a.den_ == b.den_) {
        return RationalFunctionQ(a.num_ + b.num_, a.den_);
    }
    return RationalFunctionQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunctionQ operator-(const RationalFunctionQ &a, const RationalFunctionQ &b)
{
    return a + (-b);
}

RationalFunctionQ operator*(const RationalFunctionQ &a, const RationalFunctionQ &b)
{
    const LaurentPoly one(1);
    if (a.den_ == one && b.den_ == one) {
        return RationalFunctionQ(a.num_ * b.num_, one, RationalFunctionQ::reduced_tag{});
    }
    return RationalFunctionQ(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunctionQ operator/(const RationalFunctionQ &a, const RationalFunctionQ &b)
{
    auto inv = b.inverse();
    if (!inv) {
        throw NotInvertible("division by the zero rational function");
    }
    return a * *inv;
}

std::string RationalFunctionQ::to_string() const
{
    if (den_ == LaurentPoly(1)) {
        return num_.to_string();
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace pqeuler
