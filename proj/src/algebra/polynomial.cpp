#include <pqeuler/polynomial.hpp>

#include <cctype>
#include <stdexcept>

namespace pqeuler
{

char var_name(Var v)
{
    static constexpr char names[] = {'x', 'y', 'p', 'q', 's'};
    return names[static_cast<unsigned>(v)];
}

std::optional<Var> parse_var(char c)
{
    switch (c) {
    case 'x':
        return Var::x;
    case 'y':
        return Var::y;
    case 'p':
        return Var::p;
    case 'q':
        return Var::q;
    case 's':
        return Var::s;
    default:
        return std::nullopt;
    }
}

std::string detail::monomial_string(const Exponents &e)
{
    std::string out;
    for (Var v : all_vars) {
        const int k = e[static_cast<unsigned>(v)];
        if (k == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += var_name(v);
        if (k != 1) {
            out += '^' + std::to_string(k);
        }
    }
    return out;
}

Int factorial(unsigned n)
{
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

Rational rising_factorial(const Rational &a, unsigned k)
{
    Rational r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= a + i;
    }
    return r;
}

Rational parse_rational(const std::string &text)
{
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Int(text));
        }
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den.is_zero()) {
            throw std::invalid_argument("zero denominator");
        }
        return Rational(num, den);
    } catch (const std::runtime_error &) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
}

namespace
{

class LaurentParser
{
public:
    explicit LaurentParser(const std::string &text) : s_(text) {}

    LaurentPoly parse()
    {
        skip_space();
        if (pos_ == s_.size()) {
            fail("empty polynomial");
        }
        LaurentPoly result;
        bool first = true;
        while (pos_ < s_.size()) {
            bool negative = false;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                negative = s_[pos_] == '-';
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            skip_space();
            LaurentPoly t = term();
            result += negative ? -t : t;
            first = false;
            skip_space();
        }
        return result;
    }

private:
    const std::string &s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string &what) const
    {
        throw std::invalid_argument("cannot parse polynomial '" + s_ + "': " + what + " at offset "
                                    + std::to_string(pos_));
    }

    void skip_space()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }

    Int integer()
    {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected digits");
        }
        return Int(s_.substr(start, pos_ - start));
    }

    int small_integer()
    {
        bool negative = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            negative = s_[pos_] == '-';
            ++pos_;
        }
        const Int v = integer();
        if (v > 100000) {
            fail("exponent too large");
        }
        const int k = v.convert_to<int>();
        return negative ? -k : k;
    }

    // factor ('*' factor)*, factor = integer | var ('^' int)?
    LaurentPoly term()
    {
        Int coeff = 1;
        Exponents e{};
        while (true) {
            skip_space();
            if (pos_ >= s_.size()) {
                fail("unexpected end");
            }
            if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                coeff *= integer();
            } else if (auto v = parse_var(s_[pos_])) {
                ++pos_;
                int k = 1;
                if (pos_ < s_.size() && s_[pos_] == '^') {
                    ++pos_;
                    k = small_integer();
                }
                e[static_cast<unsigned>(*v)] += k;
            } else {
                fail("unexpected character");
            }
            skip_space();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        return LaurentPoly::monomial(coeff, e);
    }
};

} // namespace

LaurentPoly parse_laurent(const std::string &text)
{
    return LaurentParser(text).parse();
}

RatPoly to_ratpoly(const LaurentPoly &p)
{
    std::vector<RatPoly::term_type> v;
    v.reserve(p.size());
    for (const auto &[k, c] : p.raw_terms()) {
        v.emplace_back(k, Rational(c));
    }
    return RatPoly::from_terms(std::move(v));
}

std::optional<LaurentPoly> to_laurent(const RatPoly &p)
{
    std::vector<LaurentPoly::term_type> v;
    v.reserve(p.size());
    for (const auto &[k, c] : p.raw_terms()) {
        if (denominator(c) != 1) {
            return std::nullopt;
        }
        v.emplace_back(k, numerator(c));
    }
    return LaurentPoly::from_terms(std::move(v));
}

} // namespace pqeuler
