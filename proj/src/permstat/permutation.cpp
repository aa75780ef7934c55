#include <pqeuler/permutation.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace pqeuler
{

Permutation::Permutation(std::vector<int> word) : word_(std::move(word))
{
    const int n = size();
    std::vector<bool> seen(word_.size() + 1, false);
    for (int v : word_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("not a permutation of [" + std::to_string(n) + "]");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text)
{
    std::vector<int> w;
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            const auto end = std::min(text.find(',', start), text.size());
            const auto tok = text.substr(start, end - start);
            if (tok.empty()) {
                throw std::invalid_argument("empty entry in permutation '" + std::string(text) + "'");
            }
            int v = 0;
            for (char c : tok) {
                if (!std::isdigit(static_cast<unsigned char>(c))) {
                    throw std::invalid_argument("bad character in permutation '" + std::string(text) + "'");
                }
                v = v * 10 + (c - '0');
                if (v > 1000000) {
                    throw std::invalid_argument("permutation entry too large");
                }
            }
            w.push_back(v);
            start = end + 1;
        }
    } else {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw std::invalid_argument("bad character in permutation '" + std::string(text) + "'");
            }
            w.push_back(c - '0');
        }
    }
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(word_.size());
    for (int i = 1; i <= size(); ++i) {
        inv[static_cast<std::size_t>((*this)(i)-1)] = i;
    }
    return Permutation(std::move(inv));
}

bool Permutation::advance()
{
    return std::next_permutation(word_.begin(), word_.end());
}

std::string Permutation::to_string() const
{
    std::string out;
    const bool compact = size() <= 9;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (!compact && i > 0) {
            out += ',';
        }
        out += std::to_string(word_[i]);
    }
    return out;
}

} // namespace pqeuler
