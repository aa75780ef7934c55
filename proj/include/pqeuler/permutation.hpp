#ifndef PQEULER_PERMUTATION_HPP
#define PQEULER_PERMUTATION_HPP

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pqeuler
{

// A permutation of [n] in one-line notation. Values and positions are
// 1-based in the public interface.
class Permutation
{
public:
    Permutation() = default;

    // Throws std::invalid_argument unless word is a bijection onto [n].
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);

    // "4157368" for n <= 9, or a comma-separated list "10,2,1,...".
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(word_.size()); }

    // sigma(i) for i in [n].
    int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }

    std::span<const int> word() const { return word_; }

    Permutation inverse() const;

    // Advances to the lexicographically next permutation of [n]; returns
    // false (leaving the word sorted) after the last one.
    bool advance();

    std::string to_string() const;

    friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
    std::vector<int> word_;
};

} // namespace pqeuler

#endif
