#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace leftorder {

struct Letter {
    std::size_t generator = 0;
    std::int64_t exponent = 0;

    friend bool operator==(const Letter&, const Letter&) = default;
};

/// A freely reduced word: adjacent letters use distinct generators and no
/// exponent is zero. The only way to build one is through free reduction.
class Word {
public:
    Word() = default;

    // Throws StructuralError if some letter references generator >= generator_count.
    static Word reduce(std::span<const Letter> raw, std::size_t generator_count);
    // Unchecked variant for letters already known to be in range.
    static Word reduce(std::span<const Letter> raw);
    static Word generator(std::size_t index, std::int64_t exponent = 1);
    // Signed single-letter codes: +(g+1) for g, -(g+1) for g^-1.
    static Word from_codes(std::span<const int> codes);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    // Letter count: sum of |exponent|.
    std::size_t length() const;
    std::size_t max_generator() const;

    Word inverse() const;
    Word power(std::int64_t k) const;
    std::vector<int> codes() const;
    // Exponent sum per generator.
    std::vector<std::int64_t> exponent_sums(std::size_t generator_count) const;

    friend Word operator*(const Word& lhs, const Word& rhs);
    friend bool operator==(const Word&, const Word&) = default;

private:
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    std::vector<Letter> letters_;
};

// Free reduction of an arbitrary letter list against a generator count.
Word free_reduce(std::span<const Letter> raw, std::size_t generator_count);

// Shortlex order: shorter first, then letter by letter with a < a^-1 < b < b^-1 < ...
bool shortlex_less(const Word& lhs, const Word& rhs);

// Human-readable form over the given names, e.g. "a^2 b^-1"; "e" for the empty word.
std::string to_string(const Word& word, std::span<const std::string> names);

struct WordHash {
    std::size_t operator()(const Word& word) const;
};

}  // namespace leftorder
