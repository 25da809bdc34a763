#include "leftorder/word.hpp"

#include "leftorder/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace leftorder {

Word Word::reduce(std::span<const Letter> raw) {
    std::vector<Letter> stack;
    stack.reserve(raw.size());
    for (const Letter& letter : raw) {
        if (letter.exponent == 0) continue;
        if (!stack.empty() && stack.back().generator == letter.generator) {
            stack.back().exponent += letter.exponent;
            if (stack.back().exponent == 0) stack.pop_back();
        } else {
            stack.push_back(letter);
        }
    }
    return Word(std::move(stack));
}

Word Word::reduce(std::span<const Letter> raw, std::size_t generator_count) {
    for (const Letter& letter : raw) {
        if (letter.generator >= generator_count) {
            throw StructuralError("unknown generator index " + std::to_string(letter.generator));
        }
    }
    return reduce(raw);
}

Word Word::generator(std::size_t index, std::int64_t exponent) {
    Letter letter{index, exponent};
    return reduce(std::span<const Letter>(&letter, 1));
}

Word Word::from_codes(std::span<const int> codes) {
    std::vector<Letter> raw;
    raw.reserve(codes.size());
    for (int code : codes) {
        if (code == 0) throw StructuralError("zero letter code");
        raw.push_back({static_cast<std::size_t>(std::abs(code) - 1), code > 0 ? 1 : -1});
    }
    return reduce(raw);
}

std::size_t Word::length() const {
    std::size_t total = 0;
    for (const Letter& letter : letters_) total += static_cast<std::size_t>(std::llabs(letter.exponent));
    return total;
}

std::size_t Word::max_generator() const {
    std::size_t result = 0;
    for (const Letter& letter : letters_) result = std::max(result, letter.generator);
    return result;
}

Word Word::inverse() const {
    std::vector<Letter> inverted(letters_.rbegin(), letters_.rend());
    for (Letter& letter : inverted) letter.exponent = -letter.exponent;
    return Word(std::move(inverted));
}

Word Word::power(std::int64_t k) const {
    if (k == 0 || letters_.empty()) return Word();
    const Word base = k > 0 ? *this : inverse();
    std::vector<Letter> raw;
    const std::int64_t count = k > 0 ? k : -k;
    raw.reserve(base.letters_.size() * static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        raw.insert(raw.end(), base.letters_.begin(), base.letters_.end());
    }
    return reduce(raw);
}

std::vector<int> Word::codes() const {
    std::vector<int> out;
    out.reserve(length());
    for (const Letter& letter : letters_) {
        const int code = static_cast<int>(letter.generator) + 1;
        const std::int64_t count = std::llabs(letter.exponent);
        for (std::int64_t i = 0; i < count; ++i) out.push_back(letter.exponent > 0 ? code : -code);
    }
    return out;
}

std::vector<std::int64_t> Word::exponent_sums(std::size_t generator_count) const {
    std::vector<std::int64_t> sums(generator_count, 0);
    for (const Letter& letter : letters_) {
        if (letter.generator >= generator_count) {
            throw StructuralError("unknown generator index " + std::to_string(letter.generator));
        }
        sums[letter.generator] += letter.exponent;
    }
    return sums;
}

Word operator*(const Word& lhs, const Word& rhs) {
    std::vector<Letter> raw;
    raw.reserve(lhs.letters_.size() + rhs.letters_.size());
    raw.insert(raw.end(), lhs.letters_.begin(), lhs.letters_.end());
    raw.insert(raw.end(), rhs.letters_.begin(), rhs.letters_.end());
    return Word::reduce(raw);
}

Word free_reduce(std::span<const Letter> raw, std::size_t generator_count) {
    return Word::reduce(raw, generator_count);
}

namespace {

// a < a^-1 < b < b^-1 < ...
int letter_rank(int code) {
    const int g = code > 0 ? code : -code;
    return 2 * (g - 1) + (code > 0 ? 0 : 1);
}

}  // namespace

bool shortlex_less(const Word& lhs, const Word& rhs) {
    const std::size_t ll = lhs.length();
    const std::size_t rl = rhs.length();
    if (ll != rl) return ll < rl;
    const auto lc = lhs.codes();
    const auto rc = rhs.codes();
    return std::lexicographical_compare(lc.begin(), lc.end(), rc.begin(), rc.end(),
                                        [](int a, int b) { return letter_rank(a) < letter_rank(b); });
}

std::string to_string(const Word& word, std::span<const std::string> names) {
    if (word.empty()) return "e";
    std::string out;
    for (const Letter& letter : word.letters()) {
        if (!out.empty()) out += ' ';
        out += letter.generator < names.size() ? names[letter.generator]
                                               : "g" + std::to_string(letter.generator);
        if (letter.exponent != 1) out += '^' + std::to_string(letter.exponent);
    }
    return out;
}

std::size_t WordHash::operator()(const Word& word) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const Letter& letter : word.letters()) {
        h ^= std::hash<std::size_t>{}(letter.generator) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= std::hash<std::int64_t>{}(letter.exponent) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace leftorder
