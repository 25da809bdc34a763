#pragma once

#include "leftorder/rational.hpp"
#include "leftorder/word.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace leftorder {

// Row-major 2x2 matrix over the rationals.
struct Matrix2 {
    std::array<Rational, 4> entries{Rational(1), Rational(0), Rational(0), Rational(1)};

    static Matrix2 identity() { return {}; }
    Rational determinant() const;
    Matrix2 inverse() const;  // throws DomainError when singular
    bool is_identity() const;

    friend Matrix2 operator*(const Matrix2& lhs, const Matrix2& rhs);
    friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

std::string to_string(const Matrix2& m);

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
    std::optional<bool> amenable;
    // Generator index -> image; either empty or covering every generator.
    std::map<std::size_t, Matrix2> representation;

    std::size_t rank() const { return generators.size(); }
    bool is_free() const { return relators.empty(); }
    std::optional<std::size_t> generator_index(std::string_view name) const;

    // Image of a word under the registered representation; requires one.
    Matrix2 represent(const Word& word) const;

    friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Parses the line-oriented presentation format:
//   gens: a b c
//   rels: a^2 c^-1 b^-1 a^-1, b^3 c^-1 b^-1 a^-1
//   amenable: false
//   rep: a = [[1,1],[0,1]] b = [[1,0],[1,1]]
// Throws ParseError carrying line and column.
Presentation parse_presentation(std::string_view text);

// Inverse of parse_presentation up to whitespace and comments.
std::string serialize(const Presentation& p);

// Whitespace-separated tokens `id` or `id^k`; "1" (or "e" when no generator
// has that name) denotes the identity.
Word parse_word(std::string_view text, const Presentation& p);

std::string to_string(const Word& word, const Presentation& p);

// Checks every structural invariant; throws StructuralError.
void validate(const Presentation& p);

}  // namespace leftorder
