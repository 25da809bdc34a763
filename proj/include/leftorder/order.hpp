#pragma once

#include "leftorder/presentation.hpp"
#include "leftorder/word_problem.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>

namespace leftorder {

enum class Cmp { Less, Equal, Greater, Unknown };

const char* to_string(Cmp c);
Cmp flip(Cmp c);

// Lexicographic comparison of equal-length integer vectors; the first
// coordinate is the most significant.
Cmp lex_order_compare(std::span<const std::int64_t> u, std::span<const std::int64_t> v);

/// Magnus order on a free group: compare the expansions x -> 1 + X,
/// x^-1 -> 1 - X + X^2 - ..., truncated at the letter count of u^-1 v, at the
/// first monomial (degree, then variable index) whose coefficients differ.
Cmp magnus_compare(const Presentation& p, const Word& u, const Word& v);

// Coefficient of the monomial X_{m0} X_{m1} ... in the Magnus expansion of w.
Integer magnus_coefficient(const Word& w, std::span<const std::size_t> monomial);

/// A left order on the group of a presentation, queried pairwise.
class OrderOracle {
public:
    virtual ~OrderOracle() = default;

    virtual Cmp compare(const Word& u, const Word& v) const = 0;
    virtual const Presentation& presentation() const = 0;
    virtual std::string name() const = 0;
    // A normal form when the oracle has one: equal elements map to equal words.
    virtual std::optional<Word> canonical(const Word&) const { return std::nullopt; }
};

/// Lex order on Z^n given by a presentation whose group is free abelian on its
/// generators (checked at construction with the word-problem oracle).
class LexOracle : public OrderOracle {
public:
    explicit LexOracle(Presentation p, const Budget& budget = {});

    Cmp compare(const Word& u, const Word& v) const override;
    const Presentation& presentation() const override { return presentation_; }
    std::string name() const override { return "lex"; }
    std::optional<Word> canonical(const Word& w) const override;

private:
    Presentation presentation_;
};

class MagnusOracle : public OrderOracle {
public:
    explicit MagnusOracle(Presentation p);

    Cmp compare(const Word& u, const Word& v) const override;
    const Presentation& presentation() const override { return presentation_; }
    std::string name() const override { return "magnus"; }
    std::optional<Word> canonical(const Word& w) const override { return w; }

private:
    Presentation presentation_;
};

// "lex" or "magnus"; throws PreconditionError if the group does not fit.
std::unique_ptr<OrderOracle> make_order_oracle(const std::string& name, const Presentation& p,
                                               const Budget& budget = {});

}  // namespace leftorder
