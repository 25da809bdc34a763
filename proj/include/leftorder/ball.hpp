#pragma once

#include "leftorder/word_problem.hpp"

#include <vector>

namespace leftorder {

struct BallElement {
    Word word;
    // Distinctness from some earlier element could not be decided in budget.
    bool unresolved = false;
};

// All group elements representable by words of length <= radius, one
// shortlex-least representative each, in shortlex order.
std::vector<BallElement> enumerate_ball(const WordProblem& oracle, std::size_t radius, const Budget& budget);
std::vector<BallElement> enumerate_ball(const Presentation& p, std::size_t radius, const Budget& budget);

// Freely reduced words of length <= radius in shortlex order (no quotienting).
std::vector<Word> free_ball(std::size_t generator_count, std::size_t radius);

}  // namespace leftorder
