#include "leftorder/ball.hpp"

namespace leftorder {

std::vector<Word> free_ball(std::size_t generator_count, std::size_t radius) {
    // Letter codes in shortlex rank order: a, a^-1, b, b^-1, ...
    std::vector<int> alphabet;
    for (std::size_t g = 0; g < generator_count; ++g) {
        alphabet.push_back(static_cast<int>(g) + 1);
        alphabet.push_back(-static_cast<int>(g) - 1);
    }
    std::vector<Word> out{Word()};
    std::vector<std::vector<int>> level{{}};
    for (std::size_t len = 1; len <= radius; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& prefix : level) {
            for (int code : alphabet) {
                if (!prefix.empty() && prefix.back() == -code) continue;
                auto w = prefix;
                w.push_back(code);
                out.push_back(Word::from_codes(w));
                next.push_back(std::move(w));
            }
        }
        level = std::move(next);
    }
    return out;
}

std::vector<BallElement> enumerate_ball(const WordProblem& oracle, std::size_t radius, const Budget& budget) {
    std::vector<BallElement> kept;
    for (Word& candidate : free_ball(oracle.presentation().rank(), radius)) {
        bool duplicate = false;
        bool unresolved = false;
        for (const BallElement& k : kept) {
            const IdentityStatus st = oracle.status(k.word.inverse() * candidate, budget);
            if (st.verdict == Verdict::Identity) {
                duplicate = true;
                break;
            }
            if (st.verdict == Verdict::Unknown) unresolved = true;
        }
        if (!duplicate) kept.push_back({std::move(candidate), unresolved});
    }
    return kept;
}

std::vector<BallElement> enumerate_ball(const Presentation& p, std::size_t radius, const Budget& budget) {
    return enumerate_ball(WordProblem(p), radius, budget);
}

}  // namespace leftorder
