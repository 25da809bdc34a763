#pragma once

#include "leftorder/word_problem.hpp"

#include <span>
#include <string>
#include <vector>

namespace leftorder {

using SignVector = std::vector<int>;  // entries in {-1, +1}

// A product x_{f0}^{e_{f0}} x_{f1}^{e_{f1}} ... of signed subset elements.
struct SemigroupWord {
    std::vector<std::size_t> factors;
    Word product;  // freely reduced value of the product
};

struct KilledAssignment {
    SignVector epsilons;
    SemigroupWord killer;
    IdentityTrace trace;  // product -> empty word
};

struct SubsetElement {
    Word word;
    NotIdentityWitness witness;
};

/// Outcome of the bounded semigroup criterion. When `not_left_orderable` is
/// set every one of the 2^n sign vectors appears in `killed`; otherwise the
/// surviving sign vectors are listed (sorted, -1 before +1) and no claim is made.
struct CriterionResult {
    Presentation presentation;
    std::vector<SubsetElement> subset;
    std::size_t max_len = 0;
    Budget budget;
    bool not_left_orderable = false;
    std::vector<KilledAssignment> killed;
    std::vector<SignVector> survivors;
};

// All sign vectors of length n, lexicographic with -1 < +1.
std::vector<SignVector> all_sign_vectors(std::size_t n);

CriterionResult semigroup_criterion(const Presentation& p, std::span<const Word> subset, std::size_t max_len,
                                    const Budget& budget, unsigned threads = 1);

// Replays every embedded certificate. Returns an empty string on success,
// otherwise the first failure.
std::string verify_criterion(const CriterionResult& result);

}  // namespace leftorder
