#pragma once

#include "leftorder/germ.hpp"
#include "leftorder/order.hpp"
#include "leftorder/semigroup.hpp"

#include <span>
#include <string>
#include <vector>

namespace leftorder {

enum class SignCase {
    Seed,      // first germ of a tier, sign read off its own witness points
    Positive,  // moves some points of the current sequence up
    Negative,  // moves some points down and none up
};

struct TierDecision {
    std::size_t germ = 0;
    SignCase how = SignCase::Seed;
    int epsilon = 1;
};

/// One sequence of the procedure: the seed's witness points refined to the
/// subsequence on which every decided germ of the tier has its chosen sign.
/// `deferred` are the germs that fixed every point of the sequence.
struct Tier {
    std::size_t seed = 0;
    std::vector<TierDecision> decisions;
    std::vector<std::size_t> deferred;
    std::vector<GridPoint> sequence;
};

struct DiagonalPoint {
    GridPoint point;
    std::size_t tier = 0;
};

// A semigroup word over the signed germs and the first witness point it moves up.
struct WordCheck {
    std::vector<std::size_t> factors;
    std::size_t point = 0;
};

struct GermOrderTranscript {
    std::vector<ParamGerm> germs;
    std::size_t depth = 0;
    std::size_t max_len = 0;
    SignVector epsilons;
    std::vector<Tier> tiers;
    std::vector<DiagonalPoint> witness;
    std::vector<WordCheck> checks;
    bool passed = false;
    std::string failure;  // offending word when !passed
};

const char* to_string(SignCase c);

/// Sign selection on sampled data: decide the first undecided germ on its own
/// witness points, then every other undecided germ on the (refined) sequence;
/// germs fixing the whole sequence start the next tier. The tiers are merged
/// shell by shell into one witness sequence, and every semigroup word of
/// length <= max_len over the signed germs must move some witness point up.
GermOrderTranscript select_signs(std::span<const ParamGerm> germs, std::size_t depth, std::size_t max_len);

// Evaluates a word over germ indices (generator i = germs[i]) at (x, s),
// applying the rightmost letter first.
Rational eval_germ_word(std::span<const ParamGerm> germs, const Word& word, const Rational& x, const Rational& s);

struct GermComparison {
    Cmp result = Cmp::Unknown;
    bool sampled = false;  // Equal only means "equal at every witness point"
    std::string reason;    // why Unknown
};

// u vs v by the sign of (u^-1 v)(p_j) - p_j at the first witness point where it
// is nonzero: positive means u < v.
GermComparison germ_compare(const GermOrderTranscript& transcript, const Word& u, const Word& v);

// Re-evaluates the recorded tiers and word checks. Empty string on success.
std::string verify_transcript(const GermOrderTranscript& transcript);

/// OrderOracle view over a transcript, for generic order checks.
class GermOrderOracle : public OrderOracle {
public:
    explicit GermOrderOracle(const GermOrderTranscript& transcript);

    Cmp compare(const Word& u, const Word& v) const override;
    const Presentation& presentation() const override { return presentation_; }
    std::string name() const override { return "germ"; }

private:
    const GermOrderTranscript& transcript_;
    Presentation presentation_;
};

}  // namespace leftorder
