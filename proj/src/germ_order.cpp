#include "leftorder/germ_order.hpp"

#include "leftorder/errors.hpp"

#include <algorithm>
#include <set>

namespace leftorder {

const char* to_string(SignCase c) {
    switch (c) {
        case SignCase::Seed: return "seed";
        case SignCase::Positive: return "positive";
        case SignCase::Negative: return "negative";
    }
    return "?";
}

namespace {

// Germs plus lazily built inverses.
class GermEvaluator {
public:
    explicit GermEvaluator(std::span<const ParamGerm> germs) : germs_(germs), inverses_(germs.size()) {}

    const ParamGerm& signed_germ(std::size_t i, int epsilon) {
        if (i >= germs_.size()) throw StructuralError("germ index " + std::to_string(i) + " out of range");
        if (epsilon > 0) return germs_[i];
        if (!inverses_[i]) inverses_[i] = invert_param_germ(germs_[i]);
        return *inverses_[i];
    }

    Rational apply(const Word& word, const Rational& x, const Rational& s) {
        Rational y = x;
        const auto& letters = word.letters();
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
            const ParamGerm& g = signed_germ(it->generator, it->exponent > 0 ? 1 : -1);
            const std::int64_t count = it->exponent > 0 ? it->exponent : -it->exponent;
            for (std::int64_t k = 0; k < count; ++k) y = eval_param_germ(g, y, s);
        }
        return y;
    }

    // Applies signed factors right to left.
    Rational apply_factors(std::span<const std::size_t> factors, const SignVector& eps, const Rational& x,
                           const Rational& s) {
        Rational y = x;
        for (auto it = factors.rbegin(); it != factors.rend(); ++it) y = eval_param_germ(signed_germ(*it, eps[*it]), y, s);
        return y;
    }

private:
    std::span<const ParamGerm> germs_;
    std::vector<std::optional<ParamGerm>> inverses_;
};

// sign(h_s(x) - x), or 0 where the germ is undefined.
int displacement(const ParamGerm& g, const GridPoint& pt) {
    try {
        return sgn(eval_param_germ(g, pt.x, pt.s) - pt.x);
    } catch (const DomainError&) {
        return 0;
    }
}

std::vector<GridPoint> keep_sign(const std::vector<GridPoint>& seq, const ParamGerm& g, int epsilon) {
    std::vector<GridPoint> out;
    for (const GridPoint& pt : seq) {
        if (displacement(g, pt) == epsilon) out.push_back(pt);
    }
    return out;
}

std::vector<DiagonalPoint> merge_tiers(const std::vector<Tier>& tiers, std::size_t depth) {
    std::vector<DiagonalPoint> out;
    for (std::size_t m = 1; m <= depth; ++m) {
        for (std::size_t t = 0; t < tiers.size(); ++t) {
            for (const GridPoint& pt : tiers[t].sequence) {
                if (pt.shell == m) out.push_back({pt, t});
            }
        }
    }
    return out;
}

// All factor sequences of length 1..max_len over n letters, by length then lexicographically.
std::vector<std::vector<std::size_t>> semigroup_words(std::size_t n, std::size_t max_len) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::vector<std::size_t>> level{{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& prefix : level) {
            for (std::size_t i = 0; i < n; ++i) {
                auto w = prefix;
                w.push_back(i);
                next.push_back(std::move(w));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

std::string describe(std::span<const std::size_t> factors, std::span<const ParamGerm> germs, const SignVector& eps) {
    std::string out;
    for (std::size_t f : factors) {
        if (!out.empty()) out += ' ';
        out += germs[f].name;
        if (eps[f] < 0) out += "^-1";
    }
    return out;
}

bool moves_up(GermEvaluator& ev, std::span<const std::size_t> factors, const SignVector& eps, const GridPoint& pt) {
    try {
        return ev.apply_factors(factors, eps, pt.x, pt.s) > pt.x;
    } catch (const DomainError&) {
        return false;
    }
}

}  // namespace

Rational eval_germ_word(std::span<const ParamGerm> germs, const Word& word, const Rational& x, const Rational& s) {
    return GermEvaluator(germs).apply(word, x, s);
}

GermOrderTranscript select_signs(std::span<const ParamGerm> germs, std::size_t depth, std::size_t max_len) {
    if (germs.empty()) throw PreconditionError("need at least one germ");
    if (depth == 0) throw PreconditionError("depth must be at least 1");
    GermOrderTranscript out;
    out.germs.assign(germs.begin(), germs.end());
    out.depth = depth;
    out.max_len = max_len;
    out.epsilons.assign(germs.size(), 0);

    std::vector<std::vector<WitnessPoint>> witnesses;
    for (const ParamGerm& g : germs) {
        auto w = find_nontriviality_witness(g, depth);
        if (!w) throw PreconditionError("germ `" + g.name + "` has no nontriviality witness up to depth " + std::to_string(depth));
        witnesses.push_back(std::move(*w));
    }

    std::vector<std::size_t> undecided(germs.size());
    for (std::size_t i = 0; i < undecided.size(); ++i) undecided[i] = i;
    while (!undecided.empty()) {
        Tier tier;
        tier.seed = undecided.front();
        const ParamGerm& seed = germs[tier.seed];
        std::vector<GridPoint> seq;
        int up = 0, down = 0;
        for (const WitnessPoint& w : witnesses[tier.seed]) {
            seq.push_back(w.point);
            (w.image > w.point.x ? up : down) += 1;
        }
        // Keep the majority sign; ties go up.
        const int seed_eps = up >= down ? 1 : -1;
        seq = keep_sign(seq, seed, seed_eps);
        out.epsilons[tier.seed] = seed_eps;
        tier.decisions.push_back({tier.seed, SignCase::Seed, seed_eps});

        for (std::size_t k = 1; k < undecided.size(); ++k) {
            const std::size_t gi = undecided[k];
            bool any_up = false, any_down = false;
            for (const GridPoint& pt : seq) {
                const int d = displacement(germs[gi], pt);
                any_up |= d > 0;
                any_down |= d < 0;
            }
            if (any_up) {
                out.epsilons[gi] = 1;
                tier.decisions.push_back({gi, SignCase::Positive, 1});
                seq = keep_sign(seq, germs[gi], 1);
            } else if (any_down) {
                out.epsilons[gi] = -1;
                tier.decisions.push_back({gi, SignCase::Negative, -1});
                seq = keep_sign(seq, germs[gi], -1);
            } else {
                tier.deferred.push_back(gi);
            }
        }
        tier.sequence = std::move(seq);
        undecided = tier.deferred;
        out.tiers.push_back(std::move(tier));
    }
    out.witness = merge_tiers(out.tiers, depth);

    GermEvaluator ev(out.germs);
    out.passed = true;
    for (auto& factors : semigroup_words(germs.size(), max_len)) {
        std::optional<std::size_t> hit;
        for (std::size_t j = 0; j < out.witness.size() && !hit; ++j) {
            if (moves_up(ev, factors, out.epsilons, out.witness[j].point)) hit = j;
        }
        if (!hit) {
            out.passed = false;
            out.failure = "no witness point is moved up by " + describe(factors, out.germs, out.epsilons);
            break;
        }
        out.checks.push_back({std::move(factors), *hit});
    }
    return out;
}

GermComparison germ_compare(const GermOrderTranscript& t, const Word& u, const Word& v) {
    GermComparison out;
    const Word w = u.inverse() * v;
    if (!w.empty() && w.max_generator() >= t.germs.size()) throw StructuralError("word uses an unknown germ");
    if (w.empty()) {
        out.result = Cmp::Equal;
        return out;
    }
    GermEvaluator ev(t.germs);
    bool any_defined = false;
    for (const DiagonalPoint& dp : t.witness) {
        Rational y;
        try {
            y = ev.apply(w, dp.point.x, dp.point.s);
        } catch (const UnsupportedInverse& e) {
            out.reason = e.what();
            return out;
        } catch (const DomainError&) {
            continue;
        }
        any_defined = true;
        if (y > dp.point.x) {
            out.result = Cmp::Less;
            return out;
        }
        if (y < dp.point.x) {
            out.result = Cmp::Greater;
            return out;
        }
    }
    if (!any_defined) {
        out.reason = "word is undefined at every witness point";
        return out;
    }
    out.result = Cmp::Equal;
    out.sampled = true;
    return out;
}

std::string verify_transcript(const GermOrderTranscript& t) {
    const std::size_t k = t.germs.size();
    if (k == 0) return "no germs";
    if (t.depth == 0) return "depth must be positive";
    for (const ParamGerm& g : t.germs) {
        if (auto why = check_germ(g, t.depth); !why.empty()) return why;
    }
    if (t.epsilons.size() != k) return "sign vector has wrong length";
    for (int e : t.epsilons) {
        if (e != 1 && e != -1) return "sign vector entry not in {-1, +1}";
    }

    std::set<std::size_t> decided;
    std::set<std::size_t> expected_pending;
    for (std::size_t ti = 0; ti < t.tiers.size(); ++ti) {
        const Tier& tier = t.tiers[ti];
        if (ti > 0 && !expected_pending.count(tier.seed)) return "tier seed was not deferred by the previous tier";
        if (tier.decisions.empty() || tier.decisions.front().germ != tier.seed ||
            tier.decisions.front().how != SignCase::Seed) {
            return "tier must start with its seed";
        }
        if (tier.sequence.empty()) return "tier has an empty sequence";
        for (const GridPoint& pt : tier.sequence) {
            if (pt.shell == 0 || pt.shell > t.depth) return "sequence point outside the sampled shells";
            const auto grid = shell_points(pt.shell);
            if (std::find(grid.begin(), grid.end(), pt) == grid.end()) return "sequence point not on the grid";
        }
        for (const TierDecision& d : tier.decisions) {
            if (d.germ >= k || !decided.insert(d.germ).second) return "germ decided twice or out of range";
            if (t.epsilons[d.germ] != d.epsilon) return "tier sign disagrees with the sign vector";
            for (const GridPoint& pt : tier.sequence) {
                if (displacement(t.germs[d.germ], pt) != d.epsilon) {
                    return "germ `" + t.germs[d.germ].name + "` does not have sign " + std::to_string(d.epsilon) +
                           " on its tier's sequence";
                }
            }
        }
        std::set<std::size_t> pending;
        for (std::size_t g : tier.deferred) {
            if (g >= k) return "deferred germ out of range";
            for (const GridPoint& pt : tier.sequence) {
                if (displacement(t.germs[g], pt) != 0) return "deferred germ moves a point of the tier";
            }
            pending.insert(g);
        }
        expected_pending = std::move(pending);
    }
    if (!expected_pending.empty()) return "deferred germs never decided";
    if (decided.size() != k) return "not every germ was decided";

    const auto witness = merge_tiers(t.tiers, t.depth);
    if (witness.size() != t.witness.size()) return "witness sequence does not merge the tiers";
    for (std::size_t j = 0; j < witness.size(); ++j) {
        if (!(witness[j].point == t.witness[j].point) || witness[j].tier != t.witness[j].tier) {
            return "witness sequence does not merge the tiers";
        }
    }

    if (!t.passed) return "transcript is marked FAILED: " + t.failure;
    const auto words = semigroup_words(k, t.max_len);
    if (words.size() != t.checks.size()) return "word checks do not cover every semigroup word";
    GermEvaluator ev(t.germs);
    for (std::size_t i = 0; i < words.size(); ++i) {
        const WordCheck& c = t.checks[i];
        if (c.factors != words[i]) return "word check " + std::to_string(i) + " is out of order";
        if (c.point >= t.witness.size()) return "word check points past the witness sequence";
        try {
            if (!moves_up(ev, c.factors, t.epsilons, t.witness[c.point].point)) {
                return "word " + describe(c.factors, t.germs, t.epsilons) + " does not move its witness point up";
            }
        } catch (const UnsupportedInverse& e) {
            return e.what();
        }
    }
    return {};
}

namespace {

std::string generator_name(const std::string& name, std::size_t i) {
    bool ok = !name.empty() && name[0] >= 'a' && name[0] <= 'z';
    for (char c : name) ok = ok && ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_');
    return ok ? name : "g" + std::to_string(i);
}

}  // namespace

GermOrderOracle::GermOrderOracle(const GermOrderTranscript& transcript) : transcript_(transcript) {
    for (std::size_t i = 0; i < transcript.germs.size(); ++i) {
        std::string name = generator_name(transcript.germs[i].name, i);
        if (presentation_.generator_index(name)) name = "g" + std::to_string(i);
        presentation_.generators.push_back(name);
    }
}

Cmp GermOrderOracle::compare(const Word& u, const Word& v) const { return germ_compare(transcript_, u, v).result; }

}  // namespace leftorder
