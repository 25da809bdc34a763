#include "leftorder/semigroup.hpp"

#include "leftorder/errors.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <set>
#include <unordered_set>

namespace leftorder {

std::vector<SignVector> all_sign_vectors(std::size_t n) {
    if (n > 24) throw PreconditionError("subset too large for exhaustive sign search");
    std::vector<SignVector> out;
    const std::size_t count = std::size_t{1} << n;
    out.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
        SignVector eps(n);
        for (std::size_t i = 0; i < n; ++i) eps[i] = (mask >> (n - 1 - i)) & 1 ? 1 : -1;
        out.push_back(std::move(eps));
    }
    return out;
}

namespace {

Word signed_element(const Word& w, int epsilon) { return epsilon > 0 ? w : w.inverse(); }

std::optional<KilledAssignment> search_assignment(const WordProblem& wp, std::span<const Word> subset,
                                                  const SignVector& eps, std::size_t max_len,
                                                  const Budget& budget) {
    std::vector<Word> generators;
    for (std::size_t i = 0; i < subset.size(); ++i) generators.push_back(signed_element(subset[i], eps[i]));

    std::unordered_set<Word, WordHash> seen;
    std::vector<SemigroupWord> frontier{SemigroupWord{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<SemigroupWord> next;
        for (const SemigroupWord& base : frontier) {
            for (std::size_t i = 0; i < generators.size(); ++i) {
                SemigroupWord candidate{base.factors, base.product * generators[i]};
                candidate.factors.push_back(i);
                if (seen.count(candidate.product)) continue;
                const IdentityStatus st = wp.status(candidate.product, budget);
                if (st.verdict == Verdict::Identity) {
                    return KilledAssignment{eps, std::move(candidate), *st.trace};
                }
                seen.insert(candidate.product);
                next.push_back(std::move(candidate));
            }
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

}  // namespace

CriterionResult semigroup_criterion(const Presentation& p, std::span<const Word> subset, std::size_t max_len,
                                    const Budget& budget, unsigned threads) {
    if (subset.empty()) throw PreconditionError("subset must be nonempty");
    if (max_len == 0) throw PreconditionError("max_len must be positive");
    const WordProblem wp(p);

    CriterionResult out;
    out.presentation = p;
    out.max_len = max_len;
    out.budget = budget;
    for (const Word& w : subset) {
        const IdentityStatus st = wp.status(w, budget);
        if (st.verdict != Verdict::NotIdentity) {
            throw PreconditionError("subset element `" + to_string(w, p) + "` has verdict " +
                                    to_string(st.verdict) + "; every element must be provably nontrivial");
        }
        out.subset.push_back({w, *st.witness});
    }

    const std::vector<SignVector> assignments = all_sign_vectors(subset.size());
    std::vector<std::optional<KilledAssignment>> results(assignments.size());
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, assignments.size()));
    if (workers == 1) {
        for (std::size_t a = 0; a < assignments.size(); ++a) {
            results[a] = search_assignment(wp, subset, assignments[a], max_len, budget);
        }
    } else {
        std::vector<std::future<void>> jobs;
        for (std::size_t t = 0; t < workers; ++t) {
            jobs.push_back(std::async(std::launch::async, [&, t] {
                for (std::size_t a = t; a < assignments.size(); a += workers) {
                    results[a] = search_assignment(wp, subset, assignments[a], max_len, budget);
                }
            }));
        }
        for (auto& job : jobs) job.get();
    }

    for (std::size_t a = 0; a < assignments.size(); ++a) {
        if (results[a]) {
            out.killed.push_back(std::move(*results[a]));
        } else {
            out.survivors.push_back(assignments[a]);
        }
    }
    out.not_left_orderable = out.survivors.empty();
    return out;
}

std::string verify_criterion(const CriterionResult& r) {
    const Presentation& p = r.presentation;
    try {
        validate(p);
    } catch (const Error& e) {
        return std::string("invalid presentation: ") + e.what();
    }
    if (r.subset.empty()) return "empty subset";
    if (r.subset.size() > 24) return "subset too large";
    for (std::size_t i = 0; i < r.subset.size(); ++i) {
        if (!verify_not_identity(p, r.subset[i].word, r.subset[i].witness)) {
            return "subset element " + std::to_string(i) + " has an invalid non-identity witness";
        }
    }
    std::set<SignVector> covered;
    for (const KilledAssignment& k : r.killed) {
        if (k.epsilons.size() != r.subset.size()) return "sign vector has wrong length";
        for (int e : k.epsilons) {
            if (e != 1 && e != -1) return "sign vector entry not in {-1, +1}";
        }
        if (!covered.insert(k.epsilons).second) return "sign vector listed twice";
        if (k.killer.factors.empty() || k.killer.factors.size() > r.max_len) return "killer word length out of range";
        Word product;
        for (std::size_t f : k.killer.factors) {
            if (f >= r.subset.size()) return "killer factor out of range";
            product = product * signed_element(r.subset[f].word, k.epsilons[f]);
        }
        if (!(product == k.killer.product)) return "killer product does not match its factors";
        if (!replay_identity_trace(p, product, k.trace)) return "identity trace does not replay to the empty word";
    }
    for (const SignVector& s : r.survivors) {
        if (s.size() != r.subset.size()) return "survivor has wrong length";
        if (!covered.insert(s).second) return "survivor also listed as killed";
    }
    if (covered.size() != (std::size_t{1} << r.subset.size())) return "sign vectors do not cover all assignments";
    if (r.not_left_orderable != r.survivors.empty()) return "verdict inconsistent with survivors";
    return {};
}

}  // namespace leftorder
