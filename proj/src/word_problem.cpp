#include "leftorder/word_problem.hpp"

#include "leftorder/abelian.hpp"
#include "leftorder/errors.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_map>

namespace leftorder {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Identity: return "Identity";
        case Verdict::NotIdentity: return "NotIdentity";
        case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

const char* to_string(WitnessKind k) {
    switch (k) {
        case WitnessKind::FreeGroup: return "free_group";
        case WitnessKind::Abelian: return "abelian";
        case WitnessKind::Matrix: return "matrix";
    }
    return "?";
}

namespace {

void reduce_codes(std::vector<int>& codes) {
    std::size_t top = 0;
    for (std::size_t i = 0; i < codes.size(); ++i) {
        if (top > 0 && codes[top - 1] == -codes[i]) {
            --top;
        } else {
            codes[top++] = codes[i];
        }
    }
    codes.resize(top);
}

struct CodesHash {
    std::size_t operator()(const std::vector<int>& codes) const {
        std::size_t h = codes.size();
        for (int c : codes) h ^= static_cast<std::size_t>(c + 0x9e3779b9) + (h << 6) + (h >> 2);
        return h;
    }
};

std::vector<int> apply_step(const std::vector<int>& word, const std::vector<int>& piece, std::size_t position) {
    std::vector<int> out;
    out.reserve(word.size() + piece.size());
    out.insert(out.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(position));
    out.insert(out.end(), piece.begin(), piece.end());
    out.insert(out.end(), word.begin() + static_cast<std::ptrdiff_t>(position), word.end());
    reduce_codes(out);
    return out;
}

Integer dot(const std::vector<Integer>& f, const std::vector<std::int64_t>& v) {
    Integer total = 0;
    for (std::size_t i = 0; i < f.size(); ++i) total += f[i] * Integer(static_cast<long>(v[i]));
    return total;
}

bool vanishes(const Integer& value, const Integer& modulus) {
    if (modulus == 0) return value == 0;
    return value % modulus == 0;
}

void check_word(const Presentation& p, const Word& word) {
    if (!word.empty() && word.max_generator() >= p.rank()) {
        throw StructuralError("word references undeclared generator");
    }
}

}  // namespace

std::vector<int> relator_piece(const Presentation& p, std::size_t relator, bool inverted, std::size_t rotation) {
    if (relator >= p.relators.size()) throw StructuralError("relator index out of range");
    const Word& r = p.relators[relator];
    std::vector<int> codes = (inverted ? r.inverse() : r).codes();
    if (rotation >= codes.size()) throw StructuralError("relator rotation out of range");
    std::rotate(codes.begin(), codes.begin() + static_cast<std::ptrdiff_t>(rotation), codes.end());
    return codes;
}

bool replay_identity_trace(const Presentation& p, const Word& word, const IdentityTrace& trace) {
    std::vector<int> current = word.codes();
    for (const RewriteStep& step : trace.steps) {
        if (step.relator >= p.relators.size()) return false;
        if (step.rotation >= p.relators[step.relator].length()) return false;
        if (step.position > current.size()) return false;
        current = apply_step(current, relator_piece(p, step.relator, step.inverted, step.rotation), step.position);
    }
    return current.empty();
}

bool verify_not_identity(const Presentation& p, const Word& word, const NotIdentityWitness& witness) {
    if (!word.empty() && word.max_generator() >= p.rank()) return false;
    switch (witness.kind) {
        case WitnessKind::FreeGroup:
            return p.relators.empty() && !word.empty();
        case WitnessKind::Abelian: {
            if (witness.functional.size() != p.rank() || witness.modulus < 0 || witness.modulus == 1) return false;
            for (const Word& r : p.relators) {
                if (!vanishes(dot(witness.functional, r.exponent_sums(p.rank())), witness.modulus)) return false;
            }
            const Integer image = dot(witness.functional, word.exponent_sums(p.rank()));
            return !vanishes(image, witness.modulus);
        }
        case WitnessKind::Matrix: {
            if (p.representation.size() != p.rank()) return false;
            for (const Word& r : p.relators) {
                if (!p.represent(r).is_identity()) return false;
            }
            return !p.represent(word).is_identity();
        }
    }
    return false;
}

WordProblem::WordProblem(Presentation p) : presentation_(std::move(p)) {
    validate(presentation_);
    smith_ = smith_normal_form(abelianization_matrix(presentation_));
    std::set<std::vector<int>> seen;
    for (std::size_t r = 0; r < presentation_.relators.size(); ++r) {
        const std::size_t len = presentation_.relators[r].length();
        for (bool inverted : {false, true}) {
            for (std::size_t rot = 0; rot < len; ++rot) {
                auto codes = relator_piece(presentation_, r, inverted, rot);
                if (!seen.insert(codes).second) continue;
                insertions_.push_back({std::move(codes), RewriteStep{r, inverted, rot, 0}});
            }
        }
    }
}

std::optional<NotIdentityWitness> WordProblem::find_witness(const Word& word) const {
    check_word(presentation_, word);
    if (word.empty()) return std::nullopt;
    const Presentation& p = presentation_;
    if (p.is_free()) return NotIdentityWitness{WitnessKind::FreeGroup, {}, 0, 0, {}};

    const auto sums = word.exponent_sums(p.rank());
    const IntMatrix& ops = smith_.row_ops;
    for (std::size_t i = 0; i < p.rank(); ++i) {
        std::vector<Integer> functional(p.rank());
        for (std::size_t k = 0; k < p.rank(); ++k) functional[k] = ops(i, k);
        const Integer modulus = i < smith_.diagonal.size() ? smith_.diagonal[i] : Integer(0);
        if (modulus == 1) continue;
        Integer image = dot(functional, sums);
        if (modulus != 0) image %= modulus;
        if (image < 0) image += modulus;
        if (image != 0) return NotIdentityWitness{WitnessKind::Abelian, std::move(functional), modulus, image, {}};
    }

    if (p.representation.size() == p.rank()) {
        Matrix2 image = p.represent(word);
        if (!image.is_identity()) return NotIdentityWitness{WitnessKind::Matrix, {}, 0, 0, image};
    }
    return std::nullopt;
}

std::optional<IdentityTrace> WordProblem::search_identity(const Word& word, const Budget& budget,
                                                          std::size_t* nodes) const {
    struct Node {
        std::vector<int> codes;
        std::size_t parent;
        RewriteStep step;
    };
    std::vector<Node> table;
    std::unordered_map<std::vector<int>, std::size_t, CodesHash> index;
    using Entry = std::pair<std::size_t, std::size_t>;  // (length, node id)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;

    auto finish = [&](std::size_t id) {
        IdentityTrace trace;
        for (std::size_t at = id; at != 0; at = table[at].parent) trace.steps.push_back(table[at].step);
        std::reverse(trace.steps.begin(), trace.steps.end());
        return trace;
    };

    table.push_back({word.codes(), 0, {}});
    if (nodes) *nodes = 1;
    if (table[0].codes.empty()) return IdentityTrace{};
    if (table[0].codes.size() > budget.max_word_length) return std::nullopt;
    index.emplace(table[0].codes, 0);
    frontier.push({table[0].codes.size(), 0});

    while (!frontier.empty()) {
        const std::size_t id = frontier.top().second;
        frontier.pop();
        const std::vector<int> current = table[id].codes;
        for (std::size_t pos = 0; pos <= current.size(); ++pos) {
            for (const Insertion& ins : insertions_) {
                auto next = apply_step(current, ins.codes, pos);
                if (next.size() > budget.max_word_length) continue;
                if (index.count(next)) continue;
                RewriteStep step = ins.step;
                step.position = pos;
                const std::size_t nid = table.size();
                const bool done = next.empty();
                const std::size_t len = next.size();
                index.emplace(next, nid);
                table.push_back({std::move(next), id, step});
                if (nodes) *nodes = table.size();
                if (done) return finish(nid);
                if (table.size() >= budget.max_nodes) return std::nullopt;
                frontier.push({len, nid});
            }
        }
    }
    return std::nullopt;
}

IdentityStatus WordProblem::status(const Word& word, const Budget& budget) const {
    if (budget.max_nodes == 0 || budget.max_word_length == 0) {
        throw PreconditionError("word-problem budget must be positive");
    }
    check_word(presentation_, word);
    IdentityStatus out;
    if (word.empty()) {
        out.verdict = Verdict::Identity;
        out.trace = IdentityTrace{};
        return out;
    }
    if (auto witness = find_witness(word)) {
        out.verdict = Verdict::NotIdentity;
        out.witness = std::move(witness);
        return out;
    }
    std::size_t nodes = 0;
    if (auto trace = search_identity(word, budget, &nodes)) {
        out.verdict = Verdict::Identity;
        out.trace = std::move(trace);
    }
    out.nodes_explored = nodes;
    return out;
}

IdentityStatus identity_status(const Presentation& p, const Word& word, const Budget& budget) {
    return WordProblem(p).status(word, budget);
}

}  // namespace leftorder
