#pragma once

#include "leftorder/int_matrix.hpp"
#include "leftorder/presentation.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace leftorder {

// Caps for the identity search. Both must be positive.
struct Budget {
    std::size_t max_word_length = 32;
    std::size_t max_nodes = 4000;

    friend bool operator==(const Budget&, const Budget&) = default;
};

// Insert a cyclic rotation of relator^(+-1) before letter `position`, then
// freely reduce.
struct RewriteStep {
    std::size_t relator = 0;
    bool inverted = false;
    std::size_t rotation = 0;
    std::size_t position = 0;

    friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

struct IdentityTrace {
    std::vector<RewriteStep> steps;
};

enum class WitnessKind { FreeGroup, Abelian, Matrix };

/// Evidence that a word is not the identity:
///  - FreeGroup: no relators and the reduced word is nonempty;
///  - Abelian: a functional on exponent sums vanishing on every relator modulo
///    `modulus` (0 meaning no reduction) but not on the word;
///  - Matrix: the registered 2x2 representation sends the word off the identity.
struct NotIdentityWitness {
    WitnessKind kind = WitnessKind::FreeGroup;
    std::vector<Integer> functional;
    Integer modulus = 0;
    Integer image = 0;
    Matrix2 matrix_image;
};

enum class Verdict { Identity, NotIdentity, Unknown };

struct IdentityStatus {
    Verdict verdict = Verdict::Unknown;
    std::optional<IdentityTrace> trace;          // Identity
    std::optional<NotIdentityWitness> witness;   // NotIdentity
    std::size_t nodes_explored = 0;              // Unknown: budget spent
};

const char* to_string(Verdict v);
const char* to_string(WitnessKind k);

// Signed letter codes of the rotated (and possibly inverted) relator.
std::vector<int> relator_piece(const Presentation& p, std::size_t relator, bool inverted, std::size_t rotation);

// Replays a trace from `word`; true iff every step is well-formed and the
// final word is empty.
bool replay_identity_trace(const Presentation& p, const Word& word, const IdentityTrace& trace);

bool verify_not_identity(const Presentation& p, const Word& word, const NotIdentityWitness& witness);

/// Bounded word-problem oracle for one presentation. Caches the abelianization
/// and the symmetrized relator set; safe to share between threads.
class WordProblem {
public:
    explicit WordProblem(Presentation p);

    const Presentation& presentation() const { return presentation_; }

    IdentityStatus status(const Word& word, const Budget& budget) const;
    std::optional<NotIdentityWitness> find_witness(const Word& word) const;
    // Best-first search over relator insertions (shortest word first).
    std::optional<IdentityTrace> search_identity(const Word& word, const Budget& budget,
                                                 std::size_t* nodes = nullptr) const;

private:
    struct Insertion {
        std::vector<int> codes;
        RewriteStep step;  // position unset
    };

    Presentation presentation_;
    SmithForm smith_;
    std::vector<Insertion> insertions_;
};

IdentityStatus identity_status(const Presentation& p, const Word& word, const Budget& budget);

}  // namespace leftorder
