#include "doctest.h"
#include "oracles.hpp"

#include "leftorder/ball.hpp"
#include "leftorder/corpus.hpp"
#include "leftorder/errors.hpp"
#include "leftorder/word_problem.hpp"

using namespace leftorder;

namespace {

Presentation corpus_group(const char* name) { return find_corpus_entry(name)->presentation(); }

const char* kKleinWithRep = "gens: a b\nrels: a b a b^-1\nrep: a = [[1,1],[0,1]] b = [[-1,0],[0,1]]\n";

}  // namespace

TEST_CASE("word problem examples") {
    const Presentation f2 = corpus_group("f2");
    const IdentityStatus commutator = identity_status(f2, parse_word("a b a^-1 b^-1", f2), {});
    CHECK(commutator.verdict == Verdict::NotIdentity);
    REQUIRE(commutator.witness);
    CHECK(commutator.witness->kind == WitnessKind::FreeGroup);

    const Presentation z2 = corpus_group("z2");
    const IdentityStatus square = identity_status(z2, parse_word("a^2", z2), {});
    CHECK(square.verdict == Verdict::Identity);
    REQUIRE(square.trace);
    CHECK(square.trace->steps.size() == 1);
    CHECK(replay_identity_trace(z2, parse_word("a^2", z2), *square.trace));

    const Presentation t = corpus_group("thurston");
    const Word rel = parse_word("a^2 c^-1 b^-1 a^-1", t);
    const IdentityStatus s = identity_status(t, rel, {});
    CHECK(s.verdict == Verdict::Identity);
    CHECK(replay_identity_trace(t, rel, *s.trace));
}

TEST_CASE("budgets must be positive") {
    const Presentation z2 = corpus_group("z2");
    CHECK_THROWS_AS(identity_status(z2, Word(), Budget{0, 10}), PreconditionError);
    CHECK_THROWS_AS(identity_status(z2, Word(), Budget{10, 0}), PreconditionError);
}

TEST_CASE("abelian witnesses use torsion functionals") {
    const Presentation z3 = corpus_group("z3");
    const IdentityStatus s = identity_status(z3, parse_word("a^4", z3), {});
    CHECK(s.verdict == Verdict::NotIdentity);
    REQUIRE(s.witness);
    CHECK(s.witness->kind == WitnessKind::Abelian);
    CHECK(s.witness->modulus == 3);
    CHECK(verify_not_identity(z3, parse_word("a^4", z3), *s.witness));
    CHECK_FALSE(verify_not_identity(z3, parse_word("a^3", z3), *s.witness));
}

TEST_CASE("matrix witnesses catch what the abelianization misses") {
    const Presentation p = parse_presentation(kKleinWithRep);
    const Word commutator = parse_word("a b a^-1 b^-1", p);
    CHECK(commutator.exponent_sums(2) == std::vector<std::int64_t>{0, 0});
    const IdentityStatus s = identity_status(p, commutator, {});
    CHECK(s.verdict == Verdict::NotIdentity);
    REQUIRE(s.witness);
    CHECK(s.witness->kind == WitnessKind::Matrix);
    CHECK(verify_not_identity(p, commutator, *s.witness));
    // Without the representation the commutator a^2 cannot be separated from e.
    const Presentation plain = corpus_group("klein");
    CHECK(identity_status(plain, commutator, {16, 200}).verdict == Verdict::Unknown);
}

TEST_CASE("traces are rejected when tampered") {
    const Presentation z3 = corpus_group("z3");
    const Word w = parse_word("a^3", z3);
    IdentityTrace trace = *identity_status(z3, w, {}).trace;
    CHECK(replay_identity_trace(z3, w, trace));
    CHECK_FALSE(replay_identity_trace(z3, parse_word("a^2", z3), trace));
    trace.steps[0].relator = 5;
    CHECK_FALSE(replay_identity_trace(z3, w, trace));
}

TEST_CASE("verdicts never conflict across budgets") {
    std::mt19937 rng(777);
    const Budget budgets[] = {{8, 50}, {16, 500}, {32, 4000}};
    for (const char* name : {"z2", "z5", "klein", "zz", "q8", "heisenberg", "thurston", "tsuboi"}) {
        CAPTURE(name);
        const Presentation p = corpus_group(name);
        const WordProblem wp(p);
        for (int trial = 0; trial < 25; ++trial) {
            const Word w = oracle::random_word(rng, p.rank(), 8);
            bool identity = false, not_identity = false;
            for (const Budget& b : budgets) {
                const IdentityStatus s = wp.status(w, b);
                if (s.verdict == Verdict::Identity) {
                    identity = true;
                    CHECK(replay_identity_trace(p, w, *s.trace));
                }
                if (s.verdict == Verdict::NotIdentity) {
                    not_identity = true;
                    CHECK(verify_not_identity(p, w, *s.witness));
                }
            }
            CHECK_FALSE((identity && not_identity));
        }
    }
}

TEST_CASE("ball enumeration examples") {
    const auto zz = enumerate_ball(corpus_group("zz"), 1, {});
    CHECK(zz.size() == 5);
    CHECK(enumerate_ball(corpus_group("f2"), 2, {}).size() == 17);
    CHECK(free_ball(2, 2).size() == 17);
    const auto z3 = enumerate_ball(corpus_group("z3"), 3, {});
    CHECK(z3.size() == 3);
    for (const auto& e : z3) CHECK_FALSE(e.unresolved);
    CHECK(enumerate_ball(corpus_group("zz"), 2, {}).size() == 13);
    CHECK(enumerate_ball(corpus_group("z4"), 3, {}).size() == 4);
}

TEST_CASE("ball sizes are monotone in the radius") {
    for (const char* name : {"z", "zz", "z4", "klein", "q8", "f2"}) {
        CAPTURE(name);
        const WordProblem wp(corpus_group(name));
        std::size_t previous = 0;
        for (std::size_t r = 0; r <= 3; ++r) {
            const auto ball = enumerate_ball(wp, r, {});
            CHECK(ball.size() >= previous);
            previous = ball.size();
            for (std::size_t i = 0; i + 1 < ball.size(); ++i) CHECK(shortlex_less(ball[i].word, ball[i + 1].word));
        }
    }
}
