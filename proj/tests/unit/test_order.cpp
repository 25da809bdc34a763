#include "doctest.h"
#include "oracles.hpp"

#include "leftorder/ball.hpp"
#include "leftorder/corpus.hpp"
#include "leftorder/errors.hpp"
#include "leftorder/order.hpp"

using namespace leftorder;

namespace {

Presentation corpus_group(const char* name) { return find_corpus_entry(name)->presentation(); }

Cmp from_sign(int s) { return s < 0 ? Cmp::Less : (s > 0 ? Cmp::Greater : Cmp::Equal); }

}  // namespace

TEST_CASE("lex order on integer vectors") {
    const std::vector<std::int64_t> a{1, 0}, b{0, 5}, c{1, -1};
    CHECK(lex_order_compare(a, b) == Cmp::Greater);
    CHECK(lex_order_compare(b, a) == Cmp::Less);
    CHECK(lex_order_compare(c, a) == Cmp::Less);
    CHECK(lex_order_compare(a, a) == Cmp::Equal);
    const std::vector<std::int64_t> short_vec{1};
    CHECK_THROWS_AS(lex_order_compare(a, short_vec), PreconditionError);
}

TEST_CASE("lex order is invariant under translation") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<std::int64_t> entry(-5, 5);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<std::int64_t> u(3), v(3), w(3), wu(3), wv(3);
        for (std::size_t i = 0; i < 3; ++i) {
            u[i] = entry(rng);
            v[i] = entry(rng);
            w[i] = entry(rng);
            wu[i] = w[i] + u[i];
            wv[i] = w[i] + v[i];
        }
        CHECK(lex_order_compare(wu, wv) == lex_order_compare(u, v));
        CHECK(lex_order_compare(v, u) == flip(lex_order_compare(u, v)));
    }
}

TEST_CASE("lex oracle needs a free abelian presentation") {
    CHECK_NOTHROW(LexOracle(corpus_group("zz")));
    CHECK_NOTHROW(LexOracle(corpus_group("z")));
    CHECK_THROWS_AS(LexOracle(corpus_group("klein")), PreconditionError);
    CHECK_THROWS_AS(LexOracle(corpus_group("z3")), PreconditionError);
    CHECK_THROWS_AS(LexOracle(corpus_group("f2")), PreconditionError);
    const LexOracle lex(corpus_group("zz"));
    const Presentation& p = lex.presentation();
    CHECK(lex.compare(parse_word("b a", p), parse_word("a b", p)) == Cmp::Equal);
    CHECK(lex.compare(parse_word("b^9", p), parse_word("a", p)) == Cmp::Less);
    CHECK(*lex.canonical(parse_word("b a b^-1", p)) == parse_word("a", p));
}

TEST_CASE("Magnus coefficients") {
    const Presentation f2 = corpus_group("f2");
    const Word commutator = parse_word("a b a^-1 b^-1", f2);
    const std::vector<std::size_t> ab{0, 1}, ba{1, 0}, a{0}, aa{0, 0};
    CHECK(magnus_coefficient(commutator, ab) == 1);
    CHECK(magnus_coefficient(commutator, ba) == -1);
    CHECK(magnus_coefficient(commutator, a) == 0);
    CHECK(magnus_coefficient(parse_word("a^-1", f2), aa) == 1);
    CHECK(magnus_coefficient(parse_word("a^3", f2), aa) == 3);
}

TEST_CASE("Magnus coefficients match series multiplication") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const Word w = oracle::random_word(rng, 2, 6);
        const auto series = oracle::magnus_series(w.codes(), 3);
        for (const auto& [monomial, coefficient] : series) {
            if (monomial.empty()) continue;
            CHECK(magnus_coefficient(w, monomial) == coefficient);
        }
    }
}

TEST_CASE("Magnus order agrees with the series oracle") {
    const Presentation f2 = corpus_group("f2");
    const auto ball = free_ball(2, 2);
    for (const Word& u : ball) {
        for (const Word& v : ball) CHECK(magnus_compare(f2, u, v) == from_sign(oracle::magnus_cmp(u, v)));
    }
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Word u = oracle::random_word(rng, 2, 5), v = oracle::random_word(rng, 2, 5);
        CHECK(magnus_compare(f2, u, v) == from_sign(oracle::magnus_cmp(u, v)));
    }
}

TEST_CASE("Magnus order is a left order on the radius-2 ball") {
    const Presentation f2 = corpus_group("f2");
    const MagnusOracle order(f2);
    const auto ball = free_ball(2, 2);
    REQUIRE(ball.size() == 17);
    for (const Word& u : ball) {
        CHECK(order.compare(u, u) == Cmp::Equal);
        for (const Word& v : ball) {
            const Cmp uv = order.compare(u, v);
            CHECK(uv != Cmp::Unknown);
            if (!(u == v)) CHECK(uv != Cmp::Equal);
            CHECK(order.compare(v, u) == flip(uv));
            for (const Word& w : ball) {
                if (uv == Cmp::Less && order.compare(v, w) == Cmp::Less) CHECK(order.compare(u, w) == Cmp::Less);
                CHECK(order.compare(w * u, w * v) == uv);
            }
        }
    }
}

TEST_CASE("Magnus order refuses presentations with relators") {
    CHECK_THROWS_AS(magnus_compare(corpus_group("zz"), Word(), Word()), PreconditionError);
    CHECK_THROWS_AS(make_order_oracle("magnus", corpus_group("zz")), PreconditionError);
    CHECK_THROWS_AS(make_order_oracle("nope", corpus_group("f2")), PreconditionError);
}
