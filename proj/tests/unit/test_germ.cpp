#include "doctest.h"

#include "leftorder/errors.hpp"
#include "leftorder/germ_order.hpp"

#include <random>
#include <string>

using namespace leftorder;

namespace {

Rational q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

ParamGerm germ(const char* name, const char* text, Rational rho = 1) { return make_germ(name, text, rho); }

}  // namespace

TEST_CASE("expressions parse, print and evaluate") {
    const Expr e = parse_expr("(1+s)*x - min(x, s)/2 + abs(-x)");
    CHECK(evaluate(e, q(1, 2), q(1, 2)) == q(3, 4) - q(1, 4) + q(1, 2));
    CHECK(evaluate(parse_expr(to_string(e)), q(-1, 3), q(1, 5)) == evaluate(e, q(-1, 3), q(1, 5)));
    CHECK(evaluate(parse_expr("1/3"), 0, 0) == q(1, 3));
    CHECK(evaluate(parse_expr("-x"), q(2), 0) == q(-2));
    CHECK(evaluate(parse_expr("max(x, 2*x)"), q(-1), 0) == q(-1));
    CHECK_THROWS_AS(parse_expr("x +"), ParseError);
    CHECK_THROWS_AS(parse_expr("y"), ParseError);
    CHECK_THROWS_AS(parse_expr("min(x)"), ParseError);
    CHECK_THROWS_AS(evaluate(parse_expr("x/s"), 1, 0), DomainError);
}

TEST_CASE("germ evaluation") {
    CHECK(eval_param_germ(germ("f", "x + s"), 0, q(1, 3)) == q(1, 3));
    CHECK(eval_param_germ(identity_germ(), q(1, 7), q(1, 2)) == q(1, 7));
    CHECK(eval_param_germ(germ("f", "(1+s)*x"), q(1, 2), q(1, 2)) == q(3, 4));
    CHECK_THROWS_AS(eval_param_germ(germ("f", "x"), 1, 0), DomainError);
    CHECK_THROWS_AS(eval_param_germ(germ("f", "x"), 0, q(2, 3)), DomainError);
    CHECK_THROWS_AS(eval_param_germ(germ("f", "x"), 0, q(2)), DomainError);
    CHECK_THROWS_AS(make_germ("f", "x", 0), StructuralError);
    CHECK(in_parameter_space(0));
    CHECK(in_parameter_space(q(1, 9)));
    CHECK_FALSE(in_parameter_space(q(2, 9)));
}

TEST_CASE("composition and inversion") {
    const ParamGerm shift = germ("f", "x + s");
    const ParamGerm scale = germ("g", "(1+s)*x", q(1, 2));
    const ParamGerm twice = compose_param_germ(shift, shift);
    const ParamGerm mixed = compose_param_germ(scale, shift);
    CHECK(mixed.rho == q(1, 2));
    for (long n = -6; n <= 6; ++n) {
        for (long k : {0L, 2L, 3L, 7L}) {
            const Rational x = q(n, 16);
            const Rational s = k == 0 ? q(0) : q(1, k);
            CHECK(eval_param_germ(twice, x, s) == x + 2 * s);
            CHECK(eval_param_germ(mixed, x, s) == (1 + s) * (x + s));
        }
    }
    // f o f^-1 is the identity at 50 points.
    for (const char* text : {"x + s", "(1+s)*x", "2*x - s", "max(x, 2*x)", "min(x + s, 3*x)"}) {
        CAPTURE(text);
        const ParamGerm f = germ("f", text);
        const ParamGerm inv = invert_param_germ(f);
        int points = 0;
        for (long n = -5; n <= 4; ++n) {
            for (long k : {0L, 2L, 3L, 5L, 9L}) {
                const Rational x = q(n, 40);
                const Rational s = k == 0 ? q(0) : q(1, k);
                CHECK(eval_param_germ(f, eval_param_germ(inv, x, s), s) == x);
                CHECK(eval_param_germ(inv, eval_param_germ(f, x, s), s) == x);
                ++points;
            }
        }
        CHECK(points == 50);
    }
    CHECK_THROWS_AS(invert_param_germ(germ("f", "x*x + x")), UnsupportedInverse);
    CHECK_THROWS_AS(invert_param_germ(germ("f", "abs(x) + x")), UnsupportedInverse);
}

TEST_CASE("witness grid shrinks toward the origin") {
    for (std::size_t m = 1; m <= 6; ++m) {
        const auto pts = shell_points(m);
        const Rational bound(1, 1L << m);
        CHECK(pts.size() == (1 + (1U << m)) * 17);
        for (const GridPoint& p : pts) {
            CHECK(abs(p.x) <= bound);
            CHECK(p.s <= bound);
            CHECK(in_parameter_space(p.s));
            CHECK(p.shell == m);
        }
    }
    CHECK_THROWS(shell_points(0));
}

TEST_CASE("nontriviality witnesses") {
    const auto shift = find_nontriviality_witness(germ("f", "x + s"), 4);
    REQUIRE(shift);
    REQUIRE(shift->size() == 4);
    for (std::size_t m = 1; m <= 4; ++m) {
        const WitnessPoint& w = (*shift)[m - 1];
        CHECK(w.point.x == 0);
        CHECK(w.point.s == q(1, 1L << m));
        CHECK(w.image == w.point.s);
    }
    CHECK_FALSE(find_nontriviality_witness(identity_germ(), 4));
    const auto scale = find_nontriviality_witness(germ("g", "(1+s)*x"), 4);
    REQUIRE(scale);
    for (std::size_t m = 1; m <= 4; ++m) {
        const WitnessPoint& w = (*scale)[m - 1];
        CHECK(w.point.x == q(1, 1L << m));
        CHECK(w.point.s == q(1, 1L << m));
        CHECK(w.image > w.point.x);
    }
    // Trivial in the limit only: moved at s > 0 but not at s = 0.
    CHECK(find_nontriviality_witness(germ("h", "x + s*s"), 3));
}

TEST_CASE("germ sanity checks") {
    CHECK(check_germ(germ("f", "x + s"), 4).empty());
    CHECK_FALSE(check_germ(germ("f", "x + 1/8"), 4).empty());
    CHECK_FALSE(check_germ(germ("f", "-x"), 4).empty());
    CHECK_FALSE(check_germ(germ("f", "x*x"), 4).empty());
}

TEST_CASE("sign selection examples") {
    const std::vector<ParamGerm> up{germ("f", "x + s")};
    const GermOrderTranscript t1 = select_signs(up, 6, 4);
    CHECK(t1.epsilons == SignVector{1});
    CHECK(t1.tiers.size() == 1);
    CHECK(t1.passed);
    CHECK(t1.checks.size() == 4);
    CHECK(verify_transcript(t1).empty());

    const std::vector<ParamGerm> down{germ("f", "x - s")};
    const GermOrderTranscript t2 = select_signs(down, 6, 4);
    CHECK(t2.epsilons == SignVector{-1});
    CHECK(t2.passed);
    CHECK(verify_transcript(t2).empty());

    const std::vector<ParamGerm> two{germ("f", "x + s"), germ("g", "(1+s)*x")};
    const GermOrderTranscript t3 = select_signs(two, 6, 4);
    CHECK(t3.epsilons == SignVector{1, 1});
    REQUIRE(t3.tiers.size() == 2);
    CHECK(t3.tiers[0].seed == 0);
    CHECK(t3.tiers[0].deferred == std::vector<std::size_t>{1});
    CHECK(t3.tiers[1].seed == 1);
    for (const GridPoint& p : t3.tiers[0].sequence) CHECK(p.x == 0);
    for (const GridPoint& p : t3.tiers[1].sequence) {
        CHECK(p.x == q(1, 1L << p.shell));
        CHECK(p.s == q(1, 1L << p.shell));
    }
    CHECK(t3.witness.size() == 12);
    CHECK(t3.passed);
    CHECK(t3.checks.size() == 2 + 4 + 8 + 16);
    CHECK(verify_transcript(t3).empty());
}

TEST_CASE("sign selection handles mixed directions") {
    const std::vector<ParamGerm> germs{germ("f", "x + s"), germ("g", "x - 2*s"), germ("h", "2*x")};
    const GermOrderTranscript t = select_signs(germs, 5, 3);
    CHECK(t.epsilons == SignVector{1, -1, 1});
    CHECK(t.tiers.size() == 2);
    CHECK(t.tiers[0].decisions[1].how == SignCase::Negative);
    CHECK(t.passed);
    CHECK(verify_transcript(t).empty());
}

TEST_CASE("sign selection rejects trivial germs") {
    const std::vector<ParamGerm> germs{germ("f", "x + s"), identity_germ()};
    CHECK_THROWS_AS(select_signs(germs, 4, 3), PreconditionError);
}

TEST_CASE("sign selection is deterministic") {
    const std::vector<ParamGerm> germs{germ("f", "x + s"), germ("g", "(1+s)*x"), germ("h", "x - s*s")};
    const GermOrderTranscript a = select_signs(germs, 5, 3);
    const GermOrderTranscript b = select_signs(germs, 5, 3);
    CHECK(a.epsilons == b.epsilons);
    CHECK(a.witness.size() == b.witness.size());
    for (std::size_t i = 0; i < a.witness.size(); ++i) CHECK(a.witness[i].point == b.witness[i].point);
    CHECK(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) CHECK(a.checks[i].point == b.checks[i].point);
}

TEST_CASE("transcript verification catches tampering") {
    const std::vector<ParamGerm> two{germ("f", "x + s"), germ("g", "(1+s)*x")};
    const GermOrderTranscript good = select_signs(two, 5, 3);
    REQUIRE(verify_transcript(good).empty());

    GermOrderTranscript flipped = good;
    flipped.epsilons[1] = -1;
    flipped.tiers[1].decisions[0].epsilon = -1;
    CHECK_FALSE(verify_transcript(flipped).empty());

    GermOrderTranscript short_checks = good;
    short_checks.checks.pop_back();
    CHECK_FALSE(verify_transcript(short_checks).empty());

    GermOrderTranscript moved = good;
    moved.witness[0].point.x = q(1, 3);
    CHECK_FALSE(verify_transcript(moved).empty());
}

TEST_CASE("comparisons from a transcript") {
    const std::vector<ParamGerm> up{germ("f", "x + s")};
    const GermOrderTranscript t = select_signs(up, 6, 4);
    const Word f = Word::generator(0);
    CHECK(germ_compare(t, Word(), f).result == Cmp::Less);
    CHECK(germ_compare(t, f, Word()).result == Cmp::Greater);
    CHECK(germ_compare(t, f, f).result == Cmp::Equal);
    const GermComparison same = germ_compare(t, f.power(2), f * f);
    CHECK(same.result == Cmp::Equal);

    const std::vector<ParamGerm> bent{germ("f", "x*x*x + x")};
    const GermOrderTranscript u = select_signs(bent, 3, 1);
    const GermComparison unknown = germ_compare(u, Word::generator(0), Word());
    CHECK(unknown.result == Cmp::Unknown);
    CHECK_FALSE(unknown.reason.empty());
}

namespace {

void check_left_order(const GermOrderTranscript& t, std::size_t radius) {
    REQUIRE(t.passed);
    const GermOrderOracle order(t);
    std::vector<Word> ball{Word()};
    for (std::size_t len = 1; len <= radius; ++len) {
        std::vector<Word> next;
        for (const Word& w : ball) {
            if (w.length() + 1 != len) continue;
            for (std::size_t g = 0; g < t.germs.size(); ++g) {
                for (int e : {1, -1}) {
                    const Word x = w * Word::generator(g, e);
                    if (x.length() == len) next.push_back(x);
                }
            }
        }
        ball.insert(ball.end(), next.begin(), next.end());
    }
    for (const Word& u : ball) {
        for (const Word& v : ball) {
            const Cmp uv = order.compare(u, v);
            REQUIRE(uv != Cmp::Unknown);
            CHECK(order.compare(v, u) == flip(uv));
            for (const Word& w : ball) {
                const Cmp vw = order.compare(v, w);
                if (uv == Cmp::Less && vw == Cmp::Less) CHECK(order.compare(u, w) == Cmp::Less);
                if (uv == Cmp::Equal && vw != Cmp::Unknown) CHECK(order.compare(u, w) == vw);
                CHECK(order.compare(w * u, w * v) == uv);
            }
        }
    }
}

}  // namespace

TEST_CASE("induced relation is a left order on the word ball") {
    const std::vector<ParamGerm> two{germ("f", "x + s"), germ("g", "(1+s)*x")};
    check_left_order(select_signs(two, 5, 4), 2);
    const std::vector<ParamGerm> down{germ("f", "x - s")};
    check_left_order(select_signs(down, 5, 4), 4);
}

TEST_CASE("no positive word is the identity on the witness points") {
    const std::vector<ParamGerm> germs{germ("f", "x + s"), germ("g", "(1+s)*x"), germ("h", "x - 2*s")};
    const GermOrderTranscript t = select_signs(germs, 5, 3);
    REQUIRE(t.passed);
    for (const WordCheck& c : t.checks) {
        std::vector<Letter> letters;
        for (std::size_t f : c.factors) letters.push_back({f, t.epsilons[f]});
        const Word w = Word::reduce(letters);
        bool moved = false;
        for (const DiagonalPoint& p : t.witness) {
            try {
                moved |= eval_germ_word(t.germs, w, p.point.x, p.point.s) != p.point.x;
            } catch (const DomainError&) {
            }
        }
        CHECK(moved);
    }
}

TEST_CASE("tier sequences shrink toward the origin") {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> coeff(-4, 4);
    auto frac = [](int k) { return "(" + std::to_string(k) + "/4)"; };
    std::size_t tiers_seen = 0;
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<ParamGerm> family;
        const int size = 1 + trial % 3;
        for (int i = 0; i < size; ++i) {
            int a = coeff(rng), b = coeff(rng), c = std::max(coeff(rng), -2);
            if (a == 0 && b == 0 && c == 0) a = 1;
            std::string text = "x + " + frac(c) + "*x + " + frac(a) + "*s + " + frac(b) + "*x*s";
            if (trial % 4 == 3) text = "max(x, " + text + ")";
            family.push_back(make_germ("f" + std::to_string(i), text, 1));
        }
        GermOrderTranscript t;
        try {
            t = select_signs(family, 6, 2);
        } catch (const PreconditionError&) {
            continue;  // a max() germ can be trivial near the origin
        }
        for (const Tier& tier : t.tiers) {
            ++tiers_seen;
            for (std::size_t j = 1; j < tier.sequence.size(); ++j) {
                const GridPoint& prev = tier.sequence[j - 1];
                const GridPoint& cur = tier.sequence[j];
                CHECK(cur.shell > prev.shell);
                CHECK(abs(cur.x) <= abs(prev.x));
                CHECK(cur.s <= prev.s);
            }
        }
    }
    CHECK(tiers_seen > 30);

    // Moves only larger x when s = 0, so a first-hit pick would start at s = 0
    // and be forced back out to s > 0 one shell later.
    const GermOrderTranscript t = select_signs({{germ("f", "x + max(0, x - 1/4) + s*x")}}, 6, 2);
    const auto& seq = t.tiers.at(0).sequence;
    REQUIRE(seq.size() == 6);
    for (std::size_t j = 1; j < seq.size(); ++j) {
        CHECK(abs(seq[j].x) <= abs(seq[j - 1].x));
        CHECK(seq[j].s <= seq[j - 1].s);
    }
}
