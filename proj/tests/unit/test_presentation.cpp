#include "doctest.h"

#include "leftorder/corpus.hpp"
#include "leftorder/errors.hpp"
#include "leftorder/presentation.hpp"

#include <fstream>
#include <sstream>

using namespace leftorder;

TEST_CASE("parse a cyclic group") {
    const Presentation p = parse_presentation("gens: a\nrels: a^2");
    CHECK(p.generators == std::vector<std::string>{"a"});
    REQUIRE(p.relators.size() == 1);
    CHECK(p.relators[0] == Word::generator(0, 2));
    CHECK_FALSE(p.amenable.has_value());
}

TEST_CASE("parse the homology sphere group") {
    const Presentation p =
        parse_presentation("gens: a b c\nrels: a^2 c^-1 b^-1 a^-1, b^3 c^-1 b^-1 a^-1, c^7 c^-1 b^-1 a^-1");
    REQUIRE(p.relators.size() == 3);
    CHECK(to_string(p.relators[0], p) == "a^2 c^-1 b^-1 a^-1");
    CHECK(to_string(p.relators[2], p) == "c^6 b^-1 a^-1");
}

TEST_CASE("undeclared generator is reported with its position") {
    try {
        parse_presentation("gens: a b\nrels: a b^9 x");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 13);
        CHECK(std::string(e.what()).find("undeclared generator `x`") != std::string::npos);
    }
}

TEST_CASE("malformed presentations") {
    CHECK_THROWS_AS(parse_presentation("rels: a"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a\nrels: a a^-1"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a a"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a\namenable: maybe"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a\nfoo: bar"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a\nrels: a^"), ParseError);
}

TEST_CASE("comments, multi-line relators and flags") {
    const Presentation p = parse_presentation(
        "# Klein bottle\n"
        "gens: a b\n"
        "rels: a b a\n"
        "      b^-1   # continues\n"
        "amenable: true\n");
    REQUIRE(p.relators.size() == 1);
    CHECK(to_string(p.relators[0], p) == "a b a b^-1");
    CHECK(p.amenable == true);
}

TEST_CASE("matrix representations must respect the relators") {
    const Presentation p = parse_presentation(
        "gens: a b\nrels: a b a b^-1\nrep: a = [[1,1],[0,1]] b = [[-1,0],[0,1]]\n");
    CHECK(p.representation.size() == 2);
    CHECK(p.represent(parse_word("a b a^-1 b^-1", p)) == Matrix2{{1, 2, 0, 1}});
    CHECK_THROWS_AS(parse_presentation("gens: a b\nrels: a b a b^-1\nrep: a = [[1,1],[0,1]] b = [[1,0],[0,1]]"),
                    ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a b\nrep: a = [[1,1],[0,1]]"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a\nrep: a = [[1,1],[1,1]]"), ParseError);
}

TEST_CASE("words accept the identity tokens") {
    const Presentation p = parse_presentation("gens: a b");
    CHECK(parse_word("1", p).empty());
    CHECK(parse_word("e", p).empty());
    CHECK(parse_word("a e a^-1", p).empty());
    const Presentation q = parse_presentation("gens: e f");
    CHECK(parse_word("e", q) == Word::generator(0));
}

TEST_CASE("every corpus entry round-trips through serialize") {
    for (const CorpusEntry& e : corpus()) {
        CAPTURE(e.name);
        const Presentation p = e.presentation();
        CHECK_NOTHROW(validate(p));
        CHECK(parse_presentation(serialize(p)) == p);
    }
    const Presentation rep = parse_presentation("gens: a b\nrels: a b a b^-1\nrep: a = [[1,1],[0,1]] b = [[-1,0],[0,1]]\n");
    CHECK(parse_presentation(serialize(rep)) == rep);
}

TEST_CASE("bundled corpus files match the built-in corpus") {
    for (const CorpusEntry& e : corpus()) {
        CAPTURE(e.name);
        std::ifstream in(std::string(LEFTORDER_CORPUS_DIR) + "/" + e.name + ".grp");
        REQUIRE(in.good());
        std::ostringstream buf;
        buf << in.rdbuf();
        CHECK(buf.str() == e.text);
    }
}

TEST_CASE("corpus contents") {
    for (const char* name : {"z", "zz", "z2", "z3", "z4", "z5", "z6", "z7", "f2", "klein", "heisenberg", "q8",
                             "thurston", "tsuboi"}) {
        CHECK(find_corpus_entry(name) != nullptr);
    }
    CHECK(find_corpus_entry("nope") == nullptr);
}
