#include "doctest.h"
#include "oracles.hpp"

#include "leftorder/errors.hpp"
#include "leftorder/word.hpp"

using namespace leftorder;

namespace {

Word w(std::initializer_list<int> codes) { return Word::from_codes(std::vector<int>(codes)); }

}  // namespace

TEST_CASE("free reduction cancels and merges") {
    const std::vector<Letter> cancel{{0, 1}, {0, -1}, {1, 1}};
    CHECK(free_reduce(cancel, 2) == Word::generator(1));
    CHECK(free_reduce({}, 2).empty());
    const std::vector<Letter> merge{{0, 1}, {1, 1}, {1, -1}, {0, 1}};
    CHECK(free_reduce(merge, 2) == Word::generator(0, 2));
    const std::vector<Letter> zero{{0, 0}, {1, 3}, {1, -3}};
    CHECK(free_reduce(zero, 2).empty());
}

TEST_CASE("free reduction rejects unknown generators") {
    const std::vector<Letter> bad{{2, 1}};
    CHECK_THROWS_AS(free_reduce(bad, 2), StructuralError);
}

TEST_CASE("free reduction is idempotent and never lengthens") {
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<int> gen(0, 2), exp(-3, 3), len(0, 12);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Letter> raw;
        std::int64_t raw_length = 0;
        for (int i = len(rng); i > 0; --i) {
            raw.push_back({static_cast<std::size_t>(gen(rng)), exp(rng)});
            raw_length += std::abs(raw.back().exponent);
        }
        const Word once = free_reduce(raw, 3);
        CHECK(free_reduce(once.letters(), 3) == once);
        CHECK(static_cast<std::int64_t>(once.length()) <= raw_length);
        for (std::size_t i = 0; i + 1 < once.letters().size(); ++i) {
            CHECK(once.letters()[i].generator != once.letters()[i + 1].generator);
        }
        // Same result as cancelling single letters on a stack.
        std::vector<int> codes;
        for (const Letter& l : raw) {
            for (std::int64_t k = 0; k < std::abs(l.exponent); ++k) {
                codes.push_back((l.exponent > 0 ? 1 : -1) * static_cast<int>(l.generator + 1));
            }
        }
        CHECK(once.codes() == oracle::reduce_codes(codes));
    }
}

TEST_CASE("group operations on words") {
    const Word x = w({1, 2, -1});
    CHECK((x * x.inverse()).empty());
    CHECK(x.inverse() == w({1, -2, -1}));
    CHECK(x.power(3) == w({1, 2, 2, 2, -1}));
    CHECK(x.power(-1) == x.inverse());
    CHECK(x.power(0).empty());
    CHECK(x.length() == 3);
    CHECK(x.exponent_sums(2) == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("shortlex order") {
    CHECK(shortlex_less(Word(), w({1})));
    CHECK(shortlex_less(w({1}), w({-1})));
    CHECK(shortlex_less(w({-1}), w({2})));
    CHECK(shortlex_less(w({2, 2}), w({1, 1, 1})));
    CHECK_FALSE(shortlex_less(w({1}), w({1})));
}

TEST_CASE("printing words") {
    const std::vector<std::string> names{"a", "b"};
    CHECK(to_string(Word(), names) == "e");
    CHECK(to_string(w({1, 1, -2}), names) == "a^2 b^-1");
}
