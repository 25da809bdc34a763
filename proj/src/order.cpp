#include "leftorder/order.hpp"

#include "leftorder/abelian.hpp"
#include "leftorder/errors.hpp"

#include <vector>

namespace leftorder {

const char* to_string(Cmp c) {
    switch (c) {
        case Cmp::Less: return "Less";
        case Cmp::Equal: return "Equal";
        case Cmp::Greater: return "Greater";
        case Cmp::Unknown: return "Unknown";
    }
    return "?";
}

Cmp flip(Cmp c) {
    if (c == Cmp::Less) return Cmp::Greater;
    if (c == Cmp::Greater) return Cmp::Less;
    return c;
}

Cmp lex_order_compare(std::span<const std::int64_t> u, std::span<const std::int64_t> v) {
    if (u.size() != v.size()) throw PreconditionError("lex comparison of vectors with different lengths");
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] < v[i]) return Cmp::Less;
        if (u[i] > v[i]) return Cmp::Greater;
    }
    return Cmp::Equal;
}

Integer magnus_coefficient(const Word& w, std::span<const std::size_t> monomial) {
    // ways[k]: coefficient sum over letter prefixes covering monomial[0, k).
    const std::vector<int> codes = w.codes();
    const std::size_t d = monomial.size();
    std::vector<Integer> ways(d + 1, Integer(0));
    ways[0] = 1;
    for (int code : codes) {
        const std::size_t var = static_cast<std::size_t>(code > 0 ? code : -code) - 1;
        std::vector<Integer> next(d + 1, Integer(0));
        for (std::size_t k = 0; k <= d; ++k) {
            if (ways[k] == 0) continue;
            next[k] += ways[k];
            if (code > 0) {
                if (k < d && monomial[k] == var) next[k + 1] += ways[k];
            } else {
                // 1 - X + X^2 - ...: a run of j copies contributes (-1)^j.
                int s = -1;
                for (std::size_t j = k; j < d && monomial[j] == var; ++j, s = -s) next[j + 1] += s * ways[k];
            }
        }
        ways = std::move(next);
    }
    return ways[d];
}

Cmp magnus_compare(const Presentation& p, const Word& u, const Word& v) {
    if (!p.is_free()) throw PreconditionError("Magnus order requires a presentation without relators");
    const Word diff = u.inverse() * v;
    if (diff.empty()) return Cmp::Equal;
    const std::size_t degree_cap = diff.length();
    const std::size_t n = p.rank();
    std::vector<std::size_t> monomial;
    for (std::size_t d = 1; d <= degree_cap; ++d) {
        monomial.assign(d, 0);
        for (;;) {
            const Integer cu = magnus_coefficient(u, monomial);
            const Integer cv = magnus_coefficient(v, monomial);
            if (cu != cv) return cu > cv ? Cmp::Greater : Cmp::Less;
            // Next monomial of degree d in lexicographic order.
            std::size_t i = d;
            while (i > 0 && monomial[i - 1] + 1 == n) monomial[--i] = 0;
            if (i == 0) break;
            ++monomial[i - 1];
        }
    }
    throw InvariantViolation("Magnus expansions agree up to the truncation degree for distinct words");
}

LexOracle::LexOracle(Presentation p, const Budget& budget) : presentation_(std::move(p)) {
    if (first_betti(presentation_) != presentation_.rank()) {
        throw PreconditionError("lex order needs a free abelian group on the generators");
    }
    const WordProblem wp(presentation_);
    for (std::size_t i = 0; i < presentation_.rank(); ++i) {
        for (std::size_t j = i + 1; j < presentation_.rank(); ++j) {
            const Word a = Word::generator(i), b = Word::generator(j);
            const Word commutator = a * b * a.inverse() * b.inverse();
            if (wp.status(commutator, budget).verdict != Verdict::Identity) {
                throw PreconditionError("lex order needs commuting generators; could not show [" +
                                        presentation_.generators[i] + "," + presentation_.generators[j] +
                                        "] = 1");
            }
        }
    }
}

Cmp LexOracle::compare(const Word& u, const Word& v) const {
    const auto a = u.exponent_sums(presentation_.rank());
    const auto b = v.exponent_sums(presentation_.rank());
    return lex_order_compare(a, b);
}

std::optional<Word> LexOracle::canonical(const Word& w) const {
    const auto sums = w.exponent_sums(presentation_.rank());
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < sums.size(); ++i) letters.push_back({i, sums[i]});
    return Word::reduce(letters);
}

MagnusOracle::MagnusOracle(Presentation p) : presentation_(std::move(p)) {
    if (!presentation_.is_free()) throw PreconditionError("Magnus order requires a presentation without relators");
}

Cmp MagnusOracle::compare(const Word& u, const Word& v) const { return magnus_compare(presentation_, u, v); }

std::unique_ptr<OrderOracle> make_order_oracle(const std::string& name, const Presentation& p, const Budget& budget) {
    if (name == "lex") return std::make_unique<LexOracle>(p, budget);
    if (name == "magnus") return std::make_unique<MagnusOracle>(p);
    throw PreconditionError("unknown order `" + name + "` (expected lex or magnus)");
}

}  // namespace leftorder
