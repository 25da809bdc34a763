#include "leftorder/corpus.hpp"

namespace leftorder {

namespace {

std::vector<CorpusEntry> build() {
    std::vector<CorpusEntry> out;
    out.push_back({"z", "gens: a\namenable: true\n", "infinite cyclic group"});
    out.push_back({"zz", "gens: a b\nrels: a b a^-1 b^-1\namenable: true\n", "free abelian of rank 2"});
    out.push_back({"zzz", "gens: a b c\nrels: a b a^-1 b^-1, a c a^-1 c^-1, b c b^-1 c^-1\namenable: true\n",
                   "free abelian of rank 3"});
    for (int n = 2; n <= 7; ++n) {
        out.push_back({"z" + std::to_string(n), "gens: a\nrels: a^" + std::to_string(n) + "\namenable: true\n",
                       "cyclic of order " + std::to_string(n) + ", has torsion"});
    }
    out.push_back({"f2", "gens: a b\namenable: false\n", "free group of rank 2"});
    out.push_back({"klein", "gens: a b\nrels: a b a b^-1\namenable: true\n", "Klein bottle group"});
    out.push_back({"heisenberg",
                   "gens: a b c\nrels: a b a^-1 b^-1 c^-1, a c a^-1 c^-1, b c b^-1 c^-1\namenable: true\n",
                   "integer Heisenberg group, nilpotent"});
    out.push_back({"q8", "gens: a b\nrels: a^4, a^2 b^-2, b^-1 a b a\namenable: true\n", "quaternion group of order 8"});
    out.push_back({"thurston",
                   "gens: a b c\nrels: a^2 c^-1 b^-1 a^-1, b^3 c^-1 b^-1 a^-1, c^7 c^-1 b^-1 a^-1\namenable: false\n",
                   "a^2 = b^3 = c^7 = abc, fundamental group of a homology 3-sphere"});
    out.push_back({"tsuboi", "gens: a b\nrels: a^2 b a^-1 b^-1 a^-1 b a b^-1 a^-1\n",
                   "<a, b | [a, [a, b]]>, amenability not asserted"});
    return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = build();
    return entries;
}

const CorpusEntry* find_corpus_entry(std::string_view name) {
    for (const CorpusEntry& e : corpus()) {
        if (e.name == name) return &e;
    }
    return nullptr;
}

}  // namespace leftorder
