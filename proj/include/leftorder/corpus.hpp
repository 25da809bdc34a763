#pragma once

#include "leftorder/presentation.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace leftorder {

struct CorpusEntry {
    std::string name;
    std::string text;  // presentation file contents
    std::string notes;

    Presentation presentation() const { return parse_presentation(text); }
};

// Bundled groups, in a fixed order.
const std::vector<CorpusEntry>& corpus();
// nullptr if absent.
const CorpusEntry* find_corpus_entry(std::string_view name);

}  // namespace leftorder
