#pragma once

#include "leftorder/germ_order.hpp"
#include "leftorder/obstruction.hpp"
#include "leftorder/realization.hpp"
#include "leftorder/semigroup.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace leftorder {

inline constexpr int kFormatVersion = 1;

/// JSON documents for every artifact. Each carries `format_version`, `kind`
/// and a SHA-256 `digest` over the compact dump of all other fields.
/// Rationals are [numerator, denominator] pairs; integers beyond 64 bits are
/// written as decimal strings.
std::string to_document(const CriterionResult& r);
std::string to_document(const RealizationReport& r);
std::string to_document(const GermOrderTranscript& t);
std::string to_document(const ObstructionReport& r);

// Parsers throw ParseError (line 1, column 0 for semantic errors) on
// malformed documents; they do not check the digest.
CriterionResult parse_criterion_document(std::string_view text);
RealizationReport parse_realization_document(std::string_view text);
GermOrderTranscript parse_transcript_document(std::string_view text);
ObstructionReport parse_obstruction_document(std::string_view text);

struct VerifyOutcome {
    bool ok = false;
    std::string kind;
    std::string message;
};

/// Checks the digest and replays the certificate of any document kind.
VerifyOutcome verify_document(std::string_view text);

// Germ files: {"format_version": 1, "germs": [{"name", "expr", "rho"}]} with
// rho a number or a "p/q" string.
std::vector<ParamGerm> parse_germ_file(std::string_view text);
std::string germ_file(const std::vector<ParamGerm>& germs);

}  // namespace leftorder
