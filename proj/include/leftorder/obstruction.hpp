#pragma once

#include "leftorder/germ.hpp"
#include "leftorder/presentation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace leftorder {

enum class ObstructionVerdict {
    NotARepresentation,     // some relator moves a sampled point
    NoObstruction,          // b1 > 0
    ObstructionWitness,     // amenable, b1 = 0, yet some generator is nontrivial
    TrivialRepresentation,  // amenable, b1 = 0, every generator samples as the identity
    HypothesesNotMet,       // amenability not asserted
};

const char* to_string(ObstructionVerdict v);

struct MovedPoint {
    std::size_t index = 0;  // relator or generator index
    GridPoint point;
    Rational image;
};

struct ObstructionReport {
    Presentation presentation;
    std::vector<ParamGerm> assignment;  // by generator index
    std::size_t depth = 0;
    std::size_t betti = 0;
    ObstructionVerdict verdict = ObstructionVerdict::HypothesesNotMet;
    std::optional<MovedPoint> relator_witness;
    std::optional<MovedPoint> generator_witness;
    std::string note;
};

/// Runs the relator check on shells 1..depth, then decides from b1 and the
/// amenability flag. Points where a relator word leaves its domain are skipped.
ObstructionReport stability_obstruction(const Presentation& p, const std::vector<ParamGerm>& assignment,
                                        std::size_t depth);

// Re-evaluates the recorded witnesses and the finite checks. Empty string on success.
std::string verify_obstruction(const ObstructionReport& report);

}  // namespace leftorder
