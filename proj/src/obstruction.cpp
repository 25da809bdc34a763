#include "leftorder/obstruction.hpp"

#include "leftorder/abelian.hpp"
#include "leftorder/errors.hpp"
#include "leftorder/germ_order.hpp"

#include <algorithm>

namespace leftorder {

const char* to_string(ObstructionVerdict v) {
    switch (v) {
        case ObstructionVerdict::NotARepresentation: return "NotARepresentation";
        case ObstructionVerdict::NoObstruction: return "NoObstruction";
        case ObstructionVerdict::ObstructionWitness: return "ObstructionWitness";
        case ObstructionVerdict::TrivialRepresentation: return "TrivialRepresentation";
        case ObstructionVerdict::HypothesesNotMet: return "HypothesesNotMet";
    }
    return "?";
}

namespace {

std::optional<Rational> try_eval(const std::vector<ParamGerm>& germs, const Word& w, const GridPoint& pt) {
    try {
        return eval_germ_word(germs, w, pt.x, pt.s);
    } catch (const DomainError&) {
        return std::nullopt;
    } catch (const UnsupportedInverse& e) {
        throw PreconditionError(std::string("relator check needs an inverse: ") + e.what());
    }
}

std::optional<MovedPoint> moved_relator(const Presentation& p, const std::vector<ParamGerm>& germs,
                                        std::size_t depth) {
    for (std::size_t m = 1; m <= depth; ++m) {
        for (const GridPoint& pt : shell_points(m)) {
            for (std::size_t r = 0; r < p.relators.size(); ++r) {
                auto y = try_eval(germs, p.relators[r], pt);
                if (y && *y != pt.x) return MovedPoint{r, pt, *y};
            }
        }
    }
    return std::nullopt;
}

void check_assignment(const Presentation& p, const std::vector<ParamGerm>& assignment, std::size_t depth) {
    if (assignment.size() != p.rank()) {
        throw PreconditionError("assignment covers " + std::to_string(assignment.size()) + " of " +
                                std::to_string(p.rank()) + " generators");
    }
    if (depth == 0 || depth > 24) throw PreconditionError("depth must be in 1..24");
}

}  // namespace

ObstructionReport stability_obstruction(const Presentation& p, const std::vector<ParamGerm>& assignment,
                                        std::size_t depth) {
    validate(p);
    check_assignment(p, assignment, depth);
    ObstructionReport out;
    out.presentation = p;
    out.assignment = assignment;
    out.depth = depth;
    out.betti = first_betti(p);

    if (auto moved = moved_relator(p, assignment, depth)) {
        out.verdict = ObstructionVerdict::NotARepresentation;
        out.relator_witness = moved;
        out.note = "relator " + to_string(p.relators[moved->index], p) + " moves a sampled point";
        return out;
    }
    if (out.betti > 0) {
        out.verdict = ObstructionVerdict::NoObstruction;
        out.note = "H^1 != 0";
        return out;
    }
    if (p.amenable != true) {
        out.verdict = ObstructionVerdict::HypothesesNotMet;
        out.note = "amenability not asserted";
        return out;
    }
    for (std::size_t g = 0; g < assignment.size(); ++g) {
        if (auto w = find_nontriviality_witness(assignment[g], depth)) {
            out.verdict = ObstructionVerdict::ObstructionWitness;
            out.generator_witness = MovedPoint{g, w->front().point, w->front().image};
            out.note = "generator " + p.generators[g] +
                       " is nontrivial although an amenable group with b1 = 0 has no nontrivial left-orderable quotient";
            return out;
        }
    }
    out.verdict = ObstructionVerdict::TrivialRepresentation;
    out.note = "every generator samples as the identity";
    return out;
}

std::string verify_obstruction(const ObstructionReport& r) {
    const Presentation& p = r.presentation;
    try {
        validate(p);
        check_assignment(p, r.assignment, r.depth);
    } catch (const Error& e) {
        return e.what();
    }
    if (first_betti(p) != r.betti) return "recorded b1 does not match";

    auto moved_at = [&](const Word& w, const MovedPoint& mp) -> std::string {
        if (mp.point.shell == 0 || mp.point.shell > r.depth) return "witness point outside the sampled shells";
        const auto grid = shell_points(mp.point.shell);
        if (std::find(grid.begin(), grid.end(), mp.point) == grid.end()) return "witness point not on the grid";
        auto y = try_eval(r.assignment, w, mp.point);
        if (!y) return "witness point outside the domain";
        if (*y != mp.image) return "recorded image does not match";
        if (*y == mp.point.x) return "witness point is not moved";
        return {};
    };

    try {
        if (r.verdict == ObstructionVerdict::NotARepresentation) {
            if (!r.relator_witness || r.relator_witness->index >= p.relators.size()) return "missing relator witness";
            return moved_at(p.relators[r.relator_witness->index], *r.relator_witness);
        }
        if (moved_relator(p, r.assignment, r.depth)) return "a relator moves a sampled point";
        switch (r.verdict) {
            case ObstructionVerdict::NoObstruction:
                return r.betti > 0 ? "" : "NoObstruction with b1 = 0";
            case ObstructionVerdict::HypothesesNotMet:
                if (r.betti > 0) return "b1 > 0 should give NoObstruction";
                return p.amenable == true ? "amenability is asserted" : "";
            case ObstructionVerdict::ObstructionWitness:
                if (r.betti > 0 || p.amenable != true) return "hypotheses do not hold";
                if (!r.generator_witness || r.generator_witness->index >= p.rank()) return "missing generator witness";
                return moved_at(Word::generator(r.generator_witness->index), *r.generator_witness);
            case ObstructionVerdict::TrivialRepresentation:
                if (r.betti > 0 || p.amenable != true) return "hypotheses do not hold";
                for (const ParamGerm& g : r.assignment) {
                    if (find_nontriviality_witness(g, r.depth)) return "germ `" + g.name + "` is nontrivial";
                }
                return {};
            default:
                return "unknown verdict";
        }
    } catch (const Error& e) {
        return e.what();
    }
}

}  // namespace leftorder
