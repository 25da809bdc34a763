#pragma once

#include "leftorder/int_matrix.hpp"
#include "leftorder/presentation.hpp"

#include <vector>

namespace leftorder {

// generators x relators; column j holds the exponent sums of relator j.
IntMatrix abelianization_matrix(const Presentation& p);

// rank(generators) - rank(abelianization matrix).
std::size_t first_betti(const Presentation& p);

struct AbelianInvariants {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;            // invariant factors > 1
    std::vector<Integer> smith_diagonal;     // full SNF diagonal
};

AbelianInvariants abelian_invariants(const Presentation& p);

}  // namespace leftorder
