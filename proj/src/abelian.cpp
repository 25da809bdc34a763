#include "leftorder/abelian.hpp"

namespace leftorder {

IntMatrix abelianization_matrix(const Presentation& p) {
    validate(p);
    IntMatrix m(p.rank(), p.relators.size());
    for (std::size_t j = 0; j < p.relators.size(); ++j) {
        const auto sums = p.relators[j].exponent_sums(p.rank());
        for (std::size_t i = 0; i < sums.size(); ++i) m(i, j) = static_cast<long>(sums[i]);
    }
    return m;
}

std::size_t first_betti(const Presentation& p) {
    const SmithForm snf = smith_normal_form(abelianization_matrix(p));
    return p.rank() - snf.rank();
}

AbelianInvariants abelian_invariants(const Presentation& p) {
    const SmithForm snf = smith_normal_form(abelianization_matrix(p));
    AbelianInvariants out;
    out.smith_diagonal = snf.diagonal;
    out.free_rank = p.rank() - snf.rank();
    for (const Integer& d : snf.diagonal) {
        if (d > 1) out.torsion.push_back(d);
    }
    return out;
}

}  // namespace leftorder
