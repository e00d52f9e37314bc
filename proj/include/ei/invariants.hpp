#pragma once

#include <string>
#include <vector>

#include "ei/config.hpp"

namespace ei {

struct InvariantTerm {
    std::string description;
    std::int64_t value;
};

struct InvariantBreakdown {
    std::vector<InvariantTerm> terms;
    std::int64_t total = 0;
};

// I (surfaces, p = 2): chi(fixed locus) + sum of curve normal degrees.
std::int64_t invariant_I(const Configuration& c);
InvariantBreakdown invariant_I_terms(const Configuration& c);

// J (threefolds, p = 3): mixed-weight points + curve terms (1-g+d for equal
// weights, 2-2g+d for opposite) + surface terms 3 - 3g - K_S.N.
std::int64_t invariant_J(const Configuration& c);
InvariantBreakdown invariant_J_terms(const Configuration& c);

// K (threefolds, p = 2): #points + sum (2-2g+d) + sum (4-4g - K_S.N).
std::int64_t invariant_K(const Configuration& c);
InvariantBreakdown invariant_K_terms(const Configuration& c);

// Atoms-meet-symbols invariant at genus g >= 2 (threefolds, any prime p):
// -#{genus-g curves} - 2#{C x P1 surfaces of ruling genus g}
// +#{ledger atoms with P = g/t + 2 + g t and trivial action}.
std::int64_t combined_invariant(const Configuration& c, std::int64_t g);
InvariantBreakdown combined_invariant_terms(const Configuration& c, std::int64_t g);

// Isogeny-labelled refinement (threefolds, any prime p).
std::int64_t fine_invariant(const Configuration& c, const std::string& label);
InvariantBreakdown fine_invariant_terms(const Configuration& c, const std::string& label);

// True iff Coeff_{t^{d-2}} of the fixed-locus polynomial strictly exceeds the
// total one: the variety is then not equivariantly birational to projective
// space with a linearizable action. Requires d >= 2.
bool hodge_coeff_obstruction(const LaurentPoly& p_total, const LaurentPoly& p_fixed,
                             std::int64_t d);

}  // namespace ei
