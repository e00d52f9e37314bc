#pragma once

#include "ei/config.hpp"
#include "ei/presentation.hpp"

namespace ei {

// Presentation of the symbol module the configuration's beta class lives in:
// B_dim(Z/p).
Presentation beta_presentation(const Configuration& c,
                               std::uint64_t budget = kDefaultEnumerationBudget);

// Fixed-locus symbol sum: each component contributes its nonzero normal
// weights padded with one zero per dimension of the component.
FormalSymbolSum beta_symbol_sum(const Configuration& c, const Presentation& pres);

// Canonical class of the sum. The presentation must match the configuration's
// group and dimension.
GroupElementClass beta_class(const Configuration& c, const Presentation& pres);

}  // namespace ei
