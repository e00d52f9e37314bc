#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "ei/snf.hpp"
#include "ei/symbol.hpp"

namespace ei {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 20000;

// Presentation of the symbol module B_n(G): generators are the sorted symbols
// satisfying the generation condition, relations are every instance of (B)
// over every generator and every block of size 2..n.
struct Presentation {
    DualGroup group;
    std::size_t n = 0;
    std::vector<Symbol> generators;            // sorted, index = position
    std::map<Symbol, std::size_t> index;       // symbol -> generator index
    AbGroupStructure structure;

    const AbGroupStructure& group_structure() const { return structure; }
};

Presentation build_presentation(const DualGroup& g, std::size_t n,
                                std::uint64_t budget = kDefaultEnumerationBudget);

// Canonical class of a formal sum of symbols. Throws on a symbol outside the
// presentation's generator set.
GroupElementClass class_of(const FormalSymbolSum& sum, const Presentation& p);

GroupElementClass zero_class(const Presentation& p);

}  // namespace ei
