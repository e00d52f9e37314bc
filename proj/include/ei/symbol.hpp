#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ei/bigint.hpp"

namespace ei {

// Character of a finite abelian group, written additively in the dual group
// Z/m1 x ... x Z/mk; components stored reduced mod m_j.
using Character = std::vector<std::int64_t>;

struct DualGroup {
    std::vector<std::int64_t> orders;  // each >= 2

    explicit DualGroup(std::vector<std::int64_t> ords);
    static DualGroup cyclic(std::int64_t m) { return DualGroup({m}); }

    std::size_t rank() const { return orders.size(); }
    std::uint64_t size() const;

    Character reduce(const Character& c) const;
    Character sub(const Character& a, const Character& b) const;
    Character zero() const { return Character(orders.size(), 0); }
    bool is_zero(const Character& c) const;

    // All group elements in lexicographic order.
    std::vector<Character> elements() const;

    bool operator==(const DualGroup& o) const { return orders == o.orders; }
};

// Unordered tuple of characters, stored sorted; relation (O) is structural.
struct Symbol {
    std::vector<Character> entries;

    Symbol() = default;
    Symbol(std::vector<Character> ents, const DualGroup& g);

    std::size_t size() const { return entries.size(); }
    bool operator<(const Symbol& o) const { return entries < o.entries; }
    bool operator==(const Symbol& o) const { return entries == o.entries; }
    std::string str() const;
};

struct FormalSymbolSum {
    std::map<Symbol, Int> terms;  // no zero coefficients stored

    void add(const Symbol& s, const Int& coeff);
    FormalSymbolSum& operator+=(const FormalSymbolSum& o);
    bool empty() const { return terms.empty(); }
    std::string str() const;
};

// True iff the characters generate the whole dual group. Throws on component
// length mismatch.
bool generation_condition(const std::vector<Character>& chars, const DualGroup& g);

// All sorted n-symbols satisfying the generation condition, lexicographic.
std::vector<Symbol> enumerate_generators(const DualGroup& g, std::size_t n);

// Count of sorted n-multisets over the group; cheap budget pre-check.
std::uint64_t multiset_count(const DualGroup& g, std::size_t n);

// Right-hand side of relation (B) for the block given by entry positions
// (size between 2 and n). Every emitted symbol is checked against the
// generation condition; a failure is a hard error, not a dropped term.
FormalSymbolSum relation_b_expand(const Symbol& s, const std::vector<std::size_t>& block,
                                  const DualGroup& g);

}  // namespace ei
