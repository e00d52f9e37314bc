#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ei/config.hpp"

namespace ei {

// Pre-atom records for the dim <= 1 generators.
AtomRecord trivial_point_atom();
AtomRecord free_orbit_point_atom(std::int64_t p);
AtomRecord trivial_curve_atom(std::int64_t genus, const std::optional<std::string>& label);
AtomRecord nontrivial_curve_atom(std::int64_t genus);
AtomRecord free_orbit_curve_atom(std::int64_t p, std::int64_t genus);

struct AtomCatalog {
    std::vector<std::pair<std::string, AtomRecord>> entries;

    const AtomRecord* find(const std::string& name) const;
    // The point-type entries (constant Hodge polynomial), the basis for
    // decomposition feasibility.
    std::vector<std::pair<std::string, AtomRecord>> point_entries() const;
};

// Catalog of the dim <= 1 equivariant atom generators for Z/p: trivial point,
// free orbit of a point, and the curve entries for genus 1..max_genus.
AtomCatalog catalog_low_dim(std::int64_t p, std::int64_t max_genus = 3);

struct FeasibilityResult {
    bool feasible = false;
    std::vector<Int> witness;  // per basis vector, when feasible
    std::string certificate;   // exhausted bounds, when infeasible
};

// Decide whether target = sum x_i * basis_i has a solution in nonnegative
// integers with x_i >= the forced minima, by bounded exhaustive search.
// Basis vectors must be componentwise nonnegative with at least one positive
// component (otherwise the search direction is unbounded).
FeasibilityResult feasibility(const std::vector<Int>& target,
                              const std::vector<std::vector<Int>>& basis,
                              const std::vector<std::pair<std::size_t, Int>>& forced = {});

struct ForcedAtom {
    std::size_t atom_index = 0;  // which variety atom it must sit inside
    Int rho = 0;
    Int rho_g = 0;
    Int count = 1;
    std::string name;  // narrative only
};

struct AtomVerdict {
    std::size_t atom_index = 0;
    enum class Kind { Unobstructed, Obstructed, Inconsistent } kind = Kind::Unobstructed;
    std::vector<Int> remaining;  // (rho, rho_g) after forced subtraction
    FeasibilityResult feas;
    std::string narrative;
};

struct ObstructionReport {
    std::vector<AtomVerdict> verdicts;
    bool any_obstructed = false;
    bool any_inconsistent = false;
};

// For each variety atom, subtract the forced atoms from its (rho, rho_g)
// vector and test decomposability into the catalog's point atoms.
ObstructionReport obstruction_report(const std::vector<AtomRecord>& variety_atoms,
                                     const AtomCatalog& catalog,
                                     const std::vector<ForcedAtom>& forced);

}  // namespace ei
