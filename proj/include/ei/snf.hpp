#pragma once

#include <cstddef>
#include <vector>

#include "ei/int_matrix.hpp"

namespace ei {

struct SnfResult {
    IntMatrix u;  // rows x rows, unimodular
    IntMatrix s;  // diagonal, nonnegative, d_i | d_{i+1}
    IntMatrix v;  // cols x cols, unimodular
};

// Smith normal form: u*m*v = s with u, v unimodular and the diagonal of s
// nonnegative and divisibility-chained. Total on all integer matrices.
SnfResult snf(const IntMatrix& m);

// Finitely generated abelian group in invariant-factor form, together with
// the change of basis that reduces generator coordinates to canonical ones.
struct AbGroupStructure {
    std::size_t num_generators = 0;
    std::size_t free_rank = 0;
    std::vector<Int> torsion;  // each >= 2, ascending divisibility chain
    // Column i of `projection` gives the i-th canonical coordinate of a
    // generator-coordinate row vector: y = x * projection. Torsion coordinates
    // come first (columns torsion_cols), then free coordinates.
    IntMatrix projection;
    std::vector<std::size_t> torsion_cols;
    std::vector<std::size_t> free_cols;

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    // "Z^r (+) Z/d1 (+) ..." with repeats grouped, "0" for the trivial group.
    std::string structure_string() const;
};

struct GroupElementClass {
    std::vector<Int> free_part;
    std::vector<Int> torsion_part;  // torsion_part[i] in [0, d_i)

    bool is_zero() const;
    bool operator==(const GroupElementClass& o) const {
        return free_part == o.free_part && torsion_part == o.torsion_part;
    }
    std::string str() const;
};

// Invariant-factor decomposition of Z^num_generators modulo the row span of
// `relations` (relations may have any number of rows, num_generators columns).
AbGroupStructure present_quotient(std::size_t num_generators, const IntMatrix& relations);

// Canonical class of a coordinate vector; vectors differing by a relation
// reduce identically. Throws on length mismatch.
GroupElementClass reduce_element(const AbGroupStructure& g, const std::vector<Int>& coords);

}  // namespace ei
