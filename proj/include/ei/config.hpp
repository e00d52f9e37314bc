#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ei/laurent.hpp"

namespace ei {

using Weight = std::int64_t;  // nonzero character mod p, stored in 1..p-1

struct GroupSpec {
    std::int64_t p = 2;  // prime order of the cyclic group

    bool operator==(const GroupSpec&) const = default;
};

struct PointComponent {
    std::vector<Weight> weights;  // dim-many nonzero normal weights, sorted

    bool operator==(const PointComponent&) const = default;
};

struct CurveComponent {
    std::int64_t genus = 0;
    std::vector<Weight> weights;  // dim-1 nonzero normal weights, sorted
    std::int64_t d = 0;           // degree of wedge^2 of the normal bundle (dim 3),
                                  // or of the normal line bundle itself (dim 2)
    std::optional<std::string> isogeny_label;

    bool operator==(const CurveComponent&) const = default;
};

struct SurfaceComponent {
    Weight weight = 1;
    std::int64_t ruling_genus = 0;
    std::int64_t k_dot_n = 0;  // K_S . N_X S
    std::string tag;           // birational type, e.g. "P2", "CxP1"
    std::optional<std::string> isogeny_label;

    bool operator==(const SurfaceComponent&) const = default;
};

// Atom invariant record: Hodge polynomial, Hodge-class dimensions, and the
// action/identity flags the invariants match on.
struct AtomRecord {
    LaurentPoly hodge_poly;  // nonnegative coefficients
    Int rho = 0;
    Int rho_g = 0;
    bool g_action_trivial = false;
    std::optional<std::string> mt_label;

    bool operator==(const AtomRecord& o) const {
        return hodge_poly == o.hodge_poly && rho == o.rho && rho_g == o.rho_g &&
               g_action_trivial == o.g_action_trivial && mt_label == o.mt_label;
    }
};

inline constexpr const char* kTagRuledProduct = "CxP1";
inline constexpr const char* kTagPlane = "P2";

// Symbolic fixed locus of a generically free Z/p-action on a smooth projective
// surface (dim 2) or threefold (dim 3), plus the pre-atom ledger.
struct Configuration {
    GroupSpec group;
    int dim = 3;  // 2 or 3
    std::vector<PointComponent> points;
    std::vector<CurveComponent> curves;
    std::vector<SurfaceComponent> surfaces;
    std::vector<AtomRecord> atoms;

    bool operator==(const Configuration&) const = default;
};

// All violations, empty when valid.
std::vector<std::string> validate(const Configuration& c);
inline bool is_valid(const Configuration& c) { return validate(c).empty(); }
void require_valid(const Configuration& c);

// chi of the fixed locus: #points + sum over curves of (2 - 2g). Surfaces are
// outside this invariant's habitat and raise an error.
std::int64_t euler_characteristic_fixed_locus(const Configuration& c);

// Genus of the normalization of x^3 = P(t), P monic of degree 3k with simple
// roots: 2g - 2 = 3(-2) + 3k*2.
std::int64_t genus_cyclic_cover(std::int64_t k);

Weight reduce_weight(std::int64_t w, std::int64_t p);
Weight negate_weight(Weight w, std::int64_t p);

}  // namespace ei
