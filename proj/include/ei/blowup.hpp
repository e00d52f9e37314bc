#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ei/config.hpp"

namespace ei {

enum class CenterKind {
    FreeOrbitPoint,
    IsolatedFixedPoint,
    InvariantCurve,  // not contained in the fixed locus; orbit or connected
    PointOnFixedCurve,
    FixedCurve,
    CurveTransverseToFixedCurve,
    PointOnFixedSurface,
    CurveTransverseToFixedSurface,
    CurveInFixedSurface,
};

std::string center_kind_name(CenterKind k);
CenterKind center_kind_from_name(const std::string& name);

// One fixed point of the action on an invariant (non-fixed) curve, anchored at
// the fixed-locus feature it sits on. `tangent` is the weight on the curve's
// tangent line there (nonzero).
struct CurveIncidence {
    enum class At { Point, Curve, Surface };
    At at = At::Point;
    std::size_t index = 0;
    Weight tangent = 1;
};

struct BlowupCenter {
    CenterKind kind = CenterKind::FreeOrbitPoint;
    std::size_t index = 0;                  // component index where applicable
    std::optional<Weight> direction;        // isolated point: validated, informational
    bool orbit = false;                     // invariant curve: p components permuted
    std::int64_t genus = 0;                 // invariant curve / curve-in-surface genus
    std::vector<CurveIncidence> incidences; // invariant curve fixed points
    std::optional<Weight> tangent;          // transverse-to-curve selector
    std::int64_t intersections = 1;         // transverse-to-surface crossing count
    std::int64_t self_intersection = 0;     // curve-in-surface C.C on S
    std::int64_t normal_dot = 0;            // curve-in-surface N_X S.C (not consumed)
    std::optional<std::int64_t> split_d1;   // fixed curve, distinct weights: deg L_1
    std::optional<std::string> isogeny_label;  // curve-in-surface: label of the new curve

    std::string describe() const;
};

struct BlowupReport {
    Configuration before;
    Configuration after;
    std::string case_label;
    std::map<std::string, std::int64_t> deltas;  // applicable invariants, after - before
};

// Deterministic bounded list of admissible centers; always nonempty for a
// valid configuration (free-orbit blowup is always available).
std::vector<BlowupCenter> admissible_centers(const Configuration& c);

// Apply one equivariant blowup. Throws std::invalid_argument on an
// inadmissible center; the returned configuration always passes validate.
BlowupReport blowup(const Configuration& c, const BlowupCenter& center);

// Invariants applicable to configurations of this dimension and group order,
// as keys of BlowupReport::deltas ("I", "J", "K", "combined:g", "fine:label",
// genera/labels drawn from both sides of the report).
std::map<std::string, std::int64_t> evaluate_applicable(const Configuration& c,
                                                        const std::vector<std::int64_t>& genera,
                                                        const std::vector<std::string>& labels);

}  // namespace ei
