#include "ei/blowup.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ei/atoms.hpp"
#include "ei/invariants.hpp"

namespace ei {

std::string center_kind_name(CenterKind k) {
    switch (k) {
        case CenterKind::FreeOrbitPoint: return "free_orbit_point";
        case CenterKind::IsolatedFixedPoint: return "isolated_fixed_point";
        case CenterKind::InvariantCurve: return "invariant_curve";
        case CenterKind::PointOnFixedCurve: return "point_on_fixed_curve";
        case CenterKind::FixedCurve: return "fixed_curve";
        case CenterKind::CurveTransverseToFixedCurve: return "curve_transverse_to_fixed_curve";
        case CenterKind::PointOnFixedSurface: return "point_on_fixed_surface";
        case CenterKind::CurveTransverseToFixedSurface: return "curve_transverse_to_fixed_surface";
        case CenterKind::CurveInFixedSurface: return "curve_in_fixed_surface";
    }
    return "?";
}

CenterKind center_kind_from_name(const std::string& name) {
    for (CenterKind k :
         {CenterKind::FreeOrbitPoint, CenterKind::IsolatedFixedPoint, CenterKind::InvariantCurve,
          CenterKind::PointOnFixedCurve, CenterKind::FixedCurve,
          CenterKind::CurveTransverseToFixedCurve, CenterKind::PointOnFixedSurface,
          CenterKind::CurveTransverseToFixedSurface, CenterKind::CurveInFixedSurface})
        if (center_kind_name(k) == name) return k;
    throw std::invalid_argument("unknown center kind: " + name);
}

std::string BlowupCenter::describe() const {
    std::ostringstream os;
    os << center_kind_name(kind);
    switch (kind) {
        case CenterKind::FreeOrbitPoint: break;
        case CenterKind::IsolatedFixedPoint:
        case CenterKind::PointOnFixedCurve:
        case CenterKind::FixedCurve:
        case CenterKind::PointOnFixedSurface: os << "(" << index << ")"; break;
        case CenterKind::InvariantCurve:
            os << "(genus " << genus << (orbit ? ", orbit" : "") << ", " << incidences.size()
               << " incidences)";
            break;
        case CenterKind::CurveTransverseToFixedCurve:
            os << "(curve " << index << ", tangent " << (tangent ? *tangent : 0) << ")";
            break;
        case CenterKind::CurveTransverseToFixedSurface:
            os << "(surface " << index << ", " << intersections << " crossings)";
            break;
        case CenterKind::CurveInFixedSurface:
            os << "(surface " << index << ", genus " << genus << ", C.C " << self_intersection
               << ")";
            break;
    }
    return os.str();
}

namespace {

void fail(const std::string& what) { throw std::invalid_argument("inadmissible center: " + what); }

std::vector<Weight> sorted_weights(std::vector<Weight> ws) {
    std::sort(ws.begin(), ws.end());
    return ws;
}

void add_point(Configuration& c, std::vector<Weight> ws) {
    c.points.push_back({sorted_weights(std::move(ws))});
}

void add_curve(Configuration& c, std::int64_t genus, std::vector<Weight> ws, std::int64_t d,
               std::optional<std::string> label = std::nullopt) {
    CurveComponent cc;
    cc.genus = genus;
    cc.weights = sorted_weights(std::move(ws));
    cc.d = d;
    cc.isogeny_label = std::move(label);
    c.curves.push_back(std::move(cc));
}

void ledger_points_for_point_blowup(Configuration& c, bool free_orbit) {
    // blowup of a point in dim d adds d-1 copies of the center's atom content
    int copies = c.dim - 1;
    for (int i = 0; i < copies; ++i)
        c.atoms.push_back(free_orbit ? free_orbit_point_atom(c.group.p) : trivial_point_atom());
}

void ledger_for_curve_center(Configuration& c, std::int64_t genus, bool orbit, bool fixed_or_trivial,
                             const std::optional<std::string>& label) {
    // codimension-2 center: one copy of the center's atoms. A rational curve
    // contributes two point atoms, a positive-genus curve a single curve atom.
    if (genus == 0) {
        for (int i = 0; i < 2; ++i)
            c.atoms.push_back(orbit ? free_orbit_point_atom(c.group.p) : trivial_point_atom());
    } else if (orbit) {
        c.atoms.push_back(free_orbit_curve_atom(c.group.p, genus));
    } else if (fixed_or_trivial) {
        c.atoms.push_back(trivial_curve_atom(genus, label));
    } else {
        c.atoms.push_back(nontrivial_curve_atom(genus));
    }
}

struct Applied {
    Configuration after;
    std::string label;
};

Applied apply_dim2(const Configuration& c, const BlowupCenter& ctr) {
    const std::int64_t p = c.group.p;
    Applied r{c, ""};
    switch (ctr.kind) {
        case CenterKind::FreeOrbitPoint:
            ledger_points_for_point_blowup(r.after, true);
            r.label = "D2-C1";
            return r;
        case CenterKind::IsolatedFixedPoint: {
            if (ctr.index >= c.points.size()) fail("point index out of range");
            auto ws = c.points[ctr.index].weights;
            if (ctr.direction &&
                std::find(ws.begin(), ws.end(), *ctr.direction) == ws.end())
                fail("direction selector is not a weight of the point");
            r.after.points.erase(r.after.points.begin() + ctr.index);
            if (ws[0] == ws[1]) {
                add_curve(r.after, 0, {ws[0]}, -1);
                r.label = "D2-C2:eq";
            } else {
                add_point(r.after, {reduce_weight(ws[0] - ws[1], p), ws[1]});
                add_point(r.after, {ws[0], reduce_weight(ws[1] - ws[0], p)});
                r.label = "D2-C2:neq";
            }
            ledger_points_for_point_blowup(r.after, false);
            return r;
        }
        case CenterKind::PointOnFixedCurve: {
            if (ctr.index >= c.curves.size()) fail("curve index out of range");
            Weight u = c.curves[ctr.index].weights[0];
            r.after.curves[ctr.index].d -= 1;
            add_point(r.after, {u, negate_weight(u, p)});
            ledger_points_for_point_blowup(r.after, false);
            r.label = "D2-C3";
            return r;
        }
        default:
            fail("center kind " + center_kind_name(ctr.kind) + " is not available in dimension 2");
    }
    return r;  // unreachable
}

// Effect of one fixed point of the action on an invariant non-fixed curve.
std::string apply_incidence(Configuration& out, const CurveIncidence& inc,
                            std::vector<std::size_t>& points_to_remove,
                            const Configuration& base) {
    const std::int64_t p = base.group.p;
    switch (inc.at) {
        case CurveIncidence::At::Point: {
            if (inc.index >= base.points.size()) fail("incidence point index out of range");
            auto ws = base.points[inc.index].weights;
            auto it = std::find(ws.begin(), ws.end(), inc.tangent);
            if (it == ws.end()) fail("incidence tangent is not a weight of the point");
            ws.erase(it);
            Weight b = ws[0], cw = ws[1];
            if (std::count(points_to_remove.begin(), points_to_remove.end(), inc.index))
                fail("two incidences at the same isolated point");
            points_to_remove.push_back(inc.index);
            if (b == cw) {
                add_curve(out, 0, {inc.tangent, b}, -1);
                return "eq";
            }
            add_point(out, {inc.tangent, reduce_weight(b - cw, p), cw});
            add_point(out, {inc.tangent, b, reduce_weight(cw - b, p)});
            return "neq";
        }
        case CurveIncidence::At::Curve: {
            if (inc.index >= base.curves.size()) fail("incidence curve index out of range");
            const auto& ws = base.curves[inc.index].weights;
            if (inc.tangent != ws[0] && inc.tangent != ws[1])
                fail("incidence tangent is not a normal weight of the fixed curve");
            Weight other = inc.tangent == ws[0] ? ws[1] : ws[0];
            out.curves[inc.index].d -= 1;
            add_point(out, {inc.tangent, other, negate_weight(other, p)});
            return "cross-curve";
        }
        case CurveIncidence::At::Surface: {
            if (inc.index >= base.surfaces.size()) fail("incidence surface index out of range");
            if (inc.tangent != base.surfaces[inc.index].weight)
                fail("crossing tangent must equal the surface weight");
            // proper transform of the surface: K.N is unchanged
            return "cross-surface";
        }
    }
    return "?";
}

Applied apply_invariant_curve(const Configuration& c, const BlowupCenter& ctr) {
    Applied r{c, ""};
    if (ctr.genus < 0) fail("negative genus");
    if (ctr.orbit) {
        if (!ctr.incidences.empty()) fail("a free orbit of curves has no fixed points");
        ledger_for_curve_center(r.after, ctr.genus, true, false, std::nullopt);
        r.label = ctr.genus == 0 ? "Bl3-a:g0" : "Bl3-a:gpos";
        return r;
    }
    if (ctr.genus == 0 && ctr.incidences.empty())
        fail("a rational invariant curve with nontrivial action has fixed points; none given");
    std::vector<std::size_t> points_to_remove;
    std::vector<std::string> tags;
    for (const auto& inc : ctr.incidences)
        tags.push_back(apply_incidence(r.after, inc, points_to_remove, c));
    std::sort(points_to_remove.begin(), points_to_remove.end(), std::greater<>());
    for (std::size_t idx : points_to_remove)
        r.after.points.erase(r.after.points.begin() + idx);
    ledger_for_curve_center(r.after, ctr.genus, false, false, std::nullopt);
    std::ostringstream os;
    os << (ctr.genus == 0 ? "Bl3-b:g0[" : "Bl3-b:gpos[");
    for (std::size_t i = 0; i < tags.size(); ++i) os << (i ? "," : "") << tags[i];
    os << "]";
    r.label = os.str();
    return r;
}

Applied apply_dim3(const Configuration& c, const BlowupCenter& ctr) {
    const std::int64_t p = c.group.p;
    Applied r{c, ""};
    switch (ctr.kind) {
        case CenterKind::FreeOrbitPoint:
            ledger_points_for_point_blowup(r.after, true);
            r.label = "Bl0-a";
            return r;

        case CenterKind::IsolatedFixedPoint: {
            if (ctr.index >= c.points.size()) fail("point index out of range");
            auto ws = c.points[ctr.index].weights;  // sorted, size 3
            if (ctr.direction &&
                std::find(ws.begin(), ws.end(), *ctr.direction) == ws.end())
                fail("direction selector is not a weight of the point");
            r.after.points.erase(r.after.points.begin() + ctr.index);
            if (ws[0] == ws[2]) {
                SurfaceComponent s;
                s.weight = ws[0];
                s.ruling_genus = 0;
                s.k_dot_n = 3;
                s.tag = kTagPlane;
                r.after.surfaces.push_back(s);
                r.label = "Bl0-b:all-equal";
            } else if (ws[0] == ws[1] || ws[1] == ws[2]) {
                Weight a = ws[0] == ws[1] ? ws[0] : ws[1];
                Weight cw = ws[0] == ws[1] ? ws[2] : ws[0];
                add_curve(r.after, 0, {a, reduce_weight(cw - a, p)}, 0);
                add_point(r.after,
                          {reduce_weight(a - cw, p), reduce_weight(a - cw, p), cw});
                r.label = "Bl0-b:two-equal";
            } else {
                Weight a = ws[0], b = ws[1], cw = ws[2];
                add_point(r.after, {a, reduce_weight(b - a, p), reduce_weight(cw - a, p)});
                add_point(r.after, {reduce_weight(a - b, p), b, reduce_weight(cw - b, p)});
                add_point(r.after, {reduce_weight(a - cw, p), reduce_weight(b - cw, p), cw});
                r.label = "Bl0-b:distinct";
            }
            ledger_points_for_point_blowup(r.after, false);
            return r;
        }

        case CenterKind::PointOnFixedCurve: {
            if (ctr.index >= c.curves.size()) fail("curve index out of range");
            const auto& ws = c.curves[ctr.index].weights;
            r.after.curves[ctr.index].d -= 2;
            if (ws[0] == ws[1]) {
                add_curve(r.after, 0, {ws[0], negate_weight(ws[0], p)}, 0);
                r.label = "pt-on-curve:eq";
            } else {
                add_point(r.after, {negate_weight(ws[0], p), reduce_weight(ws[1] - ws[0], p), ws[0]});
                add_point(r.after, {negate_weight(ws[1], p), reduce_weight(ws[0] - ws[1], p), ws[1]});
                r.label = "pt-on-curve:neq";
            }
            ledger_points_for_point_blowup(r.after, false);
            return r;
        }

        case CenterKind::FixedCurve: {
            if (ctr.index >= c.curves.size()) fail("curve index out of range");
            CurveComponent cur = c.curves[ctr.index];
            r.after.curves.erase(r.after.curves.begin() + ctr.index);
            if (cur.weights[0] == cur.weights[1]) {
                SurfaceComponent s;
                s.weight = cur.weights[0];
                s.ruling_genus = cur.genus;
                s.k_dot_n = 2 - 2 * cur.genus - cur.d;
                s.tag = kTagRuledProduct;
                s.isogeny_label = cur.isogeny_label;
                r.after.surfaces.push_back(s);
                r.label = cur.genus == 0 ? "Bl1-0:eq" : "Bl1-1:eq";
            } else {
                // N = L1 + L2; the section over L_i inherits the other degree
                std::int64_t d1 = ctr.split_d1.value_or(floor_div(Int(cur.d), Int(2)).convert_to<std::int64_t>());
                std::int64_t d2 = cur.d - d1;
                Weight u = cur.weights[0], v = cur.weights[1];
                add_curve(r.after, cur.genus, {reduce_weight(v - u, p), u}, d2, cur.isogeny_label);
                add_curve(r.after, cur.genus, {reduce_weight(u - v, p), v}, d1, cur.isogeny_label);
                r.label = cur.genus == 0 ? "Bl1-0:neq" : "Bl1-1:neq";
            }
            ledger_for_curve_center(r.after, cur.genus, false, true, cur.isogeny_label);
            return r;
        }

        case CenterKind::PointOnFixedSurface: {
            if (ctr.index >= c.surfaces.size()) fail("surface index out of range");
            Weight w = c.surfaces[ctr.index].weight;
            r.after.surfaces[ctr.index].k_dot_n += 1;
            add_point(r.after, {negate_weight(w, p), negate_weight(w, p), w});
            ledger_points_for_point_blowup(r.after, false);
            r.label = "pt-on-surface";
            return r;
        }

        case CenterKind::CurveInFixedSurface: {
            if (ctr.index >= c.surfaces.size()) fail("surface index out of range");
            if (ctr.genus < 0) fail("negative genus");
            Weight w = c.surfaces[ctr.index].weight;
            // adjunction on S: K_S.C = 2g - 2 - C.C
            r.after.surfaces[ctr.index].k_dot_n -= 2 * ctr.genus - 2 - ctr.self_intersection;
            add_curve(r.after, ctr.genus, {w, negate_weight(w, p)}, ctr.self_intersection,
                      ctr.isogeny_label);
            ledger_for_curve_center(r.after, ctr.genus, false, true, ctr.isogeny_label);
            r.label = ctr.genus == 0 ? "Bl2-0" : "Bl2-1";
            return r;
        }

        case CenterKind::InvariantCurve:
            return apply_invariant_curve(c, ctr);

        case CenterKind::CurveTransverseToFixedCurve: {
            if (ctr.index >= c.curves.size()) fail("curve index out of range");
            BlowupCenter low;
            low.kind = CenterKind::InvariantCurve;
            low.genus = ctr.genus;
            Weight t = ctr.tangent.value_or(c.curves[ctr.index].weights[0]);
            low.incidences.push_back({CurveIncidence::At::Curve, ctr.index, t});
            return apply_invariant_curve(c, low);
        }

        case CenterKind::CurveTransverseToFixedSurface: {
            if (ctr.index >= c.surfaces.size()) fail("surface index out of range");
            if (ctr.intersections < 1) fail("intersection count must be >= 1");
            BlowupCenter low;
            low.kind = CenterKind::InvariantCurve;
            low.genus = ctr.genus;
            for (std::int64_t i = 0; i < ctr.intersections; ++i)
                low.incidences.push_back(
                    {CurveIncidence::At::Surface, ctr.index, c.surfaces[ctr.index].weight});
            return apply_invariant_curve(c, low);
        }
    }
    fail("unhandled center kind");
    return r;
}

}  // namespace

std::map<std::string, std::int64_t> evaluate_applicable(const Configuration& c,
                                                        const std::vector<std::int64_t>& genera,
                                                        const std::vector<std::string>& labels) {
    std::map<std::string, std::int64_t> m;
    if (c.dim == 2 && c.group.p == 2) m["I"] = invariant_I(c);
    if (c.dim == 3 && c.group.p == 3) m["J"] = invariant_J(c);
    if (c.dim == 3 && c.group.p == 2) m["K"] = invariant_K(c);
    if (c.dim == 3) {
        for (std::int64_t g : genera) m["combined:" + std::to_string(g)] = combined_invariant(c, g);
        for (const auto& l : labels) m["fine:" + l] = fine_invariant(c, l);
    }
    return m;
}

namespace {

void collect_delta_keys(const Configuration& c, std::set<std::int64_t>& genera,
                        std::set<std::string>& labels) {
    for (const auto& cc : c.curves) {
        if (cc.genus >= 2) genera.insert(cc.genus);
        if (cc.isogeny_label) labels.insert(*cc.isogeny_label);
    }
    for (const auto& s : c.surfaces) {
        if (s.ruling_genus >= 2) genera.insert(s.ruling_genus);
        if (s.isogeny_label) labels.insert(*s.isogeny_label);
    }
    for (const auto& a : c.atoms)
        if (a.mt_label) labels.insert(*a.mt_label);
}

}  // namespace

BlowupReport blowup(const Configuration& c, const BlowupCenter& center) {
    require_valid(c);
    Applied applied = c.dim == 2 ? apply_dim2(c, center) : apply_dim3(c, center);
    auto violations = validate(applied.after);
    if (!violations.empty())
        throw std::logic_error("blowup produced an invalid configuration (rule bug): " +
                               violations.front());
    BlowupReport rep;
    rep.case_label = applied.label;

    std::set<std::int64_t> genera{2};
    std::set<std::string> labels;
    collect_delta_keys(c, genera, labels);
    collect_delta_keys(applied.after, genera, labels);
    if (center.genus >= 2) genera.insert(center.genus);
    std::vector<std::int64_t> gv(genera.begin(), genera.end());
    std::vector<std::string> lv(labels.begin(), labels.end());
    auto before_vals = evaluate_applicable(c, gv, lv);
    auto after_vals = evaluate_applicable(applied.after, gv, lv);
    for (const auto& [k, v] : after_vals) rep.deltas[k] = v - before_vals.at(k);

    rep.before = c;
    rep.after = std::move(applied.after);
    return rep;
}

std::vector<BlowupCenter> admissible_centers(const Configuration& c) {
    require_valid(c);
    std::vector<BlowupCenter> out;
    auto push = [&](BlowupCenter ctr) { out.push_back(std::move(ctr)); };

    {
        BlowupCenter ctr;
        ctr.kind = CenterKind::FreeOrbitPoint;
        push(ctr);
    }
    if (c.dim == 3) {
        for (std::int64_t g : {0, 1, 2}) {
            BlowupCenter ctr;
            ctr.kind = CenterKind::InvariantCurve;
            ctr.orbit = true;
            ctr.genus = g;
            push(ctr);
        }
    }
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        BlowupCenter ctr;
        ctr.kind = CenterKind::IsolatedFixedPoint;
        ctr.index = i;
        push(ctr);
    }
    for (std::size_t j = 0; j < c.curves.size(); ++j) {
        BlowupCenter ctr;
        ctr.kind = CenterKind::PointOnFixedCurve;
        ctr.index = j;
        push(ctr);
    }
    if (c.dim == 2) return out;

    for (std::size_t j = 0; j < c.curves.size(); ++j) {
        BlowupCenter ctr;
        ctr.kind = CenterKind::FixedCurve;
        ctr.index = j;
        push(ctr);
        if (c.curves[j].weights[0] != c.curves[j].weights[1] && c.curves[j].d != 0) {
            ctr.split_d1 = 0;
            push(ctr);
        }
    }
    for (std::size_t s = 0; s < c.surfaces.size(); ++s) {
        BlowupCenter ctr;
        ctr.kind = CenterKind::PointOnFixedSurface;
        ctr.index = s;
        push(ctr);
    }
    for (std::size_t s = 0; s < c.surfaces.size(); ++s) {
        std::set<std::pair<std::int64_t, std::optional<std::string>>> genera;
        for (std::int64_t g : {0, 1, 2, 3}) genera.insert({g, std::nullopt});
        for (const auto& cc : c.curves)
            if (cc.genus >= 1) genera.insert({cc.genus, cc.isogeny_label});
        for (const auto& [g, label] : genera)
            for (std::int64_t cc : {-1, 0, 1}) {
                BlowupCenter ctr;
                ctr.kind = CenterKind::CurveInFixedSurface;
                ctr.index = s;
                ctr.genus = g;
                ctr.self_intersection = cc;
                ctr.isogeny_label = label;
                push(ctr);
            }
    }
    for (std::size_t j = 0; j < c.curves.size(); ++j) {
        std::set<Weight> tangents(c.curves[j].weights.begin(), c.curves[j].weights.end());
        for (Weight t : tangents)
            for (std::int64_t g : {0, 1}) {
                BlowupCenter ctr;
                ctr.kind = CenterKind::CurveTransverseToFixedCurve;
                ctr.index = j;
                ctr.tangent = t;
                ctr.genus = g;
                push(ctr);
            }
    }
    for (std::size_t s = 0; s < c.surfaces.size(); ++s)
        for (std::int64_t k : {1, 2, 3})
            for (std::int64_t g : {0, 1}) {
                BlowupCenter ctr;
                ctr.kind = CenterKind::CurveTransverseToFixedSurface;
                ctr.index = s;
                ctr.intersections = k;
                ctr.genus = g;
                push(ctr);
            }
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        std::set<Weight> tangents(c.points[i].weights.begin(), c.points[i].weights.end());
        for (Weight t : tangents)
            for (std::int64_t g : {0, 1}) {
                BlowupCenter ctr;
                ctr.kind = CenterKind::InvariantCurve;
                ctr.genus = g;
                ctr.incidences.push_back({CurveIncidence::At::Point, i, t});
                push(ctr);
            }
    }
    return out;
}

}  // namespace ei
