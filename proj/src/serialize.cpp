#include "ei/serialize.hpp"

#include <fstream>

namespace ei {

namespace {

const Int kJsonSafe = Int(1) << 53;

void check_version(const Json& j, const char* what) {
    if (!j.is_object()) throw std::invalid_argument(std::string(what) + ": expected a JSON object");
    if (j.contains("format_version") && j.at("format_version").get<int>() != kFormatVersion)
        throw std::invalid_argument(std::string(what) + ": unsupported format_version");
}

std::int64_t small_int(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string(what) + ": expected an integer");
    return j.get<std::int64_t>();
}

}  // namespace

Json int_to_json(const Int& v) {
    if (abs_int(v) < kJsonSafe) return Json(v.convert_to<std::int64_t>());
    return Json(v.str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

Json atom_to_json(const AtomRecord& a) {
    Json poly = Json::object();
    for (const auto& [k, c] : a.hodge_poly.terms()) poly[std::to_string(k)] = int_to_json(c);
    Json j{{"hodge_poly", poly},
           {"rho", int_to_json(a.rho)},
           {"rho_g", int_to_json(a.rho_g)},
           {"g_action_trivial", a.g_action_trivial}};
    if (a.mt_label) j["mt_label"] = *a.mt_label;
    return j;
}

AtomRecord atom_from_json(const Json& j) {
    AtomRecord a;
    for (const auto& [k, v] : j.at("hodge_poly").items())
        a.hodge_poly.add_term(std::stoll(k), int_from_json(v));
    a.rho = int_from_json(j.at("rho"));
    a.rho_g = int_from_json(j.at("rho_g"));
    a.g_action_trivial = j.at("g_action_trivial").get<bool>();
    if (j.contains("mt_label") && !j.at("mt_label").is_null())
        a.mt_label = j.at("mt_label").get<std::string>();
    return a;
}

Json config_to_json(const Configuration& c) {
    Json j;
    j["format_version"] = kFormatVersion;
    j["group"] = Json{{"p", c.group.p}};
    j["dim"] = c.dim;
    j["points"] = Json::array();
    for (const auto& pt : c.points) j["points"].push_back(Json{{"weights", pt.weights}});
    j["curves"] = Json::array();
    for (const auto& cc : c.curves) {
        Json cj{{"genus", cc.genus}, {"weights", cc.weights}, {"d", cc.d}};
        if (cc.isogeny_label) cj["isogeny_label"] = *cc.isogeny_label;
        j["curves"].push_back(cj);
    }
    j["surfaces"] = Json::array();
    for (const auto& s : c.surfaces) {
        Json sj{{"weight", s.weight},
                {"ruling_genus", s.ruling_genus},
                {"k_dot_n", s.k_dot_n},
                {"tag", s.tag}};
        if (s.isogeny_label) sj["isogeny_label"] = *s.isogeny_label;
        j["surfaces"].push_back(sj);
    }
    j["atoms"] = Json::array();
    for (const auto& a : c.atoms) j["atoms"].push_back(atom_to_json(a));
    return j;
}

Configuration config_from_json(const Json& j) {
    check_version(j, "configuration");
    Configuration c;
    c.group.p = small_int(j.at("group").at("p"), "group.p");
    c.dim = static_cast<int>(small_int(j.at("dim"), "dim"));
    for (const auto& pj : j.value("points", Json::array())) {
        PointComponent pt;
        for (const auto& w : pj.at("weights")) pt.weights.push_back(small_int(w, "weight"));
        std::sort(pt.weights.begin(), pt.weights.end());
        c.points.push_back(std::move(pt));
    }
    for (const auto& cj : j.value("curves", Json::array())) {
        CurveComponent cc;
        cc.genus = small_int(cj.at("genus"), "genus");
        for (const auto& w : cj.at("weights")) cc.weights.push_back(small_int(w, "weight"));
        std::sort(cc.weights.begin(), cc.weights.end());
        cc.d = small_int(cj.at("d"), "d");
        if (cj.contains("isogeny_label") && !cj.at("isogeny_label").is_null())
            cc.isogeny_label = cj.at("isogeny_label").get<std::string>();
        c.curves.push_back(std::move(cc));
    }
    for (const auto& sj : j.value("surfaces", Json::array())) {
        SurfaceComponent s;
        s.weight = small_int(sj.at("weight"), "weight");
        s.ruling_genus = small_int(sj.at("ruling_genus"), "ruling_genus");
        s.k_dot_n = small_int(sj.at("k_dot_n"), "k_dot_n");
        s.tag = sj.at("tag").get<std::string>();
        if (sj.contains("isogeny_label") && !sj.at("isogeny_label").is_null())
            s.isogeny_label = sj.at("isogeny_label").get<std::string>();
        c.surfaces.push_back(std::move(s));
    }
    for (const auto& aj : j.value("atoms", Json::array())) c.atoms.push_back(atom_from_json(aj));
    return c;
}

Configuration load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j = Json::parse(in);
    return config_from_json(j);
}

void save_config(const Configuration& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << dump_json(config_to_json(c));
}

Json center_to_json(const BlowupCenter& c) {
    Json j{{"kind", center_kind_name(c.kind)}};
    switch (c.kind) {
        case CenterKind::FreeOrbitPoint: break;
        case CenterKind::IsolatedFixedPoint:
            j["index"] = c.index;
            if (c.direction) j["direction"] = *c.direction;
            break;
        case CenterKind::PointOnFixedCurve:
        case CenterKind::PointOnFixedSurface: j["index"] = c.index; break;
        case CenterKind::FixedCurve:
            j["index"] = c.index;
            if (c.split_d1) j["split_d1"] = *c.split_d1;
            break;
        case CenterKind::InvariantCurve: {
            j["orbit"] = c.orbit;
            j["genus"] = c.genus;
            Json incs = Json::array();
            for (const auto& inc : c.incidences) {
                const char* at = inc.at == CurveIncidence::At::Point     ? "point"
                                 : inc.at == CurveIncidence::At::Curve   ? "curve"
                                                                         : "surface";
                incs.push_back(Json{{"at", at}, {"index", inc.index}, {"tangent", inc.tangent}});
            }
            j["incidences"] = incs;
            break;
        }
        case CenterKind::CurveTransverseToFixedCurve:
            j["index"] = c.index;
            j["genus"] = c.genus;
            if (c.tangent) j["tangent"] = *c.tangent;
            break;
        case CenterKind::CurveTransverseToFixedSurface:
            j["index"] = c.index;
            j["genus"] = c.genus;
            j["intersections"] = c.intersections;
            break;
        case CenterKind::CurveInFixedSurface:
            j["index"] = c.index;
            j["genus"] = c.genus;
            j["self_intersection"] = c.self_intersection;
            j["normal_dot"] = c.normal_dot;
            if (c.isogeny_label) j["isogeny_label"] = *c.isogeny_label;
            break;
    }
    return j;
}

BlowupCenter center_from_json(const Json& j) {
    BlowupCenter c;
    c.kind = center_kind_from_name(j.at("kind").get<std::string>());
    if (j.contains("index")) c.index = j.at("index").get<std::size_t>();
    if (j.contains("direction")) c.direction = small_int(j.at("direction"), "direction");
    if (j.contains("orbit")) c.orbit = j.at("orbit").get<bool>();
    if (j.contains("genus")) c.genus = small_int(j.at("genus"), "genus");
    if (j.contains("tangent")) c.tangent = small_int(j.at("tangent"), "tangent");
    if (j.contains("intersections"))
        c.intersections = small_int(j.at("intersections"), "intersections");
    if (j.contains("self_intersection"))
        c.self_intersection = small_int(j.at("self_intersection"), "self_intersection");
    if (j.contains("normal_dot")) c.normal_dot = small_int(j.at("normal_dot"), "normal_dot");
    if (j.contains("split_d1")) c.split_d1 = small_int(j.at("split_d1"), "split_d1");
    if (j.contains("isogeny_label") && !j.at("isogeny_label").is_null())
        c.isogeny_label = j.at("isogeny_label").get<std::string>();
    for (const auto& ij : j.value("incidences", Json::array())) {
        CurveIncidence inc;
        std::string at = ij.at("at").get<std::string>();
        inc.at = at == "point"   ? CurveIncidence::At::Point
                 : at == "curve" ? CurveIncidence::At::Curve
                 : at == "surface"
                     ? CurveIncidence::At::Surface
                     : throw std::invalid_argument("incidence at: point, curve, or surface");
        inc.index = ij.at("index").get<std::size_t>();
        if (ij.contains("tangent")) inc.tangent = small_int(ij.at("tangent"), "tangent");
        c.incidences.push_back(inc);
    }
    return c;
}

Json class_to_json(const GroupElementClass& cls) {
    Json free = Json::array(), torsion = Json::array();
    for (const Int& a : cls.free_part) free.push_back(int_to_json(a));
    for (const Int& a : cls.torsion_part) torsion.push_back(int_to_json(a));
    return Json{{"free", free}, {"torsion", torsion}};
}

Json blowup_report_to_json(const BlowupReport& r) {
    Json deltas = Json::object();
    for (const auto& [k, v] : r.deltas) deltas[k] = v;
    return Json{{"format_version", kFormatVersion},
                {"case_label", r.case_label},
                {"deltas", deltas},
                {"before", config_to_json(r.before)},
                {"after", config_to_json(r.after)}};
}

Json fuzz_report_to_json(const FuzzReport& r) {
    Json j{{"format_version", kFormatVersion},
           {"seed", r.seed},
           {"steps_requested", r.steps_requested},
           {"steps_applied", r.steps_applied},
           {"checks", r.checks},
           {"zero_drift", r.ok()}};
    Json hist = Json::object();
    for (const auto& [k, v] : r.case_histogram) hist[k] = v;
    j["case_histogram"] = hist;
    Json init = Json::object(), fin = Json::object();
    for (const auto& [k, v] : r.initial_values) init[k] = v;
    for (const auto& [k, v] : r.final_values) fin[k] = v;
    j["initial_values"] = init;
    j["final_values"] = fin;
    if (r.drift) {
        j["drift"] = Json{{"step", r.drift->step},
                          {"check", r.drift->check},
                          {"before_value", r.drift->before_value},
                          {"after_value", r.drift->after_value},
                          {"report", blowup_report_to_json(r.drift->report)}};
    } else {
        j["drift"] = nullptr;
    }
    return j;
}

Json catalog_to_json(std::int64_t p, const AtomCatalog& cat) {
    Json entries = Json::array();
    for (const auto& [name, rec] : cat.entries)
        entries.push_back(Json{{"name", name}, {"atom", atom_to_json(rec)}});
    return Json{{"format_version", kFormatVersion}, {"p", p}, {"entries", entries}};
}

Json obstruction_report_to_json(const ObstructionReport& r) {
    Json verdicts = Json::array();
    for (const auto& v : r.verdicts) {
        Json vj{{"atom_index", v.atom_index},
                {"verdict", v.kind == AtomVerdict::Kind::Unobstructed ? "unobstructed"
                            : v.kind == AtomVerdict::Kind::Obstructed ? "obstructed"
                                                                      : "inconsistent"},
                {"narrative", v.narrative}};
        Json rem = Json::array();
        for (const Int& a : v.remaining) rem.push_back(int_to_json(a));
        vj["remaining"] = rem;
        if (v.kind == AtomVerdict::Kind::Unobstructed) {
            Json w = Json::array();
            for (const Int& a : v.feas.witness) w.push_back(int_to_json(a));
            vj["witness"] = w;
        } else if (v.kind == AtomVerdict::Kind::Obstructed) {
            vj["certificate"] = v.feas.certificate;
        }
        verdicts.push_back(vj);
    }
    return Json{{"format_version", kFormatVersion},
                {"verdicts", verdicts},
                {"any_obstructed", r.any_obstructed},
                {"any_inconsistent", r.any_inconsistent}};
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ei
