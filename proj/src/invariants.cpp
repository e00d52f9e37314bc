#include "ei/invariants.hpp"

#include <stdexcept>

namespace ei {

namespace {

std::string weight_list(const std::vector<Weight>& ws) {
    std::string s = "(";
    for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? "," : "") + std::to_string(ws[i]);
    return s + ")";
}

void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

std::int64_t sum_terms(InvariantBreakdown& b) {
    b.total = 0;
    for (const auto& t : b.terms) b.total += t.value;
    return b.total;
}

}  // namespace

InvariantBreakdown invariant_I_terms(const Configuration& c) {
    require(c.dim == 2, "invariant I requires dim = 2");
    require(c.group.p == 2, "invariant I requires p = 2");
    InvariantBreakdown b;
    for (std::size_t i = 0; i < c.points.size(); ++i)
        b.terms.push_back({"point " + std::to_string(i) + " " + weight_list(c.points[i].weights) +
                               ": chi 1",
                           1});
    for (std::size_t i = 0; i < c.curves.size(); ++i) {
        const auto& cc = c.curves[i];
        std::int64_t v = (2 - 2 * cc.genus) + cc.d;
        b.terms.push_back({"curve " + std::to_string(i) + " genus " + std::to_string(cc.genus) +
                               " deg " + std::to_string(cc.d) + ": (2-2g) + deg = " +
                               std::to_string(v),
                           v});
    }
    sum_terms(b);
    return b;
}

std::int64_t invariant_I(const Configuration& c) { return invariant_I_terms(c).total; }

InvariantBreakdown invariant_J_terms(const Configuration& c) {
    require(c.dim == 3, "invariant J requires dim = 3");
    require(c.group.p == 3, "invariant J requires p = 3");
    InvariantBreakdown b;
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        int plus = 0;
        for (Weight w : c.points[i].weights) plus += (w == 1);
        std::int64_t v = (plus == 1 || plus == 2) ? 1 : 0;
        b.terms.push_back({"point " + std::to_string(i) + " " + weight_list(c.points[i].weights) +
                               ": " + std::to_string(v),
                           v});
    }
    for (std::size_t i = 0; i < c.curves.size(); ++i) {
        const auto& cc = c.curves[i];
        bool equal = cc.weights[0] == cc.weights[1];
        std::int64_t v = equal ? (1 - cc.genus + cc.d) : (2 - 2 * cc.genus + cc.d);
        b.terms.push_back({"curve " + std::to_string(i) + " " + weight_list(cc.weights) +
                               " genus " + std::to_string(cc.genus) + " d " +
                               std::to_string(cc.d) + ": " +
                               (equal ? "1 - g + d = " : "2 - 2g + d = ") + std::to_string(v),
                           v});
    }
    for (std::size_t i = 0; i < c.surfaces.size(); ++i) {
        const auto& s = c.surfaces[i];
        std::int64_t v = 3 - 3 * s.ruling_genus - s.k_dot_n;
        b.terms.push_back({"surface " + std::to_string(i) + " genus " +
                               std::to_string(s.ruling_genus) + " K.N " +
                               std::to_string(s.k_dot_n) + ": 3 - 3g - K.N = " +
                               std::to_string(v),
                           v});
    }
    sum_terms(b);
    return b;
}

std::int64_t invariant_J(const Configuration& c) { return invariant_J_terms(c).total; }

InvariantBreakdown invariant_K_terms(const Configuration& c) {
    require(c.dim == 3, "invariant K requires dim = 3");
    require(c.group.p == 2, "invariant K requires p = 2");
    InvariantBreakdown b;
    for (std::size_t i = 0; i < c.points.size(); ++i)
        b.terms.push_back({"point " + std::to_string(i) + ": 1", 1});
    for (std::size_t i = 0; i < c.curves.size(); ++i) {
        const auto& cc = c.curves[i];
        std::int64_t v = 2 - 2 * cc.genus + cc.d;
        b.terms.push_back({"curve " + std::to_string(i) + " genus " + std::to_string(cc.genus) +
                               " d " + std::to_string(cc.d) + ": 2 - 2g + d = " +
                               std::to_string(v),
                           v});
    }
    for (std::size_t i = 0; i < c.surfaces.size(); ++i) {
        const auto& s = c.surfaces[i];
        std::int64_t v = 4 - 4 * s.ruling_genus - s.k_dot_n;
        b.terms.push_back({"surface " + std::to_string(i) + " genus " +
                               std::to_string(s.ruling_genus) + " K.N " +
                               std::to_string(s.k_dot_n) + ": 4 - 4g - K.N = " +
                               std::to_string(v),
                           v});
    }
    sum_terms(b);
    return b;
}

std::int64_t invariant_K(const Configuration& c) { return invariant_K_terms(c).total; }

InvariantBreakdown combined_invariant_terms(const Configuration& c, std::int64_t g) {
    require(c.dim == 3, "combined invariant requires dim = 3");
    require(g >= 2, "combined invariant requires g >= 2");
    InvariantBreakdown b;
    LaurentPoly want = curve_hodge_poly(g);
    for (std::size_t i = 0; i < c.curves.size(); ++i)
        if (c.curves[i].genus == g)
            b.terms.push_back({"curve " + std::to_string(i) + " of genus " + std::to_string(g) +
                                   ": -1",
                               -1});
    for (std::size_t i = 0; i < c.surfaces.size(); ++i)
        if (c.surfaces[i].tag == kTagRuledProduct && c.surfaces[i].ruling_genus == g)
            b.terms.push_back({"surface " + std::to_string(i) + " ~ C x P1, genus " +
                                   std::to_string(g) + ": -2",
                               -2});
    for (std::size_t i = 0; i < c.atoms.size(); ++i)
        if (c.atoms[i].g_action_trivial && c.atoms[i].hodge_poly == want)
            b.terms.push_back({"atom " + std::to_string(i) + " with P = " + want.str() +
                                   ", trivial action: +1",
                               1});
    sum_terms(b);
    return b;
}

std::int64_t combined_invariant(const Configuration& c, std::int64_t g) {
    return combined_invariant_terms(c, g).total;
}

InvariantBreakdown fine_invariant_terms(const Configuration& c, const std::string& label) {
    require(c.dim == 3, "fine invariant requires dim = 3");
    InvariantBreakdown b;
    for (std::size_t i = 0; i < c.curves.size(); ++i)
        if (c.curves[i].isogeny_label == label)
            b.terms.push_back({"curve " + std::to_string(i) + " labelled " + label + ": -1", -1});
    for (std::size_t i = 0; i < c.surfaces.size(); ++i)
        if (c.surfaces[i].tag == kTagRuledProduct && c.surfaces[i].isogeny_label == label)
            b.terms.push_back({"surface " + std::to_string(i) + " ~ C x P1 labelled " + label +
                                   ": -2",
                               -2});
    for (std::size_t i = 0; i < c.atoms.size(); ++i)
        if (c.atoms[i].g_action_trivial && c.atoms[i].mt_label == label)
            b.terms.push_back({"atom " + std::to_string(i) + " labelled " + label +
                                   ", trivial action: +1",
                               1});
    sum_terms(b);
    return b;
}

std::int64_t fine_invariant(const Configuration& c, const std::string& label) {
    return fine_invariant_terms(c, label).total;
}

bool hodge_coeff_obstruction(const LaurentPoly& p_total, const LaurentPoly& p_fixed,
                             std::int64_t d) {
    require(d >= 2, "hodge coefficient obstruction requires d >= 2");
    return p_fixed.coeff(d - 2) > p_total.coeff(d - 2);
}

}  // namespace ei
