#include "ei/atoms.hpp"

#include <sstream>
#include <stdexcept>

namespace ei {

AtomRecord trivial_point_atom() {
    AtomRecord a;
    a.hodge_poly = LaurentPoly::constant(1);
    a.rho = 1;
    a.rho_g = 1;
    a.g_action_trivial = true;
    return a;
}

AtomRecord free_orbit_point_atom(std::int64_t p) {
    AtomRecord a;
    a.hodge_poly = LaurentPoly::constant(p);
    a.rho = p;
    a.rho_g = 1;
    a.g_action_trivial = false;
    return a;
}

AtomRecord trivial_curve_atom(std::int64_t genus, const std::optional<std::string>& label) {
    AtomRecord a;
    a.hodge_poly = curve_hodge_poly(genus);
    a.rho = 2;
    a.rho_g = 2;
    a.g_action_trivial = true;
    a.mt_label = label;
    return a;
}

AtomRecord nontrivial_curve_atom(std::int64_t genus) {
    AtomRecord a;
    a.hodge_poly = curve_hodge_poly(genus);
    a.rho = 2;
    a.rho_g = 2;
    a.g_action_trivial = false;
    return a;
}

AtomRecord free_orbit_curve_atom(std::int64_t p, std::int64_t genus) {
    AtomRecord a;
    a.hodge_poly = curve_hodge_poly(genus).scaled(p);
    a.rho = 2 * p;
    a.rho_g = 2;
    a.g_action_trivial = false;
    return a;
}

const AtomRecord* AtomCatalog::find(const std::string& name) const {
    for (const auto& [n, rec] : entries)
        if (n == name) return &rec;
    return nullptr;
}

std::vector<std::pair<std::string, AtomRecord>> AtomCatalog::point_entries() const {
    std::vector<std::pair<std::string, AtomRecord>> out;
    for (const auto& e : entries)
        if (e.second.hodge_poly.terms().size() == 1 && e.second.hodge_poly.coeff(0) != 0)
            out.push_back(e);
    return out;
}

AtomCatalog catalog_low_dim(std::int64_t p, std::int64_t max_genus) {
    if (p < 2) throw std::invalid_argument("p must be a prime >= 2");
    AtomCatalog cat;
    cat.entries.emplace_back("point", trivial_point_atom());
    cat.entries.emplace_back(p == 2 ? "two points" : std::to_string(p) + " points",
                             free_orbit_point_atom(p));
    for (std::int64_t g = 1; g <= max_genus; ++g) {
        std::string base = g == 1 ? "elliptic curve" : "genus-" + std::to_string(g) + " curve";
        cat.entries.emplace_back(base, trivial_curve_atom(g, std::nullopt));
        cat.entries.emplace_back(base + " (nontrivial action)", nontrivial_curve_atom(g));
        cat.entries.emplace_back("free orbit of " + base, free_orbit_curve_atom(p, g));
    }
    return cat;
}

namespace {

std::string vec_str(const std::vector<Int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + ")";
}

bool nonneg(const std::vector<Int>& v) {
    for (const Int& a : v)
        if (a < 0) return false;
    return true;
}

}  // namespace

FeasibilityResult feasibility(const std::vector<Int>& target,
                              const std::vector<std::vector<Int>>& basis,
                              const std::vector<std::pair<std::size_t, Int>>& forced) {
    if (basis.empty()) throw std::invalid_argument("basis must be nonempty");
    const std::size_t dim = target.size();
    for (const auto& b : basis) {
        if (b.size() != dim) throw std::invalid_argument("basis vector dimension mismatch");
        bool has_positive = false;
        for (const Int& a : b) {
            if (a < 0)
                throw std::invalid_argument("basis vectors must be componentwise nonnegative");
            if (a > 0) has_positive = true;
        }
        if (!has_positive)
            throw std::invalid_argument("unbounded search direction: basis vector has no positive component");
    }
    std::vector<Int> minima(basis.size(), Int(0));
    for (const auto& [idx, cnt] : forced) {
        if (idx >= basis.size()) throw std::invalid_argument("forced index out of range");
        if (cnt < 0) throw std::invalid_argument("forced minimum must be nonnegative");
        minima[idx] += cnt;
    }
    std::vector<Int> rem = target;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) rem[j] -= minima[i] * basis[i][j];
    if (!nonneg(rem)) {
        FeasibilityResult r;
        r.feasible = false;
        r.certificate = "target not componentwise above the forced contributions";
        return r;
    }

    // plain bounded enumeration; instance sizes are tiny by construction
    std::vector<Int> bounds(basis.size(), Int(0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Int bound = -1;
        for (std::size_t j = 0; j < dim; ++j) {
            if (basis[i][j] <= 0) continue;
            Int b = rem[j] / basis[i][j];
            if (bound < 0 || b < bound) bound = b;
        }
        bounds[i] = bound < 0 ? Int(0) : bound;
    }
    std::vector<Int> counts(basis.size(), Int(0));
    // iterative odometer over 0..bounds[i]
    for (;;) {
        std::vector<Int> acc(dim, Int(0));
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < dim; ++j) acc[j] += counts[i] * basis[i][j];
        if (acc == rem) {
            FeasibilityResult r;
            r.feasible = true;
            r.witness.resize(basis.size());
            for (std::size_t i = 0; i < basis.size(); ++i) r.witness[i] = counts[i] + minima[i];
            return r;
        }
        std::size_t i = basis.size();
        while (i > 0) {
            --i;
            if (counts[i] < bounds[i]) {
                ++counts[i];
                break;
            }
            counts[i] = 0;
            if (i == 0) {
                FeasibilityResult r;
                r.feasible = false;
                std::ostringstream os;
                os << "exhausted all combinations with";
                for (std::size_t t = 0; t < basis.size(); ++t)
                    os << (t ? "," : "") << " x" << (t + 1) << " <= "
                       << Int(bounds[t] + minima[t]).str();
                r.certificate = os.str();
                return r;
            }
        }
    }
}

ObstructionReport obstruction_report(const std::vector<AtomRecord>& variety_atoms,
                                     const AtomCatalog& catalog,
                                     const std::vector<ForcedAtom>& forced) {
    auto points = catalog.point_entries();
    if (points.empty()) throw std::invalid_argument("catalog has no point atoms");
    std::vector<std::vector<Int>> basis;
    std::string basis_desc;
    for (const auto& [name, rec] : points) {
        basis.push_back({rec.rho, rec.rho_g});
        basis_desc += (basis_desc.empty() ? "" : ", ") + std::string("(") + rec.rho.str() + "," +
                      rec.rho_g.str() + ") [" + name + "]";
    }

    ObstructionReport rep;
    for (std::size_t i = 0; i < variety_atoms.size(); ++i) {
        AtomVerdict v;
        v.atom_index = i;
        Int rho = variety_atoms[i].rho;
        Int rho_g = variety_atoms[i].rho_g;
        std::ostringstream story;
        story << "atom " << i << ": (rho, rho^G) = (" << rho.str() << "," << rho_g.str() << ")";
        for (const auto& f : forced) {
            if (f.atom_index != i) continue;
            rho -= f.count * f.rho;
            rho_g -= f.count * f.rho_g;
            story << " minus " << f.count.str() << " x (" << f.rho.str() << "," << f.rho_g.str()
                  << ")" << (f.name.empty() ? "" : " [" + f.name + "]");
        }
        v.remaining = {rho, rho_g};
        story << " leaves (" << rho.str() << "," << rho_g.str() << ")";
        if (rho < 0 || rho_g < 0) {
            v.kind = AtomVerdict::Kind::Inconsistent;
            rep.any_inconsistent = true;
            story << "; forced subtraction went negative: inconsistent input";
        } else {
            v.feas = feasibility(v.remaining, basis);
            if (v.feas.feasible) {
                v.kind = AtomVerdict::Kind::Unobstructed;
                story << "; decomposes over point atoms " << basis_desc << " with witness "
                      << vec_str(v.feas.witness);
            } else {
                v.kind = AtomVerdict::Kind::Obstructed;
                rep.any_obstructed = true;
                story << "; impossible to write (" << rho.str() << "," << rho_g.str()
                      << ") as a nonnegative combination of " << basis_desc << " ("
                      << v.feas.certificate << ")";
            }
        }
        v.narrative = story.str();
        rep.verdicts.push_back(std::move(v));
    }
    return rep;
}

}  // namespace ei
