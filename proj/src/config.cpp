#include "ei/config.hpp"

#include <algorithm>
#include <stdexcept>

namespace ei {

namespace {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Weight reduce_weight(std::int64_t w, std::int64_t p) {
    std::int64_t r = w % p;
    if (r < 0) r += p;
    return r;
}

Weight negate_weight(Weight w, std::int64_t p) { return reduce_weight(-w, p); }

std::vector<std::string> validate(const Configuration& c) {
    std::vector<std::string> v;
    if (!is_prime(c.group.p)) v.push_back("group order p = " + std::to_string(c.group.p) + " is not prime");
    if (c.dim != 2 && c.dim != 3) v.push_back("dim must be 2 or 3");
    const std::int64_t p = c.group.p;
    auto check_weights = [&](const std::vector<Weight>& ws, std::size_t want, const std::string& who) {
        if (ws.size() != want)
            v.push_back(who + ": expected " + std::to_string(want) + " normal weights, got " +
                        std::to_string(ws.size()));
        for (Weight w : ws) {
            if (w <= 0 || w >= p) v.push_back(who + ": weight " + std::to_string(w) + " not in 1.." + std::to_string(p - 1));
        }
    };
    for (std::size_t i = 0; i < c.points.size(); ++i)
        check_weights(c.points[i].weights, static_cast<std::size_t>(c.dim), "point " + std::to_string(i));
    for (std::size_t i = 0; i < c.curves.size(); ++i) {
        const auto& cc = c.curves[i];
        if (cc.genus < 0) v.push_back("curve " + std::to_string(i) + ": negative genus");
        check_weights(cc.weights, static_cast<std::size_t>(c.dim) - 1, "curve " + std::to_string(i));
    }
    if (c.dim == 2 && !c.surfaces.empty())
        v.push_back("dim-2 configuration contains surface components");
    for (std::size_t i = 0; i < c.surfaces.size(); ++i) {
        const auto& s = c.surfaces[i];
        if (s.ruling_genus < 0) v.push_back("surface " + std::to_string(i) + ": negative ruling genus");
        if (s.weight <= 0 || s.weight >= p)
            v.push_back("surface " + std::to_string(i) + ": zero normal weight");
    }
    for (std::size_t i = 0; i < c.atoms.size(); ++i) {
        const auto& a = c.atoms[i];
        if (!a.hodge_poly.all_coeffs_nonnegative())
            v.push_back("atom " + std::to_string(i) + ": negative Hodge coefficient");
        if (!(a.rho_g <= a.rho && a.rho <= a.hodge_poly.coefficient_sum()))
            v.push_back("atom " + std::to_string(i) + ": requires rho_g <= rho <= sum of Hodge coefficients");
    }
    return v;
}

void require_valid(const Configuration& c) {
    auto v = validate(c);
    if (!v.empty()) {
        std::string msg = "invalid configuration:";
        for (const auto& s : v) msg += "\n  " + s;
        throw std::invalid_argument(msg);
    }
}

std::int64_t euler_characteristic_fixed_locus(const Configuration& c) {
    if (!c.surfaces.empty())
        throw std::invalid_argument("euler characteristic with surface components present");
    std::int64_t chi = static_cast<std::int64_t>(c.points.size());
    for (const auto& cc : c.curves) chi += 2 - 2 * cc.genus;
    return chi;
}

std::int64_t genus_cyclic_cover(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    return 3 * k - 2;
}

}  // namespace ei
