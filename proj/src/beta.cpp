#include "ei/beta.hpp"

namespace ei {

Presentation beta_presentation(const Configuration& c, std::uint64_t budget) {
    return build_presentation(DualGroup::cyclic(c.group.p), static_cast<std::size_t>(c.dim),
                              budget);
}

FormalSymbolSum beta_symbol_sum(const Configuration& c, const Presentation& pres) {
    if (pres.group.orders != std::vector<std::int64_t>{c.group.p} ||
        pres.n != static_cast<std::size_t>(c.dim))
        throw std::invalid_argument("presentation does not match the configuration's group/dim");
    FormalSymbolSum sum;
    for (const auto& pt : c.points) {
        std::vector<Character> ents;
        for (Weight w : pt.weights) ents.push_back({w});
        sum.add(Symbol(std::move(ents), pres.group), 1);
    }
    for (const auto& cc : c.curves) {
        std::vector<Character> ents{pres.group.zero()};
        for (Weight w : cc.weights) ents.push_back({w});
        sum.add(Symbol(std::move(ents), pres.group), 1);
    }
    for (const auto& s : c.surfaces) {
        std::vector<Character> ents{pres.group.zero(), pres.group.zero(), Character{s.weight}};
        sum.add(Symbol(std::move(ents), pres.group), 1);
    }
    return sum;
}

GroupElementClass beta_class(const Configuration& c, const Presentation& pres) {
    return class_of(beta_symbol_sum(c, pres), pres);
}

}  // namespace ei
