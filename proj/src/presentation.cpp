#include "ei/presentation.hpp"

#include <algorithm>
#include <set>

namespace ei {

namespace {

// All position subsets of size 2..n, in a fixed order.
void blocks_rec(std::size_t n, std::size_t start, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() >= 2) out.push_back(cur);
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        blocks_rec(n, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Presentation build_presentation(const DualGroup& g, std::size_t n, std::uint64_t budget) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (multiset_count(g, n) > budget)
        throw BudgetExceeded("enumeration budget exceeded: candidate symbol count " +
                             std::to_string(multiset_count(g, n)) + " > " + std::to_string(budget));
    Presentation p{g, n, enumerate_generators(g, n), {}, {}};
    if (p.generators.size() > budget)
        throw BudgetExceeded("enumeration budget exceeded: " + std::to_string(p.generators.size()) +
                             " generators > " + std::to_string(budget));
    for (std::size_t i = 0; i < p.generators.size(); ++i) p.index.emplace(p.generators[i], i);

    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::size_t> cur;
    blocks_rec(n, 0, cur, blocks);

    std::set<std::vector<Int>> rows;  // dedupe: many blocks repeat on sorted symbols
    for (const Symbol& s : p.generators) {
        for (const auto& block : blocks) {
            FormalSymbolSum rhs = relation_b_expand(s, block, g);
            std::vector<Int> row(p.generators.size(), Int(0));
            row[p.index.at(s)] += 1;
            for (const auto& [term, coeff] : rhs.terms) row[p.index.at(term)] -= coeff;
            bool zero = std::all_of(row.begin(), row.end(), [](const Int& a) { return a == 0; });
            if (!zero) rows.insert(std::move(row));
            if (rows.size() > budget)
                throw BudgetExceeded("enumeration budget exceeded: relation count > " +
                                     std::to_string(budget));
        }
    }

    IntMatrix rel(rows.size(), p.generators.size());
    std::size_t r = 0;
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) rel(r, j) = row[j];
        ++r;
    }
    p.structure = present_quotient(p.generators.size(), rel);
    return p;
}

GroupElementClass class_of(const FormalSymbolSum& sum, const Presentation& p) {
    std::vector<Int> coords(p.generators.size(), Int(0));
    for (const auto& [s, c] : sum.terms) {
        auto it = p.index.find(s);
        if (it == p.index.end())
            throw std::invalid_argument("symbol not in presentation: " + s.str());
        coords[it->second] += c;
    }
    return reduce_element(p.structure, coords);
}

GroupElementClass zero_class(const Presentation& p) {
    return reduce_element(p.structure, std::vector<Int>(p.generators.size(), Int(0)));
}

}  // namespace ei
