#include "ei/symbol.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ei/snf.hpp"

namespace ei {

DualGroup::DualGroup(std::vector<std::int64_t> ords) : orders(std::move(ords)) {
    if (orders.empty()) throw std::invalid_argument("dual group needs at least one order");
    for (std::int64_t m : orders)
        if (m < 2) throw std::invalid_argument("dual group orders must be >= 2");
}

std::uint64_t DualGroup::size() const {
    std::uint64_t n = 1;
    for (std::int64_t m : orders) n *= static_cast<std::uint64_t>(m);
    return n;
}

Character DualGroup::reduce(const Character& c) const {
    if (c.size() != orders.size())
        throw std::invalid_argument("character component count does not match group");
    Character out(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
        std::int64_t r = c[j] % orders[j];
        if (r < 0) r += orders[j];
        out[j] = r;
    }
    return out;
}

Character DualGroup::sub(const Character& a, const Character& b) const {
    if (a.size() != b.size() || a.size() != orders.size())
        throw std::invalid_argument("character component count does not match group");
    Character out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        std::int64_t r = (a[j] - b[j]) % orders[j];
        if (r < 0) r += orders[j];
        out[j] = r;
    }
    return out;
}

bool DualGroup::is_zero(const Character& c) const {
    for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j] % orders[j] != 0) return false;
    return true;
}

std::vector<Character> DualGroup::elements() const {
    std::vector<Character> out;
    Character cur(orders.size(), 0);
    for (;;) {
        out.push_back(cur);
        std::size_t j = orders.size();
        while (j > 0) {
            --j;
            if (++cur[j] < orders[j]) break;
            cur[j] = 0;
            if (j == 0) return out;
        }
    }
}

Symbol::Symbol(std::vector<Character> ents, const DualGroup& g) {
    entries.reserve(ents.size());
    for (auto& e : ents) entries.push_back(g.reduce(e));
    std::sort(entries.begin(), entries.end());
}

std::string Symbol::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ",";
        if (entries[i].size() == 1) {
            os << entries[i][0];
        } else {
            os << "(";
            for (std::size_t j = 0; j < entries[i].size(); ++j)
                os << (j ? "," : "") << entries[i][j];
            os << ")";
        }
    }
    os << "]";
    return os.str();
}

void FormalSymbolSum::add(const Symbol& s, const Int& coeff) {
    if (coeff == 0) return;
    auto it = terms.find(s);
    if (it == terms.end()) {
        terms.emplace(s, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms.erase(it);
    }
}

FormalSymbolSum& FormalSymbolSum::operator+=(const FormalSymbolSum& o) {
    for (const auto& [s, c] : o.terms) add(s, c);
    return *this;
}

std::string FormalSymbolSum::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : terms) {
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        Int a = abs_int(c);
        if (a != 1) os << a.str() << "*";
        os << s.str();
    }
    return os.str();
}

bool generation_condition(const std::vector<Character>& chars, const DualGroup& g) {
    std::size_t k = g.rank();
    for (const Character& c : chars)
        if (c.size() != k) throw std::invalid_argument("character component count does not match group");
    // The characters generate G^Dual iff the lattice spanned by them together
    // with the order relations m_j e_j is all of Z^k, i.e. every invariant
    // factor of the stacked matrix is 1.
    IntMatrix m(chars.size() + k, k);
    for (std::size_t i = 0; i < chars.size(); ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = chars[i][j];
    for (std::size_t j = 0; j < k; ++j) m(chars.size() + j, j) = g.orders[j];
    AbGroupStructure q = present_quotient(k, m);
    return q.trivial();
}

std::uint64_t multiset_count(const DualGroup& g, std::size_t n) {
    // C(|G| + n - 1, n), saturating
    std::uint64_t size = g.size();
    Int num = 1;
    for (std::size_t i = 0; i < n; ++i) num *= Int(size + i);
    for (std::size_t i = 1; i <= n; ++i) num /= Int(i);
    if (num > Int(UINT64_MAX)) return UINT64_MAX;
    return num.convert_to<std::uint64_t>();
}

namespace {

void enumerate_rec(const std::vector<Character>& elems, std::size_t n, std::size_t start,
                   std::vector<Character>& cur, const DualGroup& g, std::vector<Symbol>& out) {
    if (cur.size() == n) {
        if (generation_condition(cur, g)) {
            Symbol s;
            s.entries = cur;  // already sorted non-decreasing by construction
            out.push_back(std::move(s));
        }
        return;
    }
    for (std::size_t i = start; i < elems.size(); ++i) {
        cur.push_back(elems[i]);
        enumerate_rec(elems, n, i, cur, g, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Symbol> enumerate_generators(const DualGroup& g, std::size_t n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<Character> elems = g.elements();
    std::vector<Symbol> out;
    std::vector<Character> cur;
    enumerate_rec(elems, n, 0, cur, g, out);
    return out;
}

FormalSymbolSum relation_b_expand(const Symbol& s, const std::vector<std::size_t>& block,
                                  const DualGroup& g) {
    std::size_t n = s.size();
    if (block.size() < 2 || block.size() > n) throw std::invalid_argument("block size out of range");
    std::vector<bool> in_block(n, false);
    for (std::size_t pos : block) {
        if (pos >= n || in_block[pos]) throw std::invalid_argument("invalid block positions");
        in_block[pos] = true;
    }
    std::vector<Character> a_part, b_part;
    for (std::size_t i = 0; i < n; ++i)
        (in_block[i] ? a_part : b_part).push_back(s.entries[i]);

    FormalSymbolSum out;
    for (std::size_t i = 0; i < a_part.size(); ++i) {
        bool seen = false;
        for (std::size_t ip = 0; ip < i; ++ip)
            if (a_part[ip] == a_part[i]) {
                seen = true;
                break;
            }
        if (seen) continue;  // duplicate values contribute a single term
        std::vector<Character> ents;
        ents.reserve(n);
        for (std::size_t j = 0; j < a_part.size(); ++j)
            ents.push_back(j == i ? a_part[i] : g.sub(a_part[j], a_part[i]));
        for (const Character& b : b_part) ents.push_back(b);
        Symbol term(std::move(ents), g);
        if (!generation_condition(term.entries, g))
            throw std::logic_error("relation (B) produced a non-generating symbol: " + term.str());
        out.add(term, 1);
    }
    return out;
}

}  // namespace ei
