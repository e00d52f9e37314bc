// ei: exact computations for equivariant birational invariants.
//
// Commands: group, symbol reduce, beta, invariant, blowup, fuzz, feasible,
// example, atoms (catalog | obstruct). See README.md.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "ei/beta.hpp"
#include "ei/examples.hpp"
#include "ei/invariants.hpp"
#include "ei/serialize.hpp"

namespace {

using namespace ei;

std::uint64_t env_budget() {
    const char* s = std::getenv("EI_BUDGET");
    if (!s) return kDefaultEnumerationBudget;
    return std::strtoull(s, nullptr, 10);
}

std::vector<std::int64_t> parse_int_list(const std::string& s) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        out.push_back(std::stoll(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    if (out.empty()) throw std::invalid_argument("expected a comma-separated integer list");
    return out;
}

DualGroup parse_group_options(std::int64_t cyclic, const std::string& orders) {
    if (cyclic > 0 && !orders.empty())
        throw std::invalid_argument("give either --cyclic or --orders, not both");
    if (cyclic > 0) return DualGroup::cyclic(cyclic);
    if (!orders.empty()) return DualGroup(parse_int_list(orders));
    throw std::invalid_argument("a group is required: --cyclic M or --orders m1,m2,...");
}

// One bracketed symbol with an optional integer prefix: "[1,2]",
// "[(1,0),(0,1)]", "2*[0,1]", "-[1,1]".
std::pair<Int, std::vector<Character>> parse_symbol_term(const std::string& s,
                                                         std::size_t rank) {
    Int coeff = 1;
    std::size_t bracket = s.find('[');
    if (bracket == std::string::npos) throw std::invalid_argument("symbol must contain [...]");
    if (bracket > 0) {
        std::string pre = s.substr(0, bracket);
        if (!pre.empty() && pre.back() == '*') pre.pop_back();
        if (pre == "-")
            coeff = -1;
        else if (pre == "+" || pre.empty())
            coeff = 1;
        else
            coeff = Int(pre);
    }
    if (s.back() != ']') throw std::invalid_argument("symbol must end with ]");
    std::string body = s.substr(bracket + 1, s.size() - bracket - 2);
    std::vector<Character> entries;
    std::size_t pos = 0;
    while (pos < body.size()) {
        if (body[pos] == '(') {
            std::size_t close = body.find(')', pos);
            if (close == std::string::npos) throw std::invalid_argument("unbalanced ( in symbol");
            auto comps = parse_int_list(body.substr(pos + 1, close - pos - 1));
            entries.push_back(Character(comps.begin(), comps.end()));
            pos = close + 1;
            if (pos < body.size() && body[pos] == ',') ++pos;
        } else {
            std::size_t next = body.find(',', pos);
            if (next == std::string::npos) next = body.size();
            entries.push_back(Character{std::stoll(body.substr(pos, next - pos))});
            pos = next + 1;
        }
    }
    for (const auto& e : entries)
        if (e.size() != rank)
            throw std::invalid_argument("symbol entry rank does not match the group");
    if (entries.empty()) throw std::invalid_argument("empty symbol");
    return {coeff, entries};
}

// A formal sum "2*[1,2] - [0,1] + [1,1]"; signs bind to the following term.
std::vector<std::pair<Int, std::vector<Character>>> parse_symbol_sum(const std::string& raw,
                                                                     std::size_t rank) {
    std::string s;
    for (char ch : raw)
        if (!isspace(static_cast<unsigned char>(ch))) s += ch;
    std::vector<std::pair<Int, std::vector<Character>>> out;
    std::size_t pos = 0;
    int depth = 0;
    std::size_t start = 0;
    auto flush = [&](std::size_t end) {
        if (end <= start) return;
        std::string piece = s.substr(start, end - start);
        if (piece == "+" || piece == "-") throw std::invalid_argument("dangling sign in sum");
        out.push_back(parse_symbol_term(piece, rank));
    };
    for (pos = 0; pos < s.size(); ++pos) {
        char ch = s[pos];
        if (ch == '[' || ch == '(') ++depth;
        if (ch == ']' || ch == ')') --depth;
        if (depth == 0 && pos > start && (ch == '+' || ch == '-')) {
            flush(pos);
            start = pos + (ch == '+' ? 1 : 0);  // keep '-' with the next term
        }
    }
    flush(s.size());
    if (out.empty()) throw std::invalid_argument("empty symbol sum");
    return out;
}

std::string class_text(const GroupElementClass& cls, const AbGroupStructure& st) {
    if (cls.is_zero()) return "0";
    std::string s = cls.str();
    s += "   in " + st.structure_string();
    return s;
}

int cmd_group(std::int64_t cyclic, const std::string& orders, std::size_t n,
              std::uint64_t budget) {
    DualGroup g = parse_group_options(cyclic, orders);
    Presentation p = build_presentation(g, n, budget);
    std::cout << p.structure.structure_string() << "\n";
    return 0;
}

int cmd_symbol_reduce(std::int64_t cyclic, const std::string& orders, const std::string& expr,
                      std::uint64_t budget) {
    DualGroup g = parse_group_options(cyclic, orders);
    FormalSymbolSum sum;
    std::size_t n = 0;
    for (auto& [coeff, entries] : parse_symbol_sum(expr, g.rank())) {
        if (n == 0) n = entries.size();
        if (entries.size() != n)
            throw std::invalid_argument("all symbols must have the same number of entries");
        sum.add(Symbol(std::move(entries), g), coeff);
    }
    Presentation p = build_presentation(g, n, budget);
    GroupElementClass cls = class_of(sum, p);
    std::cout << "B_" << n << " = " << p.structure.structure_string() << "\n";
    std::cout << "class = " << cls.str() << "\n";
    return 0;
}

int cmd_beta(const std::string& path, std::uint64_t budget) {
    Configuration c = load_config(path);
    require_valid(c);
    Presentation pres = beta_presentation(c, budget);
    GroupElementClass cls = beta_class(c, pres);
    std::cout << "B_" << c.dim << "(Z/" << c.group.p << ") = "
              << pres.structure.structure_string() << "\n";
    std::cout << "beta = " << class_text(cls, pres.structure) << "\n";
    return 0;
}

int cmd_invariant(const std::string& kind, const std::string& path, std::int64_t g,
                  const std::string& label, std::uint64_t budget) {
    Configuration c = load_config(path);
    require_valid(c);
    if (kind == "beta") {
        return cmd_beta(path, budget);
    }
    InvariantBreakdown b;
    std::string name = kind;
    if (kind == "I") {
        b = invariant_I_terms(c);
    } else if (kind == "J") {
        b = invariant_J_terms(c);
    } else if (kind == "K") {
        b = invariant_K_terms(c);
    } else if (kind == "combined") {
        b = combined_invariant_terms(c, g);
        name = "combined(g=" + std::to_string(g) + ")";
    } else if (kind == "fine") {
        if (label.empty()) throw std::invalid_argument("--label is required for kind fine");
        b = fine_invariant_terms(c, label);
        name = "fine(" + label + ")";
    } else {
        throw std::invalid_argument("unknown kind: " + kind +
                                    " (expected I, J, K, combined, fine, beta)");
    }
    for (const auto& t : b.terms) std::cout << "  " << t.description << "\n";
    std::cout << name << " = " << b.total << "\n";
    return 0;
}

int cmd_blowup(const std::string& path, const std::string& center_json, const std::string& out,
               const std::string& report_path) {
    Configuration c = load_config(path);
    BlowupCenter ctr = center_from_json(Json::parse(center_json));
    BlowupReport rep = blowup(c, ctr);
    std::cout << "case " << rep.case_label << "\n";
    for (const auto& [k, v] : rep.deltas) std::cout << "  delta " << k << " = " << v << "\n";
    std::string out_path = out.empty() ? path + ".after.json" : out;
    save_config(rep.after, out_path);
    std::cout << "wrote " << out_path << "\n";
    if (!report_path.empty()) {
        std::ofstream f(report_path);
        f << dump_json(blowup_report_to_json(rep));
    }
    return 0;
}

int cmd_fuzz(const std::string& path, std::uint64_t steps, std::uint64_t seed,
             const std::string& checks_csv, std::uint64_t budget, bool selftest_corrupt) {
    Configuration c = load_config(path);
    std::vector<FuzzCheck> checks;
    if (!checks_csv.empty()) {
        std::size_t pos = 0;
        while (pos < checks_csv.size()) {
            std::size_t next = checks_csv.find(',', pos);
            if (next == std::string::npos) next = checks_csv.size();
            std::string item = checks_csv.substr(pos, next - pos);
            // combined:<g> and fine:<label> keep their colon payload intact
            checks.push_back(parse_check(item));
            pos = next + 1;
        }
    }
    std::function<void(Configuration&)> corrupt;
    if (selftest_corrupt)
        corrupt = [](Configuration& cc) {
            if (!cc.curves.empty())
                cc.curves.front().d += 1;
            else if (!cc.surfaces.empty())
                cc.surfaces.front().k_dot_n += 1;
            else
                cc.points.push_back({std::vector<Weight>(cc.dim, 1)});
        };
    FuzzReport rep = fuzz_sequence(c, steps, seed, checks, budget, corrupt);
    std::cout << dump_json(fuzz_report_to_json(rep));
    return rep.ok() ? 0 : 1;
}

int cmd_feasible(const std::string& target_csv, const std::vector<std::string>& basis_csv,
                 const std::vector<std::string>& forced_csv) {
    auto t64 = parse_int_list(target_csv);
    std::vector<Int> target(t64.begin(), t64.end());
    std::vector<std::vector<Int>> basis;
    for (const auto& b : basis_csv) {
        auto v = parse_int_list(b);
        basis.emplace_back(v.begin(), v.end());
    }
    std::vector<std::pair<std::size_t, Int>> forced;
    for (const auto& f : forced_csv) {
        auto v = parse_int_list(f);
        if (v.size() != 2) throw std::invalid_argument("--forced expects index,min");
        forced.emplace_back(static_cast<std::size_t>(v[0]), Int(v[1]));
    }
    FeasibilityResult r = feasibility(target, basis, forced);
    if (r.feasible) {
        std::cout << "feasible: witness (";
        for (std::size_t i = 0; i < r.witness.size(); ++i)
            std::cout << (i ? ", " : "") << r.witness[i].str();
        std::cout << ")\n";
        return 0;
    }
    std::cout << "infeasible: " << r.certificate << "\n";
    return 2;
}

int cmd_example(const std::string& family, std::int64_t k, std::int64_t g,
                const std::string& variant, const std::string& out, bool list) {
    if (list) {
        for (const auto& f : example_families()) std::cout << f << "\n";
        return 0;
    }
    ExampleParams params;
    if (k > 0) params.k = k;
    if (g > 0) params.g = g;
    if (!variant.empty()) params.variant = variant;
    Configuration c = build_example(family, params);
    if (out.empty())
        std::cout << dump_json(config_to_json(c));
    else {
        save_config(c, out);
        std::cout << "wrote " << out << "\n";
    }
    return 0;
}

int cmd_atoms_catalog(std::int64_t p, std::int64_t max_genus) {
    AtomCatalog cat = catalog_low_dim(p, max_genus);
    std::cout << dump_json(catalog_to_json(p, cat));
    return 0;
}

int cmd_atoms_obstruct(const std::string& config_path, const std::vector<std::string>& forced_csv,
                       std::int64_t p_flag, std::int64_t max_genus) {
    Configuration c = load_config(config_path);
    require_valid(c);
    std::int64_t p = p_flag > 0 ? p_flag : c.group.p;
    AtomCatalog cat = catalog_low_dim(p, max_genus);
    std::vector<ForcedAtom> forced;
    for (const auto& f : forced_csv) {
        auto v = parse_int_list(f);
        if (v.size() < 3 || v.size() > 4)
            throw std::invalid_argument("--forced expects atom_index,rho,rho_g[,count]");
        ForcedAtom fa;
        fa.atom_index = static_cast<std::size_t>(v[0]);
        fa.rho = v[1];
        fa.rho_g = v[2];
        fa.count = v.size() == 4 ? Int(v[3]) : Int(1);
        forced.push_back(fa);
    }
    ObstructionReport rep = obstruction_report(c.atoms, cat, forced);
    std::cout << dump_json(obstruction_report_to_json(rep));
    if (rep.any_inconsistent) return 1;
    return rep.any_obstructed ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact equivariant birational invariants"};
    app.require_subcommand(1);
    // --budget may appear before or after the subcommand (fallthrough below)
    std::uint64_t budget = env_budget();
    app.add_option("--budget", budget, "enumeration cap (overrides EI_BUDGET)");

    // group
    auto* group = app.add_subcommand("group", "structure of the symbol module B_n(G)");
    group->fallthrough();
    std::int64_t cyclic = 0;
    std::string orders;
    std::size_t n = 2;
    group->add_option("--cyclic", cyclic, "cyclic group order m");
    group->add_option("--orders", orders, "abelian group orders m1,m2,...");
    group->add_option("--n", n, "number of symbol entries")->required();

    // symbol reduce
    auto* symbol = app.add_subcommand("symbol", "symbol arithmetic");
    symbol->fallthrough();
    auto* reduce = symbol->add_subcommand("reduce", "reduce a formal sum to a canonical class");
    reduce->fallthrough();
    std::int64_t s_cyclic = 0;
    std::string s_orders, s_sum;
    reduce->add_option("--cyclic", s_cyclic, "cyclic group order m");
    reduce->add_option("--orders", s_orders, "abelian group orders m1,m2,...");
    reduce->add_option("sum", s_sum, "formal sum, e.g. \"[1,2] - [2,2] - [1,1]\"")->required();

    // beta
    auto* beta = app.add_subcommand("beta", "class of the fixed-locus symbol sum");
    beta->fallthrough();
    std::string beta_path;
    beta->add_option("config", beta_path, "configuration JSON")->required();

    // invariant
    auto* inv = app.add_subcommand("invariant", "evaluate an invariant with a term breakdown");
    inv->fallthrough();
    std::string inv_kind, inv_path, inv_label;
    std::int64_t inv_g = 2;
    inv->add_option("--kind", inv_kind, "I | J | K | combined | fine | beta")->required();
    inv->add_option("--g", inv_g, "genus for --kind combined");
    inv->add_option("--label", inv_label, "isogeny label for --kind fine");
    inv->add_option("config", inv_path, "configuration JSON")->required();

    // blowup
    auto* blow = app.add_subcommand("blowup", "apply one equivariant blowup");
    blow->fallthrough();
    std::string blow_path, blow_center, blow_out, blow_report;
    blow->add_option("config", blow_path, "configuration JSON")->required();
    blow->add_option("--center", blow_center, "center JSON, e.g. {\"kind\":\"free_orbit_point\"}")
        ->required();
    blow->add_option("--out", blow_out, "output configuration path");
    blow->add_option("--report", blow_report, "write the full blowup report JSON here");

    // fuzz
    auto* fuzz = app.add_subcommand("fuzz", "random blowup sequences with invariant checks");
    fuzz->fallthrough();
    std::string fuzz_path, fuzz_checks;
    std::uint64_t fuzz_steps = 100, fuzz_seed = 0;
    bool fuzz_corrupt = false;
    fuzz->add_option("config", fuzz_path, "configuration JSON")->required();
    fuzz->add_option("--steps", fuzz_steps, "number of blowups");
    fuzz->add_option("--seed", fuzz_seed, "64-bit seed");
    fuzz->add_option("--check", fuzz_checks, "comma list: I,J,K,beta,combined:<g>,fine:<label>");
    fuzz->add_flag("--selftest-corrupt", fuzz_corrupt,
                   "perturb the configuration after every step (harness self-test)");

    // feasible
    auto* feas = app.add_subcommand("feasible", "nonnegative integer decomposition");
    feas->fallthrough();
    std::string feas_target;
    std::vector<std::string> feas_basis, feas_forced;
    feas->add_option("--target", feas_target, "target vector a,b,...")->required();
    feas->add_option("--basis", feas_basis, "basis vector a,b,... (repeatable)")->required();
    feas->add_option("--forced", feas_forced, "index,min (repeatable)");

    // example
    auto* ex = app.add_subcommand("example", "emit a built-in example configuration");
    ex->fallthrough();
    std::string ex_family, ex_variant, ex_out;
    std::int64_t ex_k = 0, ex_g = 0;
    bool ex_list = false;
    ex->add_option("family", ex_family, "family name (see --list)");
    ex->add_option("--k", ex_k, "parameter k");
    ex->add_option("--g", ex_g, "parameter g");
    ex->add_option("--variant", ex_variant, "family variant");
    ex->add_option("--out", ex_out, "write to file instead of stdout");
    ex->add_flag("--list", ex_list, "list families");

    // atoms
    auto* atoms = app.add_subcommand("atoms", "atom catalogs and decomposition obstructions");
    atoms->fallthrough();
    auto* cat = atoms->add_subcommand("catalog", "low-dimensional atom generators");
    cat->fallthrough();
    std::int64_t cat_p = 2, cat_genus = 3;
    cat->add_option("--p", cat_p, "prime order")->required();
    cat->add_option("--max-genus", cat_genus, "largest curve genus listed");
    auto* obs = atoms->add_subcommand("obstruct", "atom-decomposition obstruction report");
    obs->fallthrough();
    std::string obs_config;
    std::vector<std::string> obs_forced;
    std::int64_t obs_p = 0, obs_genus = 3;
    obs->add_option("config", obs_config, "configuration JSON carrying the atom list")->required();
    obs->add_option("--forced", obs_forced, "atom_index,rho,rho_g[,count] (repeatable)");
    obs->add_option("--p", obs_p, "catalog prime (default: the configuration's p)");
    obs->add_option("--max-genus", obs_genus, "largest curve genus in the catalog");

    CLI11_PARSE(app, argc, argv);

    try {
        if (group->parsed()) return cmd_group(cyclic, orders, n, budget);
        if (symbol->parsed()) {
            if (!reduce->parsed()) throw std::invalid_argument("usage: symbol reduce ...");
            return cmd_symbol_reduce(s_cyclic, s_orders, s_sum, budget);
        }
        if (beta->parsed()) return cmd_beta(beta_path, budget);
        if (inv->parsed()) return cmd_invariant(inv_kind, inv_path, inv_g, inv_label, budget);
        if (blow->parsed()) return cmd_blowup(blow_path, blow_center, blow_out, blow_report);
        if (fuzz->parsed())
            return cmd_fuzz(fuzz_path, fuzz_steps, fuzz_seed, fuzz_checks, budget, fuzz_corrupt);
        if (feas->parsed()) return cmd_feasible(feas_target, feas_basis, feas_forced);
        if (ex->parsed()) return cmd_example(ex_family, ex_k, ex_g, ex_variant, ex_out, ex_list);
        if (atoms->parsed()) {
            if (cat->parsed()) return cmd_atoms_catalog(cat_p, cat_genus);
            if (obs->parsed()) return cmd_atoms_obstruct(obs_config, obs_forced, obs_p, obs_genus);
            throw std::invalid_argument("usage: atoms catalog|obstruct ...");
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
