#include "ei/fuzz.hpp"

#include <random>
#include <stdexcept>

#include "ei/beta.hpp"
#include "ei/invariants.hpp"

namespace ei {

std::string FuzzCheck::name() const {
    switch (kind) {
        case Kind::I: return "I";
        case Kind::J: return "J";
        case Kind::K: return "K";
        case Kind::Combined: return "combined:" + std::to_string(g);
        case Kind::Fine: return "fine:" + label;
        case Kind::Beta: return "beta";
    }
    return "?";
}

FuzzCheck parse_check(const std::string& spec) {
    FuzzCheck c;
    if (spec == "I") {
        c.kind = FuzzCheck::Kind::I;
    } else if (spec == "J") {
        c.kind = FuzzCheck::Kind::J;
    } else if (spec == "K") {
        c.kind = FuzzCheck::Kind::K;
    } else if (spec == "beta") {
        c.kind = FuzzCheck::Kind::Beta;
    } else if (spec.rfind("combined:", 0) == 0) {
        c.kind = FuzzCheck::Kind::Combined;
        c.g = std::stoll(spec.substr(9));
    } else if (spec.rfind("fine:", 0) == 0) {
        c.kind = FuzzCheck::Kind::Fine;
        c.label = spec.substr(5);
    } else {
        throw std::invalid_argument("unknown check: " + spec +
                                    " (expected I, J, K, beta, combined:<g>, fine:<label>)");
    }
    return c;
}

namespace {

struct CheckContext {
    std::optional<Presentation> beta_presentation;
};

void verify_applicable(const FuzzCheck& chk, const Configuration& c) {
    auto need = [&](bool cond, const std::string& what) {
        if (!cond)
            throw std::invalid_argument("check " + chk.name() + " not applicable: " + what);
    };
    switch (chk.kind) {
        case FuzzCheck::Kind::I: need(c.dim == 2 && c.group.p == 2, "requires dim 2, p 2"); break;
        case FuzzCheck::Kind::J: need(c.dim == 3 && c.group.p == 3, "requires dim 3, p 3"); break;
        case FuzzCheck::Kind::K: need(c.dim == 3 && c.group.p == 2, "requires dim 3, p 2"); break;
        case FuzzCheck::Kind::Combined:
            need(c.dim == 3, "requires dim 3");
            need(chk.g >= 2, "requires g >= 2");
            break;
        case FuzzCheck::Kind::Fine: need(c.dim == 3, "requires dim 3"); break;
        case FuzzCheck::Kind::Beta: break;
    }
}

std::string eval_check(const FuzzCheck& chk, const Configuration& c, CheckContext& ctx,
                       std::uint64_t budget) {
    switch (chk.kind) {
        case FuzzCheck::Kind::I: return std::to_string(invariant_I(c));
        case FuzzCheck::Kind::J: return std::to_string(invariant_J(c));
        case FuzzCheck::Kind::K: return std::to_string(invariant_K(c));
        case FuzzCheck::Kind::Combined: return std::to_string(combined_invariant(c, chk.g));
        case FuzzCheck::Kind::Fine: return std::to_string(fine_invariant(c, chk.label));
        case FuzzCheck::Kind::Beta: {
            if (!ctx.beta_presentation) ctx.beta_presentation = beta_presentation(c, budget);
            return beta_class(c, *ctx.beta_presentation).str();
        }
    }
    return "?";
}

}  // namespace

FuzzReport fuzz_sequence(const Configuration& c, std::uint64_t steps, std::uint64_t seed,
                         const std::vector<FuzzCheck>& checks, std::uint64_t budget,
                         const std::function<void(Configuration&)>& corrupt) {
    require_valid(c);
    for (const auto& chk : checks) verify_applicable(chk, c);

    FuzzReport rep;
    rep.steps_requested = steps;
    rep.seed = seed;
    CheckContext ctx;
    for (const auto& chk : checks) {
        rep.checks.push_back(chk.name());
        rep.initial_values[chk.name()] = eval_check(chk, c, ctx, budget);
    }
    rep.final_values = rep.initial_values;

    std::mt19937_64 rng(seed);
    Configuration cur = c;
    for (std::uint64_t step = 1; step <= steps; ++step) {
        auto centers = admissible_centers(cur);
        if (centers.empty())
            throw std::logic_error("no admissible centers for a valid configuration");
        std::size_t idx = static_cast<std::size_t>(rng() % centers.size());
        BlowupReport brep = blowup(cur, centers[idx]);
        if (corrupt) corrupt(brep.after);
        ++rep.case_histogram[brep.case_label];
        rep.steps_applied = step;
        bool drifted = false;
        for (const auto& chk : checks) {
            std::string v = eval_check(chk, brep.after, ctx, budget);
            if (v != rep.initial_values.at(chk.name())) {
                FuzzDrift d;
                d.step = step;
                d.check = chk.name();
                d.before_value = rep.final_values.at(chk.name());
                d.after_value = v;
                d.report = brep;
                rep.drift = std::move(d);
                drifted = true;
            }
            rep.final_values[chk.name()] = v;
            if (drifted) break;
        }
        if (drifted) break;
        cur = std::move(brep.after);
    }
    return rep;
}

}  // namespace ei
