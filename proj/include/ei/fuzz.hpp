#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ei/blowup.hpp"
#include "ei/presentation.hpp"

namespace ei {

struct FuzzCheck {
    enum class Kind { I, J, K, Combined, Fine, Beta } kind = Kind::Beta;
    std::int64_t g = 0;      // Combined
    std::string label;       // Fine

    std::string name() const;
};

// "I" | "J" | "K" | "combined:<g>" | "fine:<label>" | "beta"
FuzzCheck parse_check(const std::string& spec);

struct FuzzDrift {
    std::uint64_t step = 0;  // 1-based step at which the value moved
    std::string check;
    std::string before_value;
    std::string after_value;
    BlowupReport report;     // the single offending blowup
};

struct FuzzReport {
    std::uint64_t steps_requested = 0;
    std::uint64_t steps_applied = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> checks;
    std::map<std::string, std::uint64_t> case_histogram;
    std::map<std::string, std::string> initial_values;
    std::map<std::string, std::string> final_values;
    std::optional<FuzzDrift> drift;

    bool ok() const { return !drift.has_value(); }
};

// Applies `steps` uniformly random admissible blowups (center = mt19937_64
// word modulo the list size; fully reproducible from the seed), recording
// every checked invariant after every step and stopping at the first drift.
// `corrupt` is a test hook mutating the configuration after each step.
FuzzReport fuzz_sequence(const Configuration& c, std::uint64_t steps, std::uint64_t seed,
                         const std::vector<FuzzCheck>& checks,
                         std::uint64_t budget = kDefaultEnumerationBudget,
                         const std::function<void(Configuration&)>& corrupt = {});

}  // namespace ei
