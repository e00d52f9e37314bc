#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ei/config.hpp"

namespace ei {

struct ExampleParams {
    std::optional<std::int64_t> k;
    std::optional<std::int64_t> g;
    std::optional<std::string> variant;
};

// Built-in example configurations:
//   trigonal_threefold (k >= 2)      Z/3 threefold x1x2x3 = P(x4), deg P = 3k
//   surface_times_line (g >= 2)      S x P1 with diagonal Z/2-action, S a
//                                    rational surface fixing a genus-g curve
//   p2_linear_z2                     involution diag(1,1,-1) on the plane
//   p3_linear_z2 (two_lines | point_plane)
//   p3_linear_z3 (point_plane | two_lines | line_two_points)
Configuration build_example(const std::string& family, const ExampleParams& params = {});

std::vector<std::string> example_families();

}  // namespace ei
