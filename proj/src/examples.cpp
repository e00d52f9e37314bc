#include "ei/examples.hpp"

#include <stdexcept>

namespace ei {

namespace {

Configuration trigonal_threefold(std::int64_t k) {
    if (k < 2) throw std::invalid_argument("trigonal_threefold requires k >= 2");
    Configuration c;
    c.group.p = 3;
    c.dim = 3;
    std::int64_t g = genus_cyclic_cover(k);
    // -K_X.C = 6 for every k, so d = 6 - 2 + 2g = 6k.
    CurveComponent curve;
    curve.genus = g;
    curve.weights = {1, 2};
    curve.d = 6 * k;
    curve.isogeny_label = "Jac(C_k" + std::to_string(k) + ")";
    c.curves.push_back(curve);
    return c;
}

Configuration surface_times_line(std::int64_t g) {
    if (g < 2) throw std::invalid_argument("surface_times_line requires g >= 2");
    Configuration c;
    c.group.p = 2;
    c.dim = 3;
    // S: conic bundle x1x2 = Q(x3), deg Q = 2g+2, involution swapping x1,x2.
    // Fixed curve C in S has C.C = 2g+2; on S x P1 the fixed surface C x P1
    // has K.N = -2 * C.C.
    SurfaceComponent s;
    s.weight = 1;
    s.ruling_genus = g;
    s.k_dot_n = -4 * g - 4;
    s.tag = kTagRuledProduct;
    s.isogeny_label = "Jac(hyp_g" + std::to_string(g) + ")";
    c.surfaces.push_back(s);
    return c;
}

Configuration p2_linear_z2() {
    Configuration c;
    c.group.p = 2;
    c.dim = 2;
    c.points.push_back({{1, 1}});
    CurveComponent line;
    line.genus = 0;
    line.weights = {1};
    line.d = 1;
    c.curves.push_back(line);
    return c;
}

Configuration p3_linear_z2(const std::string& variant) {
    Configuration c;
    c.group.p = 2;
    c.dim = 3;
    if (variant == "two_lines") {
        // diag(+,+,-,-): two skew fixed lines, each with normal bundle O(1)+O(1)
        for (int i = 0; i < 2; ++i) {
            CurveComponent line;
            line.genus = 0;
            line.weights = {1, 1};
            line.d = 2;
            c.curves.push_back(line);
        }
    } else if (variant == "point_plane") {
        // diag(+,+,+,-): fixed plane (K_S = -3H, N = H) and an isolated point
        c.points.push_back({{1, 1, 1}});
        SurfaceComponent plane;
        plane.weight = 1;
        plane.ruling_genus = 0;
        plane.k_dot_n = -3;
        plane.tag = kTagPlane;
        c.surfaces.push_back(plane);
    } else {
        throw std::invalid_argument("p3_linear_z2 variants: two_lines, point_plane");
    }
    return c;
}

Configuration p3_linear_z3(const std::string& variant) {
    Configuration c;
    c.group.p = 3;
    c.dim = 3;
    if (variant == "point_plane") {
        // weights (0,0,0,1) on coordinates
        SurfaceComponent plane;
        plane.weight = 1;
        plane.ruling_genus = 0;
        plane.k_dot_n = -3;
        plane.tag = kTagPlane;
        c.surfaces.push_back(plane);
        c.points.push_back({{2, 2, 2}});
    } else if (variant == "two_lines") {
        // weights (0,0,1,1)
        CurveComponent l0;
        l0.genus = 0;
        l0.weights = {1, 1};
        l0.d = 2;
        c.curves.push_back(l0);
        CurveComponent l1;
        l1.genus = 0;
        l1.weights = {2, 2};
        l1.d = 2;
        c.curves.push_back(l1);
    } else if (variant == "line_two_points") {
        // weights (0,0,1,2)
        CurveComponent line;
        line.genus = 0;
        line.weights = {1, 2};
        line.d = 2;
        c.curves.push_back(line);
        c.points.push_back({{1, 2, 2}});
        c.points.push_back({{1, 1, 2}});
    } else {
        throw std::invalid_argument(
            "p3_linear_z3 variants: point_plane, two_lines, line_two_points");
    }
    return c;
}

}  // namespace

Configuration build_example(const std::string& family, const ExampleParams& params) {
    Configuration c;
    if (family == "trigonal_threefold") {
        c = trigonal_threefold(params.k.value_or(2));
    } else if (family == "surface_times_line") {
        c = surface_times_line(params.g.value_or(2));
    } else if (family == "p2_linear_z2") {
        c = p2_linear_z2();
    } else if (family == "p3_linear_z2") {
        c = p3_linear_z2(params.variant.value_or("two_lines"));
    } else if (family == "p3_linear_z3") {
        c = p3_linear_z3(params.variant.value_or("point_plane"));
    } else {
        throw std::invalid_argument("unknown example family: " + family);
    }
    require_valid(c);
    return c;
}

std::vector<std::string> example_families() {
    return {"trigonal_threefold", "surface_times_line", "p2_linear_z2", "p3_linear_z2",
            "p3_linear_z3"};
}

}  // namespace ei
