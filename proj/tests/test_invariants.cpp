#include <doctest.h>

#include <random>

#include "ei/examples.hpp"
#include "ei/atoms.hpp"
#include "ei/invariants.hpp"
#include "oracles.hpp"

using namespace ei;

namespace {

Configuration bare(std::int64_t p, int dim) {
    Configuration c;
    c.group.p = p;
    c.dim = dim;
    return c;
}

}  // namespace

TEST_CASE("I: plane involution evaluates to 4 with the expected composition") {
    Configuration c = build_example("p2_linear_z2");
    auto b = invariant_I_terms(c);
    REQUIRE(b.terms.size() == 2);
    CHECK(b.terms[0].value == 1);  // isolated point
    CHECK(b.terms[1].value == 3);  // line: chi 2 + deg 1
    CHECK(b.total == 4);
}

TEST_CASE("I: empty locus and a single higher-genus curve") {
    CHECK(invariant_I(bare(2, 2)) == 0);
    Configuration c = bare(2, 2);
    c.curves.push_back({2, {1}, -3, std::nullopt});
    CHECK(invariant_I(c) == -5);
}

TEST_CASE("I: preconditions") {
    CHECK_THROWS_AS(invariant_I(bare(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(invariant_I(bare(3, 2)), std::invalid_argument);
}

TEST_CASE("J: trigonal family value 6 for every k") {
    for (std::int64_t k = 2; k <= 10; ++k)
        CHECK(invariant_J(build_example("trigonal_threefold", {.k = k})) == 6);
}

TEST_CASE("J: single points by weight type") {
    Configuration c = bare(3, 3);
    c.points.push_back({{1, 1, 2}});
    CHECK(invariant_J(c) == 1);
    c.points[0] = {{1, 1, 1}};
    CHECK(invariant_J(c) == 0);
    c.points[0] = {{2, 2, 2}};
    CHECK(invariant_J(c) == 0);
    c.points[0] = {{1, 2, 2}};
    CHECK(invariant_J(c) == 1);
}

TEST_CASE("J: value 6 on every linear order-3 action on projective 3-space") {
    for (const char* variant : {"point_plane", "two_lines", "line_two_points"})
        CHECK(invariant_J(build_example("p3_linear_z3", {.variant = variant})) == 6);
}

TEST_CASE("K: both involution models of projective 3-space give 8") {
    CHECK(invariant_K(build_example("p3_linear_z2", {.variant = "two_lines"})) == 8);
    CHECK(invariant_K(build_example("p3_linear_z2", {.variant = "point_plane"})) == 8);
    Configuration c = bare(2, 3);
    c.points.push_back({{1, 1, 1}});
    CHECK(invariant_K(c) == 1);
    CHECK(invariant_K(build_example("surface_times_line", {.g = 5})) == 8);
}

TEST_CASE("J and K: hand-expanded sums on all single-component configurations") {
    // curves: genus 0..3, d -3..3, weight pairs; surfaces: K.N -5..5
    for (std::int64_t g = 0; g <= 3; ++g)
        for (std::int64_t d = -3; d <= 3; ++d) {
            for (auto ws : std::vector<std::vector<Weight>>{{1, 1}, {1, 2}, {2, 2}}) {
                Configuration c = bare(3, 3);
                c.curves.push_back({g, ws, d, std::nullopt});
                std::int64_t want =
                    ws[0] == ws[1] ? (1 - g + d) : (2 - 2 * g + d);
                CHECK(invariant_J(c) == want);
            }
            Configuration k2 = bare(2, 3);
            k2.curves.push_back({g, {1, 1}, d, std::nullopt});
            CHECK(invariant_K(k2) == 2 - 2 * g + d);
        }
    for (std::int64_t g = 0; g <= 3; ++g)
        for (std::int64_t kn = -5; kn <= 5; ++kn) {
            Configuration c = bare(3, 3);
            c.surfaces.push_back({1, g, kn, kTagRuledProduct, std::nullopt});
            CHECK(invariant_J(c) == 3 - 3 * g - kn);
            Configuration k2 = bare(2, 3);
            k2.surfaces.push_back({1, g, kn, kTagRuledProduct, std::nullopt});
            CHECK(invariant_K(k2) == 4 - 4 * g - kn);
        }
}

TEST_CASE("combined invariant separates the trigonal family from linear space") {
    Configuration tri = build_example("trigonal_threefold", {.k = 2});
    CHECK(combined_invariant(tri, 4) == -1);
    CHECK(combined_invariant(tri, 2) == 0);  // no genus-2 content
    for (const char* variant : {"point_plane", "two_lines", "line_two_points"}) {
        Configuration p3 = build_example("p3_linear_z3", {.variant = variant});
        for (std::int64_t g = 2; g <= 6; ++g) CHECK(combined_invariant(p3, g) == 0);
    }
}

TEST_CASE("combined invariant: matched curve and atom cancel") {
    Configuration c = bare(5, 3);
    c.curves.push_back({3, {1, 4}, 0, std::nullopt});
    CHECK(combined_invariant(c, 3) == -1);
    c.atoms.push_back(trivial_curve_atom(3, std::nullopt));
    CHECK(combined_invariant(c, 3) == 0);
    // a nontrivially-acted atom with the same polynomial does not count
    c.atoms.pop_back();
    c.atoms.push_back(nontrivial_curve_atom(3));
    CHECK(combined_invariant(c, 3) == -1);
    CHECK_THROWS_AS(combined_invariant(c, 1), std::invalid_argument);
}

TEST_CASE("combined invariant counts ruled products twice") {
    Configuration c = build_example("surface_times_line", {.g = 4});
    CHECK(combined_invariant(c, 4) == -2);
    CHECK(combined_invariant(c, 3) == 0);
}

TEST_CASE("fine invariant: label matching") {
    Configuration tri = build_example("trigonal_threefold", {.k = 2});
    CHECK(fine_invariant(tri, "Jac(C_k2)") == -1);
    CHECK(fine_invariant(tri, "Jac(C_k3)") == 0);
    tri.atoms.push_back(trivial_curve_atom(4, "Jac(C_k2)"));
    CHECK(fine_invariant(tri, "Jac(C_k2)") == 0);
}

TEST_CASE("invariants are additive over disjoint unions") {
    std::mt19937_64 rng(31);
    auto random_cfg = [&](std::int64_t p, int dim) {
        Configuration c = bare(p, dim);
        std::uniform_int_distribution<int> n(0, 2);
        std::uniform_int_distribution<std::int64_t> g(0, 3), d(-3, 3), w(1, p - 1);
        for (int i = n(rng); i > 0; --i) {
            std::vector<Weight> ws;
            for (int j = 0; j < dim; ++j) ws.push_back(w(rng));
            c.points.push_back({ws});
        }
        for (int i = n(rng); i > 0; --i) {
            std::vector<Weight> ws;
            for (int j = 0; j < dim - 1; ++j) ws.push_back(w(rng));
            c.curves.push_back({g(rng), ws, d(rng), std::nullopt});
        }
        if (dim == 3)
            for (int i = n(rng); i > 0; --i)
                c.surfaces.push_back({w(rng), g(rng), d(rng), kTagRuledProduct, std::nullopt});
        return c;
    };
    for (int t = 0; t < 40; ++t) {
        Configuration a = random_cfg(3, 3), b = random_cfg(3, 3);
        auto u = oracle::disjoint_union(a, b);
        CHECK(invariant_J(u) == invariant_J(a) + invariant_J(b));
        CHECK(combined_invariant(u, 2) == combined_invariant(a, 2) + combined_invariant(b, 2));
        CHECK(fine_invariant(u, "x") == fine_invariant(a, "x") + fine_invariant(b, "x"));

        Configuration a2 = random_cfg(2, 3), b2 = random_cfg(2, 3);
        CHECK(invariant_K(oracle::disjoint_union(a2, b2)) == invariant_K(a2) + invariant_K(b2));

        Configuration a1 = random_cfg(2, 2), b1 = random_cfg(2, 2);
        CHECK(invariant_I(oracle::disjoint_union(a1, b1)) == invariant_I(a1) + invariant_I(b1));
    }
}

TEST_CASE("curve [+-] contribution equals the anticanonical degree for the builders") {
    for (std::int64_t k = 2; k <= 10; ++k) {
        Configuration c = build_example("trigonal_threefold", {.k = k});
        const auto& curve = c.curves[0];
        CHECK(2 - 2 * curve.genus + curve.d == 6);  // -K_X.C of the family
    }
}

TEST_CASE("hodge coefficient obstruction") {
    // fixed locus with positive top-shifted coefficient vs none
    LaurentPoly fixed;
    fixed.set(1, 2);
    fixed.set(0, 4);
    fixed.set(-1, 2);
    LaurentPoly total = LaurentPoly::constant(10);
    CHECK(hodge_coeff_obstruction(total, fixed, 3));

    // product of two involution surfaces: g1 g2 > 0 at t^2, d = 4
    LaurentPoly prod_fixed;
    prod_fixed.set(2, 6);  // g1 g2 = 6
    prod_fixed.set(0, 8);
    prod_fixed.set(-2, 6);
    LaurentPoly prod_total = LaurentPoly::constant(40);
    CHECK(hodge_coeff_obstruction(prod_total, prod_fixed, 4));

    CHECK_FALSE(hodge_coeff_obstruction(fixed, fixed, 3));
    CHECK_THROWS_AS(hodge_coeff_obstruction(total, fixed, 1), std::invalid_argument);
}
