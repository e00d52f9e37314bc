#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "ei/examples.hpp"
#include "ei/serialize.hpp"

using namespace ei;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(EI_BINARY) + " " + args + " 2>&1";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_config(const Configuration& c, const std::string& name) {
    std::string path = std::string("/tmp/ei_test_") + name + ".json";
    save_config(c, path);
    return path;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli group: published structures and exit codes") {
    auto r = run("group --cyclic 9 --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "Z^5 \xE2\x8A\x95 Z/3\n");

    CHECK(run("group --cyclic 7 --n 1").out == "Z^6\n");
    CHECK(run("group --orders 2,2 --n 1").out == "0\n");
    CHECK(run("group --cyclic 14 --n 2").out == "Z^7 \xE2\x8A\x95 (Z/2)^4 \xE2\x8A\x95 Z/12\n");

    auto bad = run("group --n 2");
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.out, "group is required"));

    auto over = run("group --cyclic 16 --n 2 --budget 10");
    CHECK(over.exit_code == 1);
    CHECK(contains(over.out, "budget exceeded"));
}

TEST_CASE("cli group: EI_BUDGET environment override") {
    std::string cmd = std::string("EI_BUDGET=5 ") + EI_BINARY + " group --cyclic 16 --n 2 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::array<char, 4096> buf{};
    std::string out;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 1);
    CHECK(contains(out, "budget exceeded"));
}

TEST_CASE("cli symbol reduce") {
    auto r = run("symbol reduce --cyclic 3 \"[1,1]\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "B_2 = Z"));
    CHECK(contains(r.out, "class = free("));

    // a relation instance: [1,2] - [2,2] - [1,1] = 0
    auto zero = run("symbol reduce --cyclic 3 \"[1,2] - [2,2] - [1,1]\"");
    CHECK(zero.exit_code == 0);
    CHECK(contains(zero.out, "class = 0"));

    auto v4 = run("symbol reduce --orders 2,2 \"[(1,0),(0,1)]\"");
    CHECK(v4.exit_code == 0);
    CHECK(contains(v4.out, "B_2 = (Z/2)^2"));

    auto coeffs = run("symbol reduce --cyclic 3 \"2*[1,1] - 2*[0,1]\"");
    CHECK(coeffs.exit_code == 0);
    CHECK(contains(coeffs.out, "class = 0"));

    auto bad = run("symbol reduce --cyclic 3 \"[0,0]\"");
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.out, "not in presentation"));
}

TEST_CASE("cli beta and invariant") {
    Configuration tri = build_example("trigonal_threefold", {.k = 2});
    std::string path = temp_config(tri, "tri");

    auto b = run("beta " + path);
    CHECK(b.exit_code == 0);
    CHECK(contains(b.out, "beta = 0"));

    auto j = run("invariant --kind J " + path);
    CHECK(j.exit_code == 0);
    CHECK(contains(j.out, "J = 6"));
    CHECK(contains(j.out, "curve 0"));

    auto comb = run("invariant --kind combined --g 4 " + path);
    CHECK(comb.exit_code == 0);
    CHECK(contains(comb.out, "combined(g=4) = -1"));

    auto fine = run("invariant --kind fine --label \"Jac(C_k2)\" " + path);
    CHECK(contains(fine.out, "fine(Jac(C_k2)) = -1"));

    std::string p2 = temp_config(build_example("p2_linear_z2"), "p2");
    auto i = run("invariant --kind I " + p2);
    CHECK(i.exit_code == 0);
    CHECK(contains(i.out, "I = 4"));

    // violated precondition is named and exits nonzero
    auto mis = run("invariant --kind I " + path);
    CHECK(mis.exit_code == 1);
    CHECK(contains(mis.out, "requires dim = 2"));
}

TEST_CASE("cli blowup: report, new config, inadmissible centers") {
    Configuration c;
    c.group.p = 3;
    c.dim = 3;
    c.points.push_back({{1, 1, 2}});
    std::string path = temp_config(c, "blow");

    auto r = run("blowup " + path +
                 " --center '{\"kind\":\"isolated_fixed_point\",\"index\":0}' --out "
                 "/tmp/ei_test_blown.json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "case Bl0-b:two-equal"));
    CHECK(contains(r.out, "delta J = 0"));
    Configuration after = load_config("/tmp/ei_test_blown.json");
    CHECK(validate(after).empty());
    CHECK(after.curves.size() == 1);
    CHECK(after.points.size() == 1);

    auto bad = run("blowup " + path + " --center '{\"kind\":\"fixed_curve\",\"index\":0}'");
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.out, "curve index out of range"));

    auto orbit = run("blowup " + path + " --center '{\"kind\":\"free_orbit_point\"}' --out "
                     "/tmp/ei_test_orbit.json");
    CHECK(orbit.exit_code == 0);
    CHECK(contains(orbit.out, "case Bl0-a"));
    Configuration after2 = load_config("/tmp/ei_test_orbit.json");
    CHECK(after2.atoms.size() == 2);
}

TEST_CASE("cli fuzz: exit codes, determinism, self-test") {
    std::string path = temp_config(build_example("trigonal_threefold", {.k = 2}), "fuzz");

    auto ok = run("fuzz " + path + " --steps 40 --seed 3 --check J,combined:4,beta");
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.out, "\"zero_drift\": true"));

    auto again = run("fuzz " + path + " --steps 40 --seed 3 --check J,combined:4,beta");
    CHECK(again.out == ok.out);  // byte-identical output for identical runs

    auto zero = run("fuzz " + path + " --steps 0 --seed 3 --check J");
    CHECK(zero.exit_code == 0);
    CHECK(contains(zero.out, "\"case_histogram\": {}"));

    auto corrupted = run("fuzz " + path + " --steps 10 --seed 3 --check J --selftest-corrupt");
    CHECK(corrupted.exit_code == 1);
    CHECK(contains(corrupted.out, "\"zero_drift\": false"));
    CHECK(contains(corrupted.out, "\"case_label\""));

    auto badcheck = run("fuzz " + path + " --steps 5 --seed 1 --check K");
    CHECK(badcheck.exit_code == 1);
    CHECK(contains(badcheck.out, "not applicable"));
}

TEST_CASE("cli feasible: exit code contract") {
    auto inf = run("feasible --target 3,1 --basis 1,1 --basis 2,1");
    CHECK(inf.exit_code == 2);
    CHECK(contains(inf.out, "infeasible"));

    auto zero = run("feasible --target 0,0 --basis 1,1");
    CHECK(zero.exit_code == 0);
    CHECK(contains(zero.out, "feasible: witness (0)"));

    auto w = run("feasible --target 5,3 --basis 1,1 --basis 2,1");
    CHECK(w.exit_code == 0);
    CHECK(contains(w.out, "witness (1, 2)"));

    auto err = run("feasible --target 1,1 --basis 0,0");
    CHECK(err.exit_code == 1);
}

TEST_CASE("cli example: emission and round-trips") {
    auto listed = run("example --list");
    CHECK(listed.exit_code == 0);
    CHECK(contains(listed.out, "trigonal_threefold"));

    auto bad = run("example unknown_family");
    CHECK(bad.exit_code == 1);

    for (const auto& fam : example_families()) {
        ExampleParams params;
        if (fam == "trigonal_threefold") params.k = 3;
        if (fam == "surface_times_line") params.g = 2;
        Configuration c = build_example(fam, params);
        // parse -> serialize -> parse is the identity on canonical configs
        Configuration c2 = config_from_json(config_to_json(c));
        CHECK(c2 == c);
    }

    auto emitted = run("example p3_linear_z2 --variant point_plane");
    CHECK(emitted.exit_code == 0);
    Configuration parsed = config_from_json(Json::parse(emitted.out));
    CHECK(parsed == build_example("p3_linear_z2", {.variant = "point_plane"}));
}

TEST_CASE("cli atoms: catalog and the obstruction replay") {
    auto cat = run("atoms catalog --p 2");
    CHECK(cat.exit_code == 0);
    CHECK(contains(cat.out, "two points"));

    // configuration whose ledger is the three-atom table
    Configuration c;
    c.group.p = 2;
    c.dim = 3;
    AtomRecord a16;
    a16.hodge_poly = LaurentPoly::constant(1);
    a16.rho = 1;
    a16.rho_g = 1;
    AtomRecord a4;
    a4.hodge_poly = LaurentPoly::constant(4);
    a4.rho = 4;
    a4.rho_g = 2;
    AtomRecord a0;
    LaurentPoly p;
    p.set(-1, 1);
    p.set(0, 3);
    p.set(1, 1);
    a0.hodge_poly = p;
    a0.rho = 5;
    a0.rho_g = 3;
    c.atoms = {a16, a4, a0};
    std::string path = temp_config(c, "x1111");

    auto rep = run("atoms obstruct " + path + " --forced 2,2,2");
    CHECK(rep.exit_code == 2);
    Json j = Json::parse(rep.out);
    CHECK(j.at("any_obstructed").get<bool>());
    CHECK(j.at("verdicts")[0].at("verdict") == "unobstructed");
    CHECK(j.at("verdicts")[1].at("verdict") == "unobstructed");
    CHECK(j.at("verdicts")[2].at("verdict") == "obstructed");
    CHECK(contains(j.at("verdicts")[2].at("narrative").get<std::string>(),
                   "impossible to write (3,1)"));
}

TEST_CASE("serialization: large integers ride as strings") {
    Int big = Int("123456789012345678901234567890");
    Json j = int_to_json(big);
    CHECK(j.is_string());
    CHECK(int_from_json(j) == big);
    Json small = int_to_json(Int(42));
    CHECK(small.is_number_integer());
    CHECK(int_from_json(small) == 42);

    AtomRecord a;
    a.hodge_poly.set(0, big);
    a.rho = big;
    a.rho_g = 1;
    AtomRecord b = atom_from_json(atom_to_json(a));
    CHECK(a == b);
}

TEST_CASE("serialization: center round-trip") {
    BlowupCenter c;
    c.kind = CenterKind::InvariantCurve;
    c.genus = 1;
    c.incidences = {{CurveIncidence::At::Point, 0, 2}, {CurveIncidence::At::Surface, 1, 1}};
    BlowupCenter c2 = center_from_json(center_to_json(c));
    CHECK(c2.kind == c.kind);
    CHECK(c2.genus == c.genus);
    REQUIRE(c2.incidences.size() == 2);
    CHECK(c2.incidences[0].at == CurveIncidence::At::Point);
    CHECK(c2.incidences[0].tangent == 2);
    CHECK(c2.incidences[1].at == CurveIncidence::At::Surface);

    CHECK_THROWS_AS(center_from_json(Json{{"kind", "volcano"}}), std::invalid_argument);
}

TEST_CASE("serialization: unknown format version is rejected") {
    Json j = config_to_json(build_example("p2_linear_z2"));
    j["format_version"] = 99;
    CHECK_THROWS_AS(config_from_json(j), std::invalid_argument);
}
