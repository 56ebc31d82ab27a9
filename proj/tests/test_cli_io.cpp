#include <doctest.h>
#include "sbl/acceptance_suite.hpp"
#include "sbl/json_io.hpp"
#include "sbl/svg.hpp"
#include <cmath>

using namespace sbl;
using nlohmann::json;

TEST_CASE("rational and extended-rational serialization") {
    CHECK(rat_str(Rat(3)) == "3");
    CHECK(rat_str(Rat(-7, 2)) == "-7/2");
    CHECK(rat_from_json(json::parse("\"-7/2\"")) == Rat(-7, 2));
    CHECK(rat_from_json(json(5)) == Rat(5));
    CHECK(rat_from_json(json(0.25)) == Rat(1, 4));
    CHECK_THROWS(rat_from_json(json::parse("\"x/y\"")));
    CHECK(extrat_from_json(json("inf")).is_pos_inf());
    CHECK(extrat_from_json(json("-inf")).is_neg_inf());
    CHECK(extrat_to_json(ExtRat::pos_inf()) == json("inf"));
    ExtRat v(Rat(9, 4));
    CHECK(extrat_from_json(extrat_to_json(v)) == v);
}

TEST_CASE("graded dims round trip") {
    GradedDims d{{-1, 2}, {0, 1}, {3, 5}};
    CHECK(dims_from_json(dims_to_json(d)) == d);
    CHECK(dims_from_json(dims_to_json(GradedDims{})).empty());
}

TEST_CASE("sheaf round trip and malformed input") {
    SheafOnR f{bar(ExtRat(Rat(-3, 2)), ExtRat(Rat(5)), 1),
               half_line(0, -2),
               point_sheaf(ExtRat(Rat(7, 3)))};
    f.field = FieldTag::Q;
    SheafOnR back = sheaf_from_json(sheaf_to_json(f));
    CHECK(back.field == FieldTag::Q);
    CHECK(equal_normalized(back, f));
    // open lower rays survive the -inf sentinel
    SheafOnR ray{open_interval(ExtRat::neg_inf(), ExtRat(Rat(2)))};
    CHECK(equal_normalized(sheaf_from_json(sheaf_to_json(ray)), ray));
    CHECK_THROWS(sheaf_from_json(json::parse(R"({"field":"q"})")));
    CHECK_THROWS(sheaf_from_json(json::parse(
        R"({"field":"q","summands":[{"left":1,"left_closed":true,"right":0,"right_closed":false,"shift":0,"mult":1}]})")));
    CHECK_THROWS(sheaf_from_json(json::parse(R"({"field":"f7","summands":[]})")));
}

TEST_CASE("barcode round trip") {
    Barcode b;
    b.field = FieldTag::F2;
    b.bars = {GradedInterval{ExtRat(0), ExtRat(1), 0, 2},
              GradedInterval{ExtRat(Rat(1, 2)), ExtRat::pos_inf(), -1, 1}};
    Barcode back = barcode_from_json(barcode_to_json(b));
    REQUIRE(back.bars.size() == 2);
    CHECK(back.bars[1].death.is_pos_inf());
    CHECK(barcode_to_json(back) == barcode_to_json(b));
    CHECK_THROWS(barcode_from_json(json::parse(
        R"({"field":"q","bars":[{"birth":"inf","death":"inf","degree":0,"mult":1}]})")));
}

TEST_CASE("hamiltonian round trip, radial and sampled") {
    HamiltonianSpec h = HamiltonianSpec::radial_ball(c1_small_profile(1.0, 0.02), M_PI);
    HamiltonianSpec back = hamiltonian_from_json(hamiltonian_to_json(h));
    CHECK(back.type == HamiltonianSpec::Type::Radial);
    CHECK(back.capacity == h.capacity);
    CHECK(back.profile.breaks() == h.profile.breaks());
    for (double s : {0.1, 0.3, 0.7, 0.95})
        CHECK(back.profile.h(s) == h.profile.h(s));

    SampledGrid g;
    g.x0 = g.y0 = -2;
    g.x1 = g.y1 = 2;
    g.nx = g.ny = 9;
    g.values.assign(81, 0.0);
    g.values[4 * 9 + 4] = 0.5;
    HamiltonianSpec hs = HamiltonianSpec::sampled(g);
    HamiltonianSpec sback = hamiltonian_from_json(hamiltonian_to_json(hs));
    CHECK(sback.type == HamiltonianSpec::Type::Sampled);
    CHECK(sback.grid.values == g.values);
    CHECK_THROWS(hamiltonian_from_json(json::parse(R"({"type":"polar"})")));
}

TEST_CASE("invariant report serialization") {
    InvariantReport r;
    r.window_a = -0.5;
    r.window_b = 1.25;
    r.dims = GradedDims{{0, 1}};
    r.exact = false;
    json j = report_to_json(r);
    CHECK(j["provenance_mode"] == "bounds");
    CHECK(j["window"][1] == 1.25);
    r.exact = true;
    CHECK(report_to_json(r)["provenance_mode"] == "exact");
}

TEST_CASE("svg output is deterministic and well-formed") {
    Barcode b;
    b.bars = {GradedInterval{ExtRat(0), ExtRat(2), 0, 1},
              GradedInterval{ExtRat(1), ExtRat::pos_inf(), 1, 1}};
    std::string s1 = svg_barcode(b, "demo");
    std::string s2 = svg_barcode(b, "demo");
    CHECK(s1 == s2);
    CHECK(s1.find("<svg") != std::string::npos);
    CHECK(s1.find("</svg>") != std::string::npos);
    std::string steps = svg_rank_steps({{0.5, 1}, {1.5, 3}}, "ranks");
    CHECK(steps.find("<svg") != std::string::npos);
    CHECK(svg_rank_steps({{0.5, 1}, {1.5, 3}}, "ranks") == steps);
}

TEST_CASE("acceptance report format is canonical") {
    CriterionResult a{1, "convolution formulas", true, "100/100 exact", 2.5};
    CriterionResult b{2, "rule table", false, "mismatch at flags 0101", 0.1};
    std::string rep = acceptance_report({a, b});
    CHECK(rep == "1\tPASS\tconvolution formulas\t100/100 exact\n"
                 "2\tFAIL\trule table\tmismatch at flags 0101\n");
    // timing changes must not affect the canonical report
    a.seconds = 99.0;
    CHECK(acceptance_report({a, b}) == rep);
}
