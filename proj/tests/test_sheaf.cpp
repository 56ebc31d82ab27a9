#include <doctest.h>
#include "sbl/sheaf.hpp"
#include "sbl/zigzag.hpp"
#include <random>

using namespace sbl;

TEST_CASE("normalize merges identical summands") {
    SheafOnR f{bar(0, 1), bar(0, 1)};
    SheafOnR n = normalize(f);
    REQUIRE(n.summands.size() == 1);
    CHECK(n.summands[0].mult == 2);
}

TEST_CASE("summand validation") {
    IntervalSummand reversed{ExtRat(1), true, ExtRat(0), false, 0, 1};
    CHECK_THROWS_AS(reversed.validate(), std::invalid_argument);
    IntervalSummand closed_at_inf{ExtRat::neg_inf(), true, ExtRat(0), false, 0, 1};
    CHECK_THROWS_AS(closed_at_inf.validate(), std::invalid_argument);
    IntervalSummand empty{ExtRat(0), true, ExtRat(0), false, 0, 1};
    CHECK_THROWS_AS(empty.validate(), std::invalid_argument);
    CHECK_NOTHROW(point_sheaf(ExtRat(0)).validate());
}

TEST_CASE("translate is a group action") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int i = 0; i < 20; ++i) {
        SheafOnR f{bar(ExtRat(Rat(d(rng))), ExtRat(Rat(20 + d(rng))), d(rng) % 3)};
        Rat a(d(rng)), b(d(rng));
        CHECK(equal_normalized(translate(translate(f, ExtRat(a)), ExtRat(b)),
                               translate(f, ExtRat(a + b))));
    }
    SheafOnR h{half_line(0)};
    CHECK(equal_normalized(translate(h, ExtRat(3)), SheafOnR{half_line(3)}));
}

TEST_CASE("dshift inverts") {
    SheafOnR f{bar(0, 2, 1), point_sheaf(5, -1)};
    CHECK(equal_normalized(dshift(dshift(f, 1), -1), f));
    CHECK(equal_normalized(dshift(f, 0), f));
}

TEST_CASE("quiver model stalks of a half-open interval") {
    // 1_{[0,1)}: strata (-inf,0), {0}, (0,1), {1}, (1,inf)
    ZigzagRep z = quiver_model(SheafOnR{bar(0, 1)});
    REQUIRE(z.stalks.size() == 5);
    CHECK(z.stalks[0].empty());
    CHECK(z.stalks[1].at(0) == 1);
    CHECK(z.stalks[2].at(0) == 1);
    CHECK(z.stalks[3].empty());
    CHECK(z.stalks[4].empty());
}

TEST_CASE("rhom direction on half-lines (convention ledger)") {
    GradedDims fwd = rhom_graded(SheafOnR{half_line(0)}, SheafOnR{half_line(1)});
    GradedDims bwd = rhom_graded(SheafOnR{half_line(1)}, SheafOnR{half_line(0)});
    CHECK(fwd == GradedDims{{0, 1}});
    CHECK(bwd.empty());
}

TEST_CASE("rhom of disjoint points vanishes") {
    CHECK(rhom_graded(SheafOnR{point_sheaf(0)}, SheafOnR{point_sheaf(1)}).empty());
}

TEST_CASE("rhom refinement invariance and additivity") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int i = 0; i < 10; ++i) {
        SheafOnR f{bar(ExtRat(Rat(d(rng))), ExtRat(Rat(10 + d(rng))))};
        SheafOnR g{half_line(ExtRat(Rat(d(rng))))};
        GradedDims base = rhom_graded(f, g);
        CHECK(rhom_graded(f, g, {ExtRat(Rat(d(rng))), ExtRat(Rat(1, 3))}) == base);
        SheafOnR f2{f.summands[0], point_sheaf(ExtRat(Rat(d(rng))))};
        GradedDims extra = rhom_graded(SheafOnR{f2.summands[1]}, g);
        CHECK(rhom_graded(f2, g) == base + extra);
    }
}

TEST_CASE("rhom degree shift") {
    SheafOnR f{bar(0, 1)}, g{bar(0, 2)};
    GradedDims base = rhom_graded(f, g);
    CHECK(rhom_graded(dshift(f, 1), g) == base.shifted(1));
    CHECK(rhom_graded(f, dshift(g, 1)) == base.shifted(-1));
}
