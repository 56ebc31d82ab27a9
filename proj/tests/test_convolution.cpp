#include <doctest.h>
#include "sbl/convolution.hpp"
#include "sbl/zigzag.hpp"
#include <cstdlib>
#include <random>

using namespace sbl;

TEST_CASE("paper convolution formulas") {
    Rat a(3, 2), b(5, 4);
    CHECK(equal_normalized(convolve({open_interval(ExtRat(-a), ExtRat(a), 1)},
                                    {open_interval(ExtRat(-b), ExtRat(b), 1)}),
                           SheafOnR{open_interval(ExtRat(-(a + b)), ExtRat(a + b), 1)}));
    CHECK(equal_normalized(convolve({closed_interval(ExtRat(-a), ExtRat(a))},
                                    {open_interval(ExtRat(-a), ExtRat(a), 1)}),
                           SheafOnR{point_sheaf(0)}));
    CHECK(equal_normalized(convolve({half_line(ExtRat(a))}, {half_line(ExtRat(b))}),
                           SheafOnR{half_line(ExtRat(a + b))}));
}

TEST_CASE("point sheaf is the unit; translation by convolution") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(-8, 8);
    for (int i = 0; i < 25; ++i) {
        Rat lo(d(rng));
        SheafOnR f{bar(ExtRat(lo), ExtRat(lo + Rat(1 + std::abs(d(rng)))), d(rng) % 2)};
        CHECK(equal_normalized(convolve({point_sheaf(0)}, f), f));
        Rat c(d(rng));
        CHECK(equal_normalized(convolve({point_sheaf(ExtRat(c))}, f),
                               translate(f, ExtRat(c))));
    }
}

TEST_CASE("idempotents of the projector unit") {
    SheafOnR unit{half_line(0)};
    CHECK(equal_normalized(convolve(unit, unit), unit));
}

TEST_CASE("tamarkin projection normal form") {
    // projection kills the closed negative ray and shifts the open one
    SheafOnR f{IntervalSummand{ExtRat::neg_inf(), false, ExtRat(0), true, 0, 1}};
    CHECK(tamarkin_project(f).summands.empty());
    SheafOnR fo{IntervalSummand{ExtRat::neg_inf(), false, ExtRat(0), false, 0, 1}};
    CHECK(equal_normalized(tamarkin_project(fo), SheafOnR{half_line(0, -1)}));
    SheafOnR g{bar(0, 1)};
    CHECK(equal_normalized(tamarkin_project(g), g));
    // idempotence on a mix
    SheafOnR m{bar(0, 1), half_line(2), open_interval(-1, 1, 1)};
    SheafOnR p = tamarkin_project(m);
    CHECK(equal_normalized(tamarkin_project(p), p));
}

TEST_CASE("convolution is commutative and additive (sampled)") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int i = 0; i < 10; ++i) {
        Rat fa(d(rng)), ga(d(rng));
        SheafOnR f{bar(ExtRat(fa), ExtRat(fa + Rat(1 + std::abs(d(rng)))))};
        SheafOnR g{open_interval(ExtRat(ga), ExtRat(ga + Rat(1 + std::abs(d(rng)))), 1)};
        CHECK(equal_normalized(convolve(f, g), convolve(g, f)));
    }
}

TEST_CASE("stalk oracle agrees with the rule table near endpoints") {
    SheafOnR f{closed_interval(0, 2)}, g{bar(1, 3)};
    SheafOnR conv = convolve(f, g);
    for (Rat t : {Rat(1), Rat(2), Rat(5), Rat(9, 2), Rat(1, 2)}) {
        GradedDims got;
        for (const auto& s : conv.summands) {
            ExtRat e(t);
            bool li = s.left_closed ? s.left <= e : s.left < e;
            bool ri = s.right_closed ? e <= s.right : e < s.right;
            if (li && ri) got.add(-s.shift, s.mult);
        }
        CHECK(got == convolve_stalk_oracle(f, g, ExtRat(t)));
    }
}

TEST_CASE("shom_star adjunction on fixed instances") {
    SheafOnR x{bar(0, 1)}, g{bar(0, 2)}, h{bar(1, 3), half_line(0)};
    CHECK(rhom_graded(convolve(x, g), h) == rhom_graded(x, shom_star(g, h)));
}
