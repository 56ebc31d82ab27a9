#include <doctest.h>
#include "sbl/persistence.hpp"
#include "sbl/convolution.hpp"
#include <random>

using namespace sbl;

TEST_CASE("barcode round trip") {
    SheafOnR f{bar(0, 1, -1), half_line(2, 0), bar(Rat(1, 2), Rat(3, 2))};
    Barcode b = to_barcode(f);
    CHECK(equal_normalized(from_barcode(b), f));
}

TEST_CASE("to_barcode rejects non-normal form") {
    CHECK_THROWS_AS(to_barcode(SheafOnR{open_interval(0, 1)}), std::invalid_argument);
}

TEST_CASE("gamma sampling of a bar") {
    // Gamma_{[c,inf)}(1_{[a,b)}) = k in degree 1 exactly for c in (a,b]
    SheafOnR f{bar(0, 2)};
    CHECK(sample_gamma(f, ExtRat(1)) == GradedDims{{1, 1}});
    CHECK(sample_gamma(f, ExtRat(2)) == GradedDims{{1, 1}});
    CHECK(sample_gamma(f, ExtRat(0)).empty());
    CHECK(sample_gamma(f, ExtRat(-1)).empty());
    CHECK(sample_gamma(f, ExtRat(3)).empty());
}

TEST_CASE("torsion predicate") {
    // every Tamarkin normal form is torsion, rays included: the sampling
    // vanishes beyond the last birth
    CHECK(is_torsion(to_barcode(SheafOnR{bar(0, 5)})).torsion);
    Barcode half;
    half.bars.push_back({ExtRat(0), ExtRat::pos_inf(), 0, 1});
    TorsionReport tr = is_torsion(half);
    CHECK(tr.torsion);
    CHECK(tr.value_at_infinity.empty());
}

TEST_CASE("window dims: sheaf path and barcode fast path agree") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int i = 0; i < 20; ++i) {
        SheafOnR f{bar(ExtRat(Rat(d(rng))), ExtRat(Rat(8 + d(rng))), d(rng) % 3),
                   half_line(ExtRat(Rat(d(rng))))};
        f = normalize(f);
        Rat a(d(rng)), b(a + Rat(4 + (d(rng) & 3)));
        GradedDims slow = window_dims(f, ExtRat(a), ExtRat(b));
        GradedDims fast = window_dims(to_barcode(f), ExtRat(a), ExtRat(b));
        CHECK(slow == fast);
    }
}

TEST_CASE("window LES consistency") {
    Barcode b = to_barcode(normalize(SheafOnR{bar(0, 3), bar(1, 5, 1), half_line(2)}));
    LesReport r = window_les_check(b, ExtRat(-1), ExtRat(2), ExtRat(4));
    CHECK(r.pass);
}

TEST_CASE("barcode csv is deterministic") {
    Barcode b = to_barcode(SheafOnR{bar(0, 1), bar(2, 3, 1)});
    CHECK(barcode_csv(b) == barcode_csv(b));
    CHECK(barcode_csv(b).find("birth") != std::string::npos);
}
