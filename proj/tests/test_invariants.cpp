#include <doctest.h>
#include "sbl/bm.hpp"
#include "sbl/invariants.hpp"
#include <cmath>

using namespace sbl;

TEST_CASE("Borel-Moore reference models") {
    CHECK(bm_homology(PlanarRegion::OpenDisk) == GradedDims{{2, 1}});
    CHECK(bm_homology(PlanarRegion::ClosedComplement).empty());
    CHECK(bm_homology(PlanarRegion::Plane) == GradedDims{{2, 1}});
    CHECK(bm_invariant_degrees(PlanarRegion::OpenDisk) == GradedDims{{0, 1}});
    CHECK(bm_invariant_degrees(PlanarRegion::Plane) == GradedDims{{0, 1}});
}

TEST_CASE("domain construction and spectrum") {
    CHECK_THROWS_AS(DomainSpec::ball(-1.0), std::invalid_argument);
    Mat2 bad;
    bad << 1, 2, 2, 1; // indefinite
    CHECK_THROWS_AS(DomainSpec::quadratic(bad), std::invalid_argument);
    DomainSpec b = DomainSpec::ball(M_PI);
    CHECK(b.capacity() == doctest::Approx(M_PI));
    CHECK(b.min_period() == b.capacity());
    auto sp = b.spectrum(3);
    REQUIRE(sp.size() == 3);
    CHECK(sp[1] == doctest::Approx(2 * M_PI));
    Mat2 q;
    q << 4, 0, 0, 0.25; // det 1: same capacity as the unit ball
    CHECK(DomainSpec::quadratic(q).capacity() == DomainSpec::ball(M_PI).capacity());
}

TEST_CASE("hh_out below the first period") {
    DomainSpec b = DomainSpec::ball(M_PI);
    // Sh_{U^c} below the first period: Borel-Moore of the closed complement
    InvariantReport low = hh_out_window(b, -0.2, 0.4);
    CHECK(low.stabilized);
    CHECK(low.exact);
    CHECK(low.dims == bm_invariant_degrees(PlanarRegion::ClosedComplement));
    CHECK(low.dims.empty());
    InvariantReport neg = hh_out_window(b, -0.8, -0.3);
    CHECK(neg.stabilized);
    CHECK(neg.dims.empty());
}

TEST_CASE("hh_in is the +1 shift of hh_out") {
    DomainSpec b = DomainSpec::ball(M_PI);
    InvariantReport in = hh_in_window(b, 0.2, 0.9);
    InvariantReport out = hh_out_window(b, 0.2, 0.9);
    CHECK(in.stabilized);
    CHECK(in.dims == out.dims.shifted(1));
    CHECK_THROWS_AS(hh_in_window(b, -0.1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(hh_in_window(b, 0.5, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(hh_in_window(b, 3.5, 4.0), std::invalid_argument);
}

TEST_CASE("hh_full: negative and small L") {
    DomainSpec b = DomainSpec::ball(M_PI);
    InvariantReport neg = hh_full(b, -2.0);
    CHECK(neg.stabilized);
    CHECK(neg.exact);
    CHECK(neg.dims.empty());
    CHECK_THROWS_AS(hh_full(b, 0.0), std::invalid_argument);
    InvariantReport small = hh_full(b, 0.05);
    CHECK(small.stabilized);
    CHECK(small.exact);
    CHECK(small.dims == GradedDims{{0, 1}});
}

TEST_CASE("nine diagram below the first period") {
    DomainSpec b = DomainSpec::ball(M_PI);
    NineDiagramReport nd = nine_diagram_check(b, 0.3, 1.0);
    CHECK(nd.consistent);
    CHECK(nd.exact);
    CHECK(nd.failures.empty());
    // Gamma(M) column: {0:1} exactly when 0 is inside the window
    CHECK(nd.entries[0][1].dims == GradedDims{{0, 1}});
    CHECK(nd.entries[1][1].dims == GradedDims{{0, 1}});
    CHECK(nd.entries[2][1].dims.empty());
    // T(U) top row agrees with the level-0 Borel-Moore dictionary
    CHECK(nd.entries[0][2].dims == bm_invariant_degrees(PlanarRegion::OpenDisk));
    CHECK_THROWS_AS(nine_diagram_check(b, 1.0, 0.3), std::invalid_argument);
}

TEST_CASE("window across the first period of a small ball") {
    DomainSpec u = DomainSpec::ball(0.5);
    std::vector<double> alphas = default_alpha_schedule(0.5);
    if (alphas.size() > 6) alphas.resize(6);
    u.set_schedule(alphas);
    InvariantReport out = hh_out_window(u, 0.1, 0.7);
    CHECK(out.stabilized);
    CHECK(out.exact);
    CHECK(out.dims.total() > 0);
    InvariantReport in = hh_in_window(u, 0.1, 0.7);
    CHECK(in.dims == out.dims.shifted(1));
}
