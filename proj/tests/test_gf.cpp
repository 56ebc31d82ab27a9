#include <doctest.h>
#include "sbl/broken_gf.hpp"
#include "sbl/cubical.hpp"
#include "sbl/gf_engine.hpp"
#include "sbl/grid_kernels.hpp"
#include "sbl/morse_bott.hpp"
#include "sbl/profile.hpp"
#include <cmath>
#include <cstring>
#include <random>

using namespace sbl;

namespace {
HamiltonianSpec small_ball() {
    return HamiltonianSpec::radial_ball(c1_small_profile(1.0, 0.02), M_PI);
}
} // namespace

TEST_CASE("broken GF critical values telescope to orbit actions") {
    RadialProfile p = cofinal_profiles(M_PI, {4.5 * M_PI})[0];
    HamiltonianSpec H = HamiltonianSpec::radial_ball(p, M_PI);
    int N = recommended_steps(p);
    BrokenGF gf = gf_build(H, N);
    int families = 0;
    for (const OrbitDatum& o : fixed_points(H)) {
        if (o.kind != OrbitKind::CircleFamily) continue;
        ++families;
        int m = -o.winding;
        REQUIRE(m >= 1);
        std::vector<Vec2> z = gf.critical_config(o.level, m);
        CHECK(std::abs(gf.eval(z) - o.t_action) < 1e-10);
        double gmax = 0;
        for (const Vec2& g : gf.grad(z)) gmax = std::max(gmax, g.norm());
        CHECK(gmax < 1e-8);
    }
    CHECK(families >= 2);
    // every family action appears among the interior critical values
    std::vector<double> cv = gf.interior_critical_values();
    for (const OrbitDatum& o : fixed_points(H)) {
        if (o.kind != OrbitKind::CircleFamily) continue;
        bool found = false;
        for (double v : cv) found = found || std::abs(v - o.t_action) < 1e-9;
        CHECK(found);
    }
}

TEST_CASE("gf_build rejects even N and oversized steps") {
    RadialProfile p = cofinal_profiles(M_PI, {4.5 * M_PI})[0];
    HamiltonianSpec H = HamiltonianSpec::radial_ball(p, M_PI);
    CHECK_THROWS(gf_build(H, 2));
    CHECK_THROWS(gf_build(H, 0));
    CHECK_THROWS(gf_build(H, 1)); // step angle exceeds the scheme threshold
    int N = recommended_steps(p);
    CHECK(N % 2 == 1);
    CHECK_NOTHROW(gf_build(H, N));
}

TEST_CASE("scalar and AVX2 action kernels are bit-identical") {
    BrokenGF gf = gf_build(small_ball(), 1);
    RadialKernelParams params = make_kernel_params(gf);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> d(0.0, 1.8 * gf.sigma_of(params.s_hi));
    for (std::size_t n : {std::size_t(1), std::size_t(7), std::size_t(1024)}) {
        std::vector<double> sigma(n), a(n, -1), b(n, -2), c(n, -3);
        for (double& x : sigma) x = d(rng);
        eval_action_scalar(sigma.data(), a.data(), n, params);
        eval_action(sigma.data(), c.data(), n, params);
        CHECK(std::memcmp(a.data(), c.data(), n * sizeof(double)) == 0);
        if (avx2_supported()) {
            eval_action_avx2(sigma.data(), b.data(), n, params);
            CHECK(std::memcmp(a.data(), b.data(), n * sizeof(double)) == 0);
        }
    }
}

TEST_CASE("scalar and AVX2 corner-range kernels are bit-identical") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> d(-5, 5);
    for (int nx : {2, 5, 33}) {
        int ny = nx + 1;
        std::vector<double> vals(std::size_t(nx) * ny);
        for (double& v : vals) v = d(rng);
        std::size_t nc = std::size_t(nx - 1) * (ny - 1);
        std::vector<double> mn1(nc), mx1(nc), mn2(nc), mx2(nc), mn3(nc), mx3(nc);
        cell_corner_range_scalar(vals.data(), nx, ny, mn1.data(), mx1.data());
        cell_corner_range(vals.data(), nx, ny, mn3.data(), mx3.data());
        CHECK(std::memcmp(mn1.data(), mn3.data(), nc * sizeof(double)) == 0);
        CHECK(std::memcmp(mx1.data(), mx3.data(), nc * sizeof(double)) == 0);
        if (avx2_supported()) {
            cell_corner_range_avx2(vals.data(), nx, ny, mn2.data(), mx2.data());
            CHECK(std::memcmp(mn1.data(), mn2.data(), nc * sizeof(double)) == 0);
            CHECK(std::memcmp(mx1.data(), mx2.data(), nc * sizeof(double)) == 0);
        }
        // oracle: brute-force corner min/max
        for (int j = 0; j < ny - 1; ++j)
            for (int i = 0; i < nx - 1; ++i) {
                double c00 = vals[j * nx + i], c10 = vals[j * nx + i + 1];
                double c01 = vals[(j + 1) * nx + i], c11 = vals[(j + 1) * nx + i + 1];
                CHECK(mn1[j * (nx - 1) + i] == std::min(std::min(c00, c10), std::min(c01, c11)));
                CHECK(mx1[j * (nx - 1) + i] == std::max(std::max(c00, c10), std::max(c01, c11)));
            }
    }
}

TEST_CASE("cubical pair homology hand cases") {
    // (disk, boundary circle): H_2 = 1
    PairComplexGrid P;
    P.nx = P.ny = 5;
    P.vX.assign(25, 1);
    P.ehX.assign(4 * 5, 1);
    P.evX.assign(5 * 4, 1);
    P.sX.assign(16, 1);
    P.vA.assign(25, 0);
    P.ehA.assign(20, 0);
    P.evA.assign(20, 0);
    P.sA.assign(16, 0);
    for (int j = 0; j < 5; ++j)
        for (int i = 0; i < 5; ++i)
            if (i == 0 || j == 0 || i == 4 || j == 4) P.vA[j * 5 + i] = 1;
    for (int j = 0; j < 5; ++j)
        for (int i = 0; i < 4; ++i)
            if (j == 0 || j == 4) P.ehA[j * 4 + i] = 1;
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 5; ++i)
            if (i == 0 || i == 4) P.evA[j * 5 + i] = 1;
    P.validate();
    CHECK(pair_homology(P) == GradedDims{{2, 1}});

    // single point, empty A: H_0 = 1
    PairComplexGrid Q;
    Q.nx = Q.ny = 2;
    Q.vX.assign(4, 0);
    Q.vX[0] = 1;
    Q.vA.assign(4, 0);
    Q.ehX.assign(2, 0);
    Q.ehA.assign(2, 0);
    Q.evX.assign(2, 0);
    Q.evA.assign(2, 0);
    Q.sX.assign(1, 0);
    Q.sA.assign(1, 0);
    Q.validate();
    CHECK(pair_homology(Q) == GradedDims{{0, 1}});

    // full grid minus the open star of the center node: an annulus,
    // H_0 = H_1 = 1
    PairComplexGrid R;
    R.nx = R.ny = 5;
    R.vX.assign(25, 1);
    R.ehX.assign(20, 1);
    R.evX.assign(20, 1);
    R.sX.assign(16, 1);
    R.vX[2 * 5 + 2] = 0;
    R.ehX[2 * 4 + 1] = R.ehX[2 * 4 + 2] = 0; // horizontal edges at (1,2),(2,2)
    R.evX[1 * 5 + 2] = R.evX[2 * 5 + 2] = 0; // vertical edges at (2,1),(2,2)
    R.sX[1 * 4 + 1] = R.sX[1 * 4 + 2] = R.sX[2 * 4 + 1] = R.sX[2 * 4 + 2] = 0;
    R.vA.assign(25, 0);
    R.ehA.assign(20, 0);
    R.evA.assign(20, 0);
    R.sA.assign(16, 0);
    R.validate();
    CHECK(pair_homology(R) == GradedDims{{0, 1}, {1, 1}});
}

TEST_CASE("sublevel pair of the zero function") {
    std::vector<double> zeros(129 * 129, 0.0);
    CHECK(sublevel_pair_grid(zeros, 129, 129, -0.5, 0.5) == GradedDims{{2, 1}});
    CHECK(sublevel_pair_grid(zeros, 129, 129, 0.0, 0.5).empty());
    CHECK(sublevel_pair_grid(zeros, 129, 129, -1.0, -0.5).empty());
    CHECK(sublevel_pair_grid(zeros, 129, 129, 0.5, 1.0).empty());
}

TEST_CASE("morse-bott complex: plateau, exterior, window errors") {
    RadialProfile p = c1_small_profile(1.0, 0.02);
    RadialOrbitTable table(p);
    // plateau window (contains t = alpha only)
    FilteredComplex fc = morse_bott_complex(table, 0.01, 0.03);
    CHECK_FALSE(fc.indeterminate);
    CHECK(fc.homology() == GradedDims{{0, 1}});
    // window containing only the exterior value t = 0 contributes nothing
    CHECK(morse_bott_complex(table, -0.01, 0.005).homology().empty());
    // window strictly between the two critical values, shifted off 0
    CHECK(morse_bott_complex(table, 0.005, 0.015).homology().empty());
    // boundary touching a critical action value throws
    CHECK_THROWS_AS(morse_bott_complex(table, 0.0, 0.03), WindowError);
    CHECK_THROWS_AS(morse_bott_complex(table, -0.01, 0.02), WindowError);
}

TEST_CASE("grid window rejects insufficient resolution and touched values") {
    HamiltonianSpec H = small_ball();
    // boundary within the oscillation bound of the critical value 0
    CHECK_THROWS_AS(gf_homology_window(H, -0.0002, 0.0002, GfBackend::Grid, 17),
                    WindowError);
    // boundary exactly on a critical value
    CHECK_THROWS_AS(gf_homology_window(H, 0.0, 0.01, GfBackend::Grid, 257),
                    WindowError);
}

TEST_CASE("grid and combinatorial windows agree on a C1-small ball") {
    HamiltonianSpec H = small_ball();
    // below the plateau value: the sublevel pair is an annulus rel outer ring
    {
        WindowDims g = gf_homology_window(H, -0.007, 0.0137, GfBackend::Grid, 257);
        WindowDims c = gf_homology_window(H, -0.007, 0.0137, GfBackend::Combinatorial);
        REQUIRE(c.exact);
        REQUIRE(g.exact);
        CHECK(g.dims == c.dims);
        CHECK(c.dims.empty());
    }
    // across the plateau value alpha = 0.02: the full pair class appears
    {
        WindowDims g = gf_homology_window(H, -0.007, 0.0437, GfBackend::Grid, 257);
        WindowDims c = gf_homology_window(H, -0.007, 0.0437, GfBackend::Combinatorial);
        REQUIRE(c.exact);
        REQUIRE(g.exact);
        CHECK(g.dims == c.dims);
        CHECK(c.dims == GradedDims{{0, 1}});
    }
}

TEST_CASE("stabilized limit on the ball: low window and H-zero law") {
    StabilizationContext ctx(M_PI, default_alpha_schedule(M_PI));
    // window below the first Reeb period: the plateau value escapes upward
    // along the schedule and the stabilized content is empty
    StabilizedResult r = stabilized_gf(ctx, -0.123, 0.456);
    CHECK(r.stabilized);
    CHECK(r.exact);
    CHECK(r.dims.empty());
    // b <= 0: empty, immediately stabilized
    StabilizedResult z = stabilized_gf(ctx, -1.0, -0.25);
    CHECK(z.stabilized);
    CHECK(z.dims.empty());
    // grid backend is rejected for the cofinal sequence
    CHECK_THROWS(stabilized_gf(ctx, -0.1, 0.1, GfBackend::Grid));
}
