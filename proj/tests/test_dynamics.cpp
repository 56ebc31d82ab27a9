#include <doctest.h>
#include "sbl/hamiltonian.hpp"
#include "sbl/profile.hpp"
#include "sbl/rs_index.hpp"
#include <cmath>
#include <map>
#include <random>

using namespace sbl;

namespace {
Eigen::Matrix2d rot(double a) {
    Eigen::Matrix2d r;
    r << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
    return r;
}
} // namespace

TEST_CASE("cofinal profiles have the required shape") {
    double c = M_PI;
    auto profs = cofinal_profiles(c, {4 * c, 5 * c, 7.5 * c});
    REQUIRE(profs.size() == 3);
    for (const auto& p : profs) {
        CHECK(p.h(0) == doctest::Approx(p.alpha()).epsilon(1e-12));
        CHECK(p.h(p.support_end()) == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(p.max_slope() > 3.5); // peak above mu0
        // integer-peak avoidance: max slope stays off the integers
        CHECK(std::abs(p.max_slope() - std::round(p.max_slope())) > 1e-4);
    }
    // pointwise monotone in alpha
    for (double s = 0; s < profs[1].support_end(); s += 0.01)
        CHECK(profs[0].h(s) <= profs[1].h(s) + 1e-9);
}

TEST_CASE("slope levels vs dense sampling oracle") {
    RadialProfile p = cofinal_profiles(M_PI, {4 * M_PI, 5 * M_PI})[0];
    double f = p.support_end();
    for (int m = 1; m <= int(p.max_slope()); ++m) {
        std::vector<double> roots = p.slope_levels(double(m));
        // oracle: sign changes of -h' - m on a dense grid
        int oracle = 0;
        const int kSamples = 20000;
        double prev = -p.dh(0.0) - m;
        for (int i = 1; i <= kSamples; ++i) {
            double cur = -p.dh(f * i / kSamples) - m;
            if ((prev < 0) != (cur < 0)) ++oracle;
            prev = cur;
        }
        CHECK(int(roots.size()) == oracle);
        for (double r : roots)
            CHECK(-p.dh(r) == doctest::Approx(double(m)).epsilon(1e-8));
    }
}

TEST_CASE("radial flow preserves area and matches rotation") {
    RadialProfile p = c1_small_profile(1.0, 0.02);
    HamiltonianSpec h = HamiltonianSpec::radial_ball(p, 1.0);
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (int i = 0; i < 10; ++i) {
        Vec2 z(u(rng), u(rng));
        Mat2 j = flow_time1_jacobian(h, z);
        CHECK(std::abs(j.determinant() - 1.0) < 1e-6);
        // |z| is conserved
        CHECK(flow_time1(h, z).norm() == doctest::Approx(z.norm()).epsilon(1e-9));
    }
}

TEST_CASE("sampled backend reproduces the radial flow") {
    RadialProfile p = c1_small_profile(1.0, 0.05);
    HamiltonianSpec hr = HamiltonianSpec::radial_ball(p, 1.0);
    // sample it on a grid wide enough that the support is interior
    SampledGrid g;
    g.x0 = g.y0 = -1.2;
    g.x1 = g.y1 = 1.2;
    g.nx = g.ny = 96;
    g.values.resize(std::size_t(g.nx) * g.ny);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            double x = g.x0 + (g.x1 - g.x0) * i / (g.nx - 1);
            double y = g.y0 + (g.y1 - g.y0) * j / (g.ny - 1);
            g.values[std::size_t(j) * g.nx + i] = hr.value(Vec2(x, y));
        }
    HamiltonianSpec hs = HamiltonianSpec::sampled(g);
    for (Vec2 z : {Vec2(0.3, 0.1), Vec2(-0.2, 0.4)}) {
        Vec2 a = flow_time1(hr, z), b = flow_time1(hs, z);
        CHECK((a - b).norm() < 2e-3); // bicubic interpolation error bound
    }
}

TEST_CASE("action quadrature matches the closed form") {
    RadialProfile p = cofinal_profiles(1.0, {4.0, 5.0})[0];
    HamiltonianSpec h = HamiltonianSpec::radial_ball(p, 1.0);
    for (const OrbitDatum& o : fixed_points(h)) {
        if (o.kind != OrbitKind::CircleFamily) continue;
        double r = std::sqrt(o.level / M_PI);
        double s_quad = action_S_quadrature(h, Vec2(r, 0));
        CHECK(s_quad == doctest::Approx(o.action_S).epsilon(1e-6));
        CHECK(o.t_action == -o.action_S);
    }
}

TEST_CASE("fixed point windings match the slope range") {
    // c1-small shape scaled so that -h' peaks between 2 and 3
    RadialProfile p = c1_small_profile(1.0, 0.65);
    REQUIRE(p.max_slope() > 2.0);
    REQUIRE(p.max_slope() < 3.0);
    HamiltonianSpec h = HamiltonianSpec::radial_ball(p, 1.0);
    std::map<int, int> families;
    for (const OrbitDatum& o : fixed_points(h))
        if (o.kind == OrbitKind::CircleFamily) families[-o.winding]++;
    // two crossings (rise and fall) per integer slope value 1, 2
    CHECK(families == std::map<int, int>{{1, 2}, {2, 2}});
}

TEST_CASE("reeb spectrum of quadratic domains") {
    auto s = reeb_spectrum(M_PI, 3);
    REQUIRE(s.size() == 3);
    CHECK(s[0] == doctest::Approx(M_PI));
    CHECK(s[2] == doctest::Approx(3 * M_PI));
}

TEST_CASE("Robbin-Salamon rotation oracle") {
    for (double theta : {0.25, 0.75, 1.5, 2.5}) {
        double got = rs_index([theta](double t) { return rot(2 * M_PI * theta * t); });
        CHECK(got == doctest::Approx(2 * std::floor(theta) + 1).epsilon(1e-12));
    }
    CHECK(rs_index([](double) { return Eigen::Matrix2d::Identity().eval(); }) == 0.0);
    // full rotations are degenerate at the end: half-integer index
    double full = rs_index([](double t) { return rot(2 * M_PI * t); });
    CHECK(full == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("rs_index rejects non-symplectic paths") {
    CHECK_THROWS_AS(rs_index([](double t) {
                        Eigen::Matrix2d m = Eigen::Matrix2d::Identity();
                        m(0, 0) = 1 + t; // det != 1
                        return m;
                    }),
                    std::invalid_argument);
}
