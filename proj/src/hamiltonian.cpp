#include "sbl/hamiltonian.hpp"
#include "sbl/rs_index.hpp"
#include <cmath>
#include <stdexcept>

namespace sbl {

namespace {

Mat2 Jstd() {
    Mat2 J;
    J << 0, -1, 1, 0; // R(theta) = exp(theta J), CCW
    return J;
}

Mat2 rot(double th) {
    Mat2 R;
    R << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
    return R;
}

// Catmull-Rom weights for the 4-point stencil, local coordinate t in [0,1].
void cr_weights(double t, double w[4]) {
    w[0] = 0.5 * (-t + 2 * t * t - t * t * t);
    w[1] = 0.5 * (2 - 5 * t * t + 3 * t * t * t);
    w[2] = 0.5 * (t + 4 * t * t - 3 * t * t * t);
    w[3] = 0.5 * (-t * t + t * t * t);
}

void cr_dweights(double t, double w[4]) {
    w[0] = 0.5 * (-1 + 4 * t - 3 * t * t);
    w[1] = 0.5 * (-10 * t + 9 * t * t);
    w[2] = 0.5 * (1 + 8 * t - 9 * t * t);
    w[3] = 0.5 * (-2 * t + 3 * t * t);
}

void cr_d2weights(double t, double w[4]) {
    w[0] = 0.5 * (4 - 6 * t);
    w[1] = 0.5 * (-10 + 18 * t);
    w[2] = 0.5 * (8 - 18 * t);
    w[3] = 0.5 * (-2 + 6 * t);
}

} // namespace

void SampledGrid::validate() const {
    if (nx < 8 || ny < 8 || int64_t(nx) * ny != int64_t(values.size()) ||
        !(x0 < x1) || !(y0 < y1))
        throw std::invalid_argument("SampledGrid: malformed grid");
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            if (i < 2 || j < 2 || i >= nx - 2 || j >= ny - 2)
                if (values[std::size_t(j) * nx + i] != 0.0)
                    throw std::invalid_argument(
                        "SampledGrid: values must vanish on the boundary shell");
}

// deriv: 0 = value, 1 = d/dx, 2 = d/dy, 3 = d2/dx2, 4 = d2/dxdy, 5 = d2/dy2
static double sampled_eval(const SampledGrid& g, double x, double y, int deriv) {
    double hx = (g.x1 - g.x0) / (g.nx - 1), hy = (g.y1 - g.y0) / (g.ny - 1);
    double u = (x - g.x0) / hx, v = (y - g.y0) / hy;
    if (u < 1 || v < 1 || u > g.nx - 2 || v > g.ny - 2) return 0.0; // zero shell
    int i0 = std::min(int(u), g.nx - 3), j0 = std::min(int(v), g.ny - 3);
    double tu = u - i0, tv = v - j0;
    double wu[4], wv[4];
    int du = (deriv == 1 || deriv == 4) ? 1 : (deriv == 3 ? 2 : 0);
    int dv = (deriv == 2 || deriv == 4) ? 1 : (deriv == 5 ? 2 : 0);
    (du == 0 ? cr_weights : du == 1 ? cr_dweights : cr_d2weights)(tu, wu);
    (dv == 0 ? cr_weights : dv == 1 ? cr_dweights : cr_d2weights)(tv, wv);
    double acc = 0;
    for (int b = 0; b < 4; ++b) {
        int j = j0 - 1 + b;
        double row = 0;
        for (int a = 0; a < 4; ++a)
            row += wu[a] * g.values[std::size_t(j) * g.nx + (i0 - 1 + a)];
        acc += wv[b] * row;
    }
    double s = 1.0;
    for (int k = 0; k < du; ++k) s /= hx;
    for (int k = 0; k < dv; ++k) s /= hy;
    return acc * s;
}

double SampledGrid::value(double x, double y) const { return sampled_eval(*this, x, y, 0); }

Vec2 SampledGrid::gradient(double x, double y) const {
    return Vec2(sampled_eval(*this, x, y, 1), sampled_eval(*this, x, y, 2));
}

HamiltonianSpec HamiltonianSpec::radial(RadialProfile p, const Mat2& Q) {
    double det = Q.determinant();
    if (det <= 0 || Q(0, 1) != Q(1, 0) || Q(0, 0) <= 0)
        throw std::invalid_argument("HamiltonianSpec: Q must be positive definite symmetric");
    HamiltonianSpec H;
    H.type = Type::Radial;
    H.profile = std::move(p);
    H.Q = Q;
    H.capacity = M_PI / std::sqrt(det);
    return H;
}

HamiltonianSpec HamiltonianSpec::radial_ball(RadialProfile p, double capacity) {
    // {pi |z|^2 < c}: Q = (pi/c) I, det = pi^2/c^2, capacity = c.
    if (capacity <= 0) throw std::invalid_argument("radial_ball: capacity <= 0");
    Mat2 Q = (M_PI / capacity) * Mat2::Identity();
    return radial(std::move(p), Q);
}

HamiltonianSpec HamiltonianSpec::sampled(SampledGrid g) {
    g.validate();
    HamiltonianSpec H;
    H.type = Type::Sampled;
    H.grid = std::move(g);
    return H;
}

double HamiltonianSpec::s_of(const Vec2& z) const {
    return capacity * z.dot(Q * z);
}

double HamiltonianSpec::value(const Vec2& z) const {
    if (type == Type::Radial) return profile.h(s_of(z));
    return grid.value(z(0), z(1));
}

Vec2 HamiltonianSpec::hamiltonian_vector_field(const Vec2& z) const {
    // z = (q,p), omega = dp ^ dq, i_X omega = -dH  =>  X = (H_p, -H_q).
    Vec2 g;
    if (type == Type::Radial) g = profile.dh(s_of(z)) * capacity * 2.0 * (Q * z);
    else g = grid.gradient(z(0), z(1));
    return Vec2(g(1), -g(0));
}

Mat2 HamiltonianSpec::normalizer() const {
    if (type != Type::Radial) throw std::logic_error("normalizer: radial only");
    Mat2 M = (capacity / M_PI) * Q; // det M = 1; need B with B^-T B^-1 = M
    Mat2 Msqrt = (M + Mat2::Identity()) / std::sqrt(M.trace() + 2.0);
    return Msqrt.inverse();
}

namespace {

// Dormand-Prince RK45 on the autonomous field f, from time 0 to T.
template <int D>
Eigen::Matrix<double, D, 1>
rk45(const std::function<Eigen::Matrix<double, D, 1>(const Eigen::Matrix<double, D, 1>&)>& f,
     Eigen::Matrix<double, D, 1> y, double T, double tol) {
    using V = Eigen::Matrix<double, D, 1>;
    static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    double t = 0, h = T / 16.0;
    int guard = 0;
    while (t < T) {
        if (++guard > 2000000) throw std::runtime_error("rk45: step count exceeded");
        if (t + h > T) h = T - t;
        V k1 = f(y);
        V k2 = f(y + h * (1.0 / 5) * k1);
        V k3 = f(y + h * ((3.0 / 40) * k1 + (9.0 / 40) * k2));
        V k4 = f(y + h * ((44.0 / 45) * k1 - (56.0 / 15) * k2 + (32.0 / 9) * k3));
        V k5 = f(y + h * ((19372.0 / 6561) * k1 - (25360.0 / 2187) * k2 +
                          (64448.0 / 6561) * k3 - (212.0 / 729) * k4));
        V k6 = f(y + h * ((9017.0 / 3168) * k1 - (355.0 / 33) * k2 +
                          (46732.0 / 5247) * k3 + (49.0 / 176) * k4 -
                          (5103.0 / 18656) * k5));
        V y5 = y + h * ((35.0 / 384) * k1 + (500.0 / 1113) * k3 + (125.0 / 192) * k4 -
                        (2187.0 / 6784) * k5 + (11.0 / 84) * k6);
        V k7 = f(y5);
        V y4 = y + h * ((5179.0 / 57600) * k1 + (7571.0 / 16695) * k3 +
                        (393.0 / 640) * k4 - (92097.0 / 339200) * k5 +
                        (187.0 / 2100) * k6 + (1.0 / 40) * k7);
        double err = (y5 - y4).template lpNorm<Eigen::Infinity>();
        double scale = tol * std::max(1.0, y.template lpNorm<Eigen::Infinity>());
        if (err <= scale || h <= 1e-13) {
            if (h <= 1e-13 && err > scale)
                throw std::runtime_error("flow integration: step underflow");
            t += h;
            y = y5;
        }
        double fac = err > 0 ? 0.9 * std::pow(scale / err, 0.2) : 4.0;
        h *= std::clamp(fac, 0.1, 4.0);
        (void)c2; (void)c3; (void)c4; (void)c5;
    }
    return y;
}

} // namespace

Vec2 flow_time(const HamiltonianSpec& H, const Vec2& z, double t) {
    if (H.type == HamiltonianSpec::Type::Radial) {
        Mat2 B = H.normalizer();
        Vec2 w = B.inverse() * z;
        double s = M_PI * w.squaredNorm();
        double mt = -H.profile.dh(s); // m~ >= 0 for decreasing profiles
        return B * (rot(2.0 * M_PI * mt * t) * w);
    }
    if (t == 0.0) return z;
    std::function<Vec2(const Vec2&)> f = [&H](const Vec2& y) {
        return H.hamiltonian_vector_field(y);
    };
    return rk45<2>(f, z, t, 1e-9);
}

Vec2 flow_time1(const HamiltonianSpec& H, const Vec2& z) { return flow_time(H, z, 1.0); }

Mat2 flow_time1_jacobian(const HamiltonianSpec& H, const Vec2& z) {
    if (H.type == HamiltonianSpec::Type::Radial) {
        Mat2 B = H.normalizer();
        Vec2 w = B.inverse() * z;
        double s = M_PI * w.squaredNorm();
        double a = -2.0 * M_PI * H.profile.dh(s);
        double ap = -2.0 * M_PI * H.profile.d2h(s);
        Mat2 D = rot(a) * (Mat2::Identity() +
                           2.0 * M_PI * ap * (Jstd() * w) * w.transpose());
        return B * D * B.inverse();
    }
    // Variational equation: state (z, vec(M)), M' = A(z) M.
    using V6 = Eigen::Matrix<double, 6, 1>;
    std::function<V6(const V6&)> f = [&H](const V6& y) {
        double x = y(0), yy = y(1);
        double hxy = sampled_eval(H.grid, x, yy, 4);
        double hxx = sampled_eval(H.grid, x, yy, 3);
        double hyy = sampled_eval(H.grid, x, yy, 5);
        Mat2 A;
        A << hxy, hyy, -hxx, -hxy; // d/dz (H_y, -H_x)
        Mat2 M;
        M << y(2), y(3), y(4), y(5);
        Vec2 g = H.grid.gradient(x, yy);
        Mat2 Md = A * M;
        V6 out;
        out << g(1), -g(0), Md(0, 0), Md(0, 1), Md(1, 0), Md(1, 1);
        return out;
    };
    V6 y0;
    y0 << z(0), z(1), 1, 0, 0, 1;
    V6 y = rk45<6>(f, y0, 1.0, 1e-10);
    Mat2 M;
    M << y(2), y(3), y(4), y(5);
    return M;
}

double action_S_quadrature(const HamiltonianSpec& H, const Vec2& z) {
    // S = int_0^1 (p qdot - H) dt along the orbit through z.
    using V3 = Eigen::Matrix<double, 3, 1>;
    std::function<V3(const V3&)> f = [&H](const V3& y) {
        Vec2 zz(y(0), y(1));
        Vec2 X = H.hamiltonian_vector_field(zz);
        V3 out;
        out << X(0), X(1), zz(1) * X(0) - H.value(zz);
        return out;
    };
    V3 y0;
    y0 << z(0), z(1), 0.0;
    return rk45<3>(f, y0, 1.0, 1e-10)(2);
}

Mat2 radial_linearized_path(const RadialProfile& prof, double s0, double t) {
    double a = -2.0 * M_PI * prof.dh(s0);
    double ap = -2.0 * M_PI * prof.d2h(s0);
    Vec2 w(std::sqrt(s0 / M_PI), 0.0);
    return rot(a * t) *
           (Mat2::Identity() + 2.0 * M_PI * ap * t * (Jstd() * w) * w.transpose());
}

std::vector<OrbitDatum> fixed_points(const HamiltonianSpec& H) {
    std::vector<OrbitDatum> out;
    if (H.type == HamiltonianSpec::Type::Radial) {
        const RadialProfile& pr = H.profile;
        double ms = pr.max_slope();
        if (pr.alpha() == 0.0 && ms < 1e-12) {
            OrbitDatum o;
            o.kind = OrbitKind::Constant;
            o.note = "everything-fixed";
            o.nondegenerate = false;
            out.push_back(o);
            return out;
        }
        { // plateau constants, H = alpha there
            OrbitDatum o;
            o.kind = OrbitKind::Constant;
            o.level = 0.0;
            o.action_S = -pr.alpha();
            o.t_action = pr.alpha();
            o.note = "plateau";
            out.push_back(o);
        }
        { // exterior constants, H = 0
            OrbitDatum o;
            o.kind = OrbitKind::Constant;
            o.level = pr.support_end();
            o.action_S = 0.0;
            o.t_action = 0.0;
            o.note = "exterior";
            out.push_back(o);
        }
        for (int m = 1; m <= int(std::floor(ms + 1e-9)); ++m) {
            for (double s0 : pr.slope_levels(double(m))) {
                OrbitDatum o;
                o.kind = OrbitKind::CircleFamily;
                o.winding = -m; // h'(s0) = -m
                o.level = s0;
                o.action_S = -double(m) * s0 - pr.h(s0);
                o.t_action = -o.action_S;
                o.nondegenerate = std::abs(pr.d2h(s0)) > 1e-9;
                o.rs = rs_index(
                    [&pr, s0](double t) { return radial_linearized_path(pr, s0, t); });
                // degree = n - CZ with n = 1; for a family, report the lower
                // of the two split degrees 1 - (rs +- 1/2).
                double two_rs = 2.0 * o.rs;
                if (std::abs(two_rs - std::round(two_rs)) > 1e-6)
                    throw std::runtime_error("fixed_points: non-half-integer RS index");
                if (std::abs(o.rs - std::round(o.rs)) < 0.25)
                    o.degree = int(std::lround(1.0 - o.rs));
                else
                    o.degree = int(std::lround(0.5 - o.rs));
                out.push_back(o);
            }
        }
        return out;
    }
    // Sampled: Newton refinement of phi_1(z) - z from grid seeds.
    const SampledGrid& g = H.grid;
    double sx = (g.x1 - g.x0), sy = (g.y1 - g.y0);
    const int S = 24;
    for (int j = 1; j < S; ++j)
        for (int i = 1; i < S; ++i) {
            Vec2 z(g.x0 + sx * i / S, g.y0 + sy * j / S);
            bool ok = false;
            for (int it = 0; it < 40; ++it) {
                Vec2 r = flow_time1(H, z) - z;
                if (r.norm() < 1e-9 * std::max(1.0, z.norm())) { ok = true; break; }
                Mat2 Df = flow_time1_jacobian(H, z) - Mat2::Identity();
                Eigen::FullPivLU<Mat2> lu(Df);
                if (lu.rcond() < 1e-12) break;
                Vec2 step = lu.solve(-r);
                double cap = 0.1 * std::max(sx, sy);
                if (step.norm() > cap) step *= cap / step.norm();
                z += step;
            }
            if (!ok) continue;
            if (z(0) < g.x0 || z(0) > g.x1 || z(1) < g.y0 || z(1) > g.y1) continue;
            OrbitDatum o;
            o.kind = OrbitKind::Constant;
            o.level = M_PI * z.squaredNorm(); // reference level coordinate
            o.action_S = action_S_quadrature(H, z);
            o.t_action = -o.action_S;
            o.nondegenerate =
                std::abs((flow_time1_jacobian(H, z) - Mat2::Identity()).determinant()) >
                1e-6;
            o.note = "newton";
            bool seen = false;
            for (const auto& p : out)
                if (p.note == "newton" && std::abs(p.level - o.level) < 1e-4 &&
                    std::abs(p.t_action - o.t_action) < 1e-6)
                    seen = true;
            if (!seen) out.push_back(o);
        }
    return out;
}

std::vector<double> reeb_spectrum(double capacity, int k_max) {
    if (capacity <= 0) throw std::invalid_argument("reeb_spectrum: capacity <= 0");
    std::vector<double> v;
    for (int k = 1; k <= k_max; ++k) v.push_back(k * capacity);
    return v;
}

} // namespace sbl
