#pragma once
#include "sbl/profile.hpp"
#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace sbl {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

enum class OrbitKind { Constant, CircleFamily };

// A 1-periodic orbit record.  Sign conventions: winding k = h'(s0) (a
// non-positive integer for decreasing profiles), S = k*s0 - h(s0),
// t_action = -S, degree = n - CZ with n = 1.
struct OrbitDatum {
    OrbitKind kind = OrbitKind::Constant;
    int winding = 0;
    double level = 0;    // s0, in area units; for Constant, a representative level
    double action_S = 0;
    double t_action = 0; // = -action_S exactly
    double rs = 0;       // Robbin-Salamon index of the linearized return path
    int degree = 0;      // n - CZ, n = 1
    bool nondegenerate = false;
    std::string note;    // "plateau", "exterior", "everything-fixed", ...
};

// Sampled Hamiltonian on a box: bicubic (Catmull-Rom) interpolation of grid
// values; values must vanish on the outermost two grid shells.
struct SampledGrid {
    double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    int nx = 0, ny = 0;
    std::vector<double> values; // row-major, v[j*nx + i] at (x_i, y_j)

    double value(double x, double y) const;
    Vec2 gradient(double x, double y) const;
    void validate() const;
};

struct HamiltonianSpec {
    enum class Type { Radial, Sampled };
    Type type = Type::Radial;

    // Radial: H(z) = h(s(z)) with s(z) = c * z^T Q z, domain {z^T Q z < 1}
    // of capacity c = pi / sqrt(det Q).  Q = I/ r^2 gives the ball of radius r.
    RadialProfile profile;
    Mat2 Q = Mat2::Identity();
    double capacity = 0;

    SampledGrid grid;

    static HamiltonianSpec radial(RadialProfile p, const Mat2& Q);
    static HamiltonianSpec radial_ball(RadialProfile p, double capacity);
    static HamiltonianSpec sampled(SampledGrid g);

    double s_of(const Vec2& z) const;    // radial only
    double value(const Vec2& z) const;
    Vec2 hamiltonian_vector_field(const Vec2& z) const; // i_X w = -dH, w = dp^dq
    // Linear symplectic normalization B with s(Bw) = pi |w|^2, det B = 1.
    Mat2 normalizer() const;             // radial only
};

// Time-1 flow.  Radial: closed-form rotation by 2*pi*mtilde(s) (CCW) in
// normalized coordinates.  Sampled: adaptive RK45 to local tolerance 1e-9.
Vec2 flow_time1(const HamiltonianSpec& H, const Vec2& z);

// Flow for time t in [0,1] (same backends); used by quadrature oracles.
Vec2 flow_time(const HamiltonianSpec& H, const Vec2& z, double t);

// Jacobian of flow_time1 (finite differences for sampled, closed form for
// radial); used by the area-preservation property check.
Mat2 flow_time1_jacobian(const HamiltonianSpec& H, const Vec2& z);

// Action S of a 1-periodic orbit through z: quadrature of lambda(X_H) - H
// along the integrated orbit (lambda = p dq).  Closed-form orbits use the
// radial formula S = k s0 - h(s0).
double action_S_quadrature(const HamiltonianSpec& H, const Vec2& z);

// Linearized return path t -> Dphi_t along a radial circle orbit at level s0,
// in normalized coordinates: R(2 pi m t) (I + 2 pi t a' (J z) z^T).
Mat2 radial_linearized_path(const RadialProfile& prof, double s0, double t);

// All 1-periodic orbit data.  Radial: exact root isolation of h' at integers
// plus plateau/exterior constant records.  Sampled: Newton refinement from
// grid seeds (circle families are reported as Constant points there).
std::vector<OrbitDatum> fixed_points(const HamiltonianSpec& H);

// {k*c : 1 <= k <= k_max} for a planar domain of capacity c.
std::vector<double> reeb_spectrum(double capacity, int k_max);

} // namespace sbl
