#pragma once
#include "sbl/hamiltonian.hpp"
#include <Eigen/Dense>
#include <vector>

namespace sbl {

// Discrete symplectic action of the N-step broken flow of a radial
// Hamiltonian, twisted step-by-step by the midpoint symplectomorphism tau.
// Variables z_1..z_N in R^2 (normalized coordinates), d = 2N:
//
//   F(z) = sum_i [ 1/2 <J z_i, z_{i+1}> + W((z_i + z_{i+1})/2) ],  z_{N+1} = z_1
//
// with the radial per-step twist function W(m) = w(pi |m|^2),
// w(sigma(s)) = h(s)/N + s (theta - sin theta)/(2 pi),
// sigma(s) = s cos^2(theta/2), theta(s) = 2 pi m~(s) / N.
// Critical points are exactly the broken periodic orbits and the critical
// values equal t_action = -S (telescoping identity, verified numerically).
class BrokenGF {
public:
    BrokenGF(RadialProfile profile, int N);

    int steps() const { return N_; }
    int dim() const { return 2 * N_; }
    int iota() const { return iota_; }            // reference index (BM rule)
    double box_half() const { return box_half_; } // per-coordinate half-width
    const RadialProfile& profile() const { return prof_; }

    // Scalar chain sigma -> s -> per-step value; used by the evaluator and
    // exported to the grid kernels.
    double theta_of(double s) const;
    double sigma_of(double s) const;
    double s_of_sigma(double sigma) const;
    double w_of_sigma(double sigma) const;   // the per-step twist function
    double wprime_of_sigma(double sigma) const;
    double wsecond_of_sigma(double sigma) const;

    double eval(const std::vector<Vec2>& z) const;
    std::vector<Vec2> grad(const std::vector<Vec2>& z) const;

    // Explicit critical configuration for a circle family (winding m >= 1 at
    // level s0) or a constant configuration at level s (m = 0).
    std::vector<Vec2> critical_config(double s0, int m) const;

    // Interior critical values (t-coordinate): plateau, exterior, families.
    std::vector<double> interior_critical_values() const;

    // Hessian of F at a circle-family configuration; closed-form blocks.
    Eigen::MatrixXd family_hessian(double s0, int m) const;

    // Negative eigenvalue count of family_hessian excluding the single
    // rotational zero mode; throws if the zero-mode count is not exactly 1.
    int family_negative_index(double s0, int m) const;

private:
    RadialProfile prof_;
    int N_ = 1;
    int iota_ = 2;
    double box_half_ = 1.0;
    double s_max_ = 0; // sigma_of is inverted on [0, s_max_]
};

// Scheme threshold: largest admitted per-step rotation angle (radians).
constexpr double kMaxStepAngle = 1.0;

// Smallest odd N making every 1/N-step C1-small for this profile.
int recommended_steps(const RadialProfile& profile);

// Builds the broken GF; throws if a 1/N step violates the C1-small
// threshold (the error asks for a larger N) or if N is not a positive odd
// integer (even N introduces a spurious alternating critical plane).
BrokenGF gf_build(const HamiltonianSpec& H, int N);

} // namespace sbl
