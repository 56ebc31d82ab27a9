#pragma once
#include <Eigen/Dense>
#include <functional>

namespace sbl {

// Robbin-Salamon index of a piecewise-smooth path [0,1] -> Sp(2) starting at
// the identity: sum of crossing-form signatures over times where 1 is an
// eigenvalue, with half weights at the endpoints.  Crossing form on
// ker(P(t)-I): Gamma(v) = omega(v, P'(t) v), omega(u,v) = <Ju, v>.
// Throws std::invalid_argument if the path is not symplectic (|det-1| > 1e-6
// at sample points) or does not start at the identity.
double rs_index(const std::function<Eigen::Matrix2d(double)>& path,
                int samples = 4096);

} // namespace sbl
