#pragma once
#include <cstddef>

namespace sbl {

class BrokenGF;

// Flattened radial-action evaluation parameters for the grid kernels.
// Both kernel variants (scalar and AVX2) perform the identical arithmetic:
// 60 bisection steps inverting sigma(s) = s cos^2(pi m~(s)/N), then
// F = h(s)/N + s (theta - sin theta)/(2 pi), with cos/sin evaluated by the
// shared Taylor polynomials below.  Outputs are bit-identical by design and
// asserted so in the tests.
struct RadialKernelParams {
    static constexpr int kMaxPieces = 6;
    static constexpr int kCoeffs = 8;
    int n_pieces = 0;
    double breaks[kMaxPieces + 1] = {};
    double mt[kMaxPieces][kCoeffs] = {};  // m~ = -h' per piece, local coordinate
    double hh[kMaxPieces][kCoeffs] = {};  // h per piece, local coordinate
    double two_pi_over_N = 0;
    double inv_N = 0;
    double s_hi = 0;                      // bisection upper bound
};

RadialKernelParams make_kernel_params(const BrokenGF& gf);

// sigma_in[i] = pi |z_i|^2 -> out[i] = F (N = 1 grid evaluation chain).
void eval_action(const double* sigma_in, double* out, std::size_t n,
                 const RadialKernelParams& p);
void eval_action_scalar(const double* sigma_in, double* out, std::size_t n,
                        const RadialKernelParams& p);
void eval_action_avx2(const double* sigma_in, double* out, std::size_t n,
                      const RadialKernelParams& p);

// Per-cell corner min/max of an nx-by-ny node grid ((nx-1)*(ny-1) cells,
// row-major); used for sublevel classification and oscillation certificates.
void cell_corner_range(const double* vals, int nx, int ny, double* cmin,
                       double* cmax);
void cell_corner_range_scalar(const double* vals, int nx, int ny, double* cmin,
                              double* cmax);
void cell_corner_range_avx2(const double* vals, int nx, int ny, double* cmin,
                            double* cmax);

bool avx2_supported();

// Shared Taylor coefficients (|x| <= 0.8 for cos, |x| <= 1.3 for sin);
// Horner in u = x^2 with fused multiply-adds in both kernel variants.
inline constexpr double kCosCoef[7] = {
    1.0, -1.0 / 2, 1.0 / 24, -1.0 / 720, 1.0 / 40320, -1.0 / 3628800,
    1.0 / 479001600};
inline constexpr double kSinCoef[7] = {
    1.0, -1.0 / 6, 1.0 / 120, -1.0 / 5040, 1.0 / 362880, -1.0 / 39916800,
    1.0 / 6227020800.0};

} // namespace sbl
