#include "sbl/grid_kernels.hpp"
#include <cmath>

namespace sbl {

namespace {

inline double horner8(const double* c, double u) {
    double r = c[7];
    for (int k = 6; k >= 0; --k) r = std::fma(r, u, c[k]);
    return r;
}

inline double poly_even(const double* c, double x) { // sum c[k] (x^2)^k
    double u = x * x;
    double r = c[6];
    for (int k = 5; k >= 0; --k) r = std::fma(r, u, c[k]);
    return r;
}

inline double piecewise(const double (*coef)[RadialKernelParams::kCoeffs],
                        const double* breaks, int n_pieces, double s) {
    double r = 0.0;
    for (int p = 0; p < n_pieces; ++p) {
        double u = s - breaks[p];
        double acc = horner8(coef[p], u);
        bool in = (s >= breaks[p]) && (s < breaks[p + 1]);
        r = in ? acc : r;
    }
    return r;
}

inline double sigma_of(const RadialKernelParams& p, double s) {
    double m = piecewise(p.mt, p.breaks, p.n_pieces, s);
    double th = m * p.two_pi_over_N;
    double x = 0.5 * th;
    double c = poly_even(kCosCoef, x);
    double cc = c * c;
    return s * cc;
}

} // namespace

void eval_action_scalar(const double* sigma_in, double* out, std::size_t n,
                        const RadialKernelParams& p) {
    const double inv_two_pi = 1.0 / (2.0 * 3.141592653589793238462643383279502884);
    for (std::size_t i = 0; i < n; ++i) {
        double sigma = sigma_in[i];
        double lo = 0.0, hi = p.s_hi;
        for (int it = 0; it < 60; ++it) {
            double mid = 0.5 * (lo + hi);
            bool pred = sigma_of(p, mid) <= sigma;
            lo = pred ? mid : lo;
            hi = pred ? hi : mid;
        }
        double s = 0.5 * (lo + hi);
        double m = piecewise(p.mt, p.breaks, p.n_pieces, s);
        double th = m * p.two_pi_over_N;
        double sn = th * poly_even(kSinCoef, th);
        double hv = piecewise(p.hh, p.breaks, p.n_pieces, s);
        out[i] = hv * p.inv_N + s * ((th - sn) * inv_two_pi);
    }
}

void cell_corner_range_scalar(const double* vals, int nx, int ny, double* cmin,
                              double* cmax) {
    for (int j = 0; j + 1 < ny; ++j)
        for (int i = 0; i + 1 < nx; ++i) {
            double a = vals[std::size_t(j) * nx + i];
            double b = vals[std::size_t(j) * nx + i + 1];
            double c = vals[std::size_t(j + 1) * nx + i];
            double d = vals[std::size_t(j + 1) * nx + i + 1];
            double mn = std::min(std::min(a, b), std::min(c, d));
            double mx = std::max(std::max(a, b), std::max(c, d));
            std::size_t idx = std::size_t(j) * (nx - 1) + i;
            cmin[idx] = mn;
            cmax[idx] = mx;
        }
}

} // namespace sbl
