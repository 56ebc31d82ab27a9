#include "sbl/grid_kernels.hpp"
#include "sbl/broken_gf.hpp"
#include <cstdlib>
#include <stdexcept>

namespace sbl {

RadialKernelParams make_kernel_params(const BrokenGF& gf) {
    const RadialProfile& pr = gf.profile();
    const auto& breaks = pr.breaks();
    const auto& pieces = pr.pieces();
    RadialKernelParams p;
    if (int(pieces.size()) > RadialKernelParams::kMaxPieces)
        throw std::invalid_argument("make_kernel_params: too many profile pieces");
    p.n_pieces = int(pieces.size());
    for (int i = 0; i <= p.n_pieces; ++i) p.breaks[i] = breaks[i];
    for (int i = 0; i < p.n_pieces; ++i) {
        const Poly& h = pieces[i];
        Poly mt = h.deriv().negated();
        if (h.c.size() > RadialKernelParams::kCoeffs)
            throw std::invalid_argument("make_kernel_params: polynomial degree too high");
        for (std::size_t k = 0; k < h.c.size(); ++k) p.hh[i][k] = h.c[k];
        for (std::size_t k = 0; k < mt.c.size(); ++k) p.mt[i][k] = mt.c[k];
    }
    p.two_pi_over_N = 2.0 * 3.141592653589793238462643383279502884 / double(gf.steps());
    p.inv_N = 1.0 / double(gf.steps());
    p.s_hi = 4.0 * pr.support_end();
    return p;
}

bool avx2_supported() {
    static const bool ok = [] {
        if (std::getenv("SBL_FORCE_SCALAR")) return false;
        return bool(__builtin_cpu_supports("avx2")) && bool(__builtin_cpu_supports("fma"));
    }();
    return ok;
}

void eval_action(const double* sigma_in, double* out, std::size_t n,
                 const RadialKernelParams& p) {
    if (avx2_supported()) eval_action_avx2(sigma_in, out, n, p);
    else eval_action_scalar(sigma_in, out, n, p);
}

void cell_corner_range(const double* vals, int nx, int ny, double* cmin,
                       double* cmax) {
    if (avx2_supported()) cell_corner_range_avx2(vals, nx, ny, cmin, cmax);
    else cell_corner_range_scalar(vals, nx, ny, cmin, cmax);
}

} // namespace sbl
