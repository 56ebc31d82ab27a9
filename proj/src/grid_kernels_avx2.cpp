#include "sbl/grid_kernels.hpp"
#include <immintrin.h>

namespace sbl {

namespace {

inline __m256d horner8v(const double* c, __m256d u) {
    __m256d r = _mm256_set1_pd(c[7]);
    for (int k = 6; k >= 0; --k)
        r = _mm256_fmadd_pd(r, u, _mm256_set1_pd(c[k]));
    return r;
}

inline __m256d poly_evenv(const double* c, __m256d x) {
    __m256d u = _mm256_mul_pd(x, x);
    __m256d r = _mm256_set1_pd(c[6]);
    for (int k = 5; k >= 0; --k)
        r = _mm256_fmadd_pd(r, u, _mm256_set1_pd(c[k]));
    return r;
}

inline __m256d piecewisev(const double (*coef)[RadialKernelParams::kCoeffs],
                          const double* breaks, int n_pieces, __m256d s) {
    __m256d r = _mm256_setzero_pd();
    for (int p = 0; p < n_pieces; ++p) {
        __m256d bp = _mm256_set1_pd(breaks[p]);
        __m256d bq = _mm256_set1_pd(breaks[p + 1]);
        __m256d u = _mm256_sub_pd(s, bp);
        __m256d acc = horner8v(coef[p], u);
        __m256d in = _mm256_and_pd(_mm256_cmp_pd(s, bp, _CMP_GE_OQ),
                                   _mm256_cmp_pd(s, bq, _CMP_LT_OQ));
        r = _mm256_blendv_pd(r, acc, in);
    }
    return r;
}

inline __m256d sigma_ofv(const RadialKernelParams& p, __m256d s) {
    __m256d m = piecewisev(p.mt, p.breaks, p.n_pieces, s);
    __m256d th = _mm256_mul_pd(m, _mm256_set1_pd(p.two_pi_over_N));
    __m256d x = _mm256_mul_pd(_mm256_set1_pd(0.5), th);
    __m256d c = poly_evenv(kCosCoef, x);
    __m256d cc = _mm256_mul_pd(c, c);
    return _mm256_mul_pd(s, cc);
}

} // namespace

void eval_action_avx2(const double* sigma_in, double* out, std::size_t n,
                      const RadialKernelParams& p) {
    const double inv_two_pi_s = 1.0 / (2.0 * 3.141592653589793238462643383279502884);
    const __m256d half = _mm256_set1_pd(0.5);
    const __m256d inv_two_pi = _mm256_set1_pd(inv_two_pi_s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d sigma = _mm256_loadu_pd(sigma_in + i);
        __m256d lo = _mm256_setzero_pd();
        __m256d hi = _mm256_set1_pd(p.s_hi);
        for (int it = 0; it < 60; ++it) {
            __m256d mid = _mm256_mul_pd(half, _mm256_add_pd(lo, hi));
            __m256d pred = _mm256_cmp_pd(sigma_ofv(p, mid), sigma, _CMP_LE_OQ);
            lo = _mm256_blendv_pd(lo, mid, pred);
            hi = _mm256_blendv_pd(mid, hi, pred);
        }
        __m256d s = _mm256_mul_pd(half, _mm256_add_pd(lo, hi));
        __m256d m = piecewisev(p.mt, p.breaks, p.n_pieces, s);
        __m256d th = _mm256_mul_pd(m, _mm256_set1_pd(p.two_pi_over_N));
        __m256d sn = _mm256_mul_pd(th, poly_evenv(kSinCoef, th));
        __m256d hv = piecewisev(p.hh, p.breaks, p.n_pieces, s);
        __m256d t = _mm256_mul_pd(s, _mm256_mul_pd(_mm256_sub_pd(th, sn), inv_two_pi));
        __m256d F = _mm256_add_pd(_mm256_mul_pd(hv, _mm256_set1_pd(p.inv_N)), t);
        _mm256_storeu_pd(out + i, F);
    }
    if (i < n) eval_action_scalar(sigma_in + i, out + i, n - i, p);
}

void cell_corner_range_avx2(const double* vals, int nx, int ny, double* cmin,
                            double* cmax) {
    for (int j = 0; j + 1 < ny; ++j) {
        const double* r0 = vals + std::size_t(j) * nx;
        const double* r1 = vals + std::size_t(j + 1) * nx;
        double* mn = cmin + std::size_t(j) * (nx - 1);
        double* mx = cmax + std::size_t(j) * (nx - 1);
        int i = 0;
        for (; i + 4 < nx; i += 4) {
            __m256d a = _mm256_loadu_pd(r0 + i);
            __m256d b = _mm256_loadu_pd(r0 + i + 1);
            __m256d c = _mm256_loadu_pd(r1 + i);
            __m256d d = _mm256_loadu_pd(r1 + i + 1);
            _mm256_storeu_pd(mn + i,
                             _mm256_min_pd(_mm256_min_pd(a, b), _mm256_min_pd(c, d)));
            _mm256_storeu_pd(mx + i,
                             _mm256_max_pd(_mm256_max_pd(a, b), _mm256_max_pd(c, d)));
        }
        for (; i + 1 < nx; ++i) {
            double a = r0[i], b = r0[i + 1], c = r1[i], d = r1[i + 1];
            double lo = a < b ? a : b;
            lo = lo < c ? lo : c;
            lo = lo < d ? lo : d;
            double hi = a > b ? a : b;
            hi = hi > c ? hi : c;
            hi = hi > d ? hi : d;
            mn[i] = lo;
            mx[i] = hi;
        }
    }
}

} // namespace sbl
