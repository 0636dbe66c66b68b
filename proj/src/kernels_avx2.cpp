#include "hf/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define HF_BUILD_AVX2 1
#include <immintrin.h>
#else
#define HF_BUILD_AVX2 0
#endif

#include <algorithm>
#include <cmath>
#include <limits>

// This translation unit is compiled with -mavx2 -ffp-contract=off. Every lane
// runs the same add/mul/div sequence as the scalar reference, and reductions
// use min/max only, so outputs match the scalar kernels bit for bit.

namespace hf::kernels {

#if HF_BUILD_AVX2

namespace avx2 {

double min_dist_sq_to_segments(double px, double py, const Segments& s) {
    const __m256d vpx = _mm256_set1_pd(px);
    const __m256d vpy = _mm256_set1_pd(py);
    const __m256d zero = _mm256_setzero_pd();
    __m256d vbest = _mm256_set1_pd(std::numeric_limits<double>::infinity());
    size_t i = 0;
    for (; i + 4 <= s.n; i += 4) {
        __m256d ax = _mm256_loadu_pd(s.ax + i);
        __m256d ay = _mm256_loadu_pd(s.ay + i);
        __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(s.bx + i), ax);
        __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(s.by + i), ay);
        __m256d wx = _mm256_sub_pd(vpx, ax);
        __m256d wy = _mm256_sub_pd(vpy, ay);
        __m256d len2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
        __m256d t = _mm256_add_pd(_mm256_mul_pd(wx, dx), _mm256_mul_pd(wy, dy));
        t = _mm256_max_pd(zero, _mm256_min_pd(t, len2));
        __m256d inv = _mm256_div_pd(t, len2);
        // zero-length segments: len2 == 0 -> t/len2 is NaN; force inv = 0
        __m256d valid = _mm256_cmp_pd(len2, zero, _CMP_GT_OQ);
        inv = _mm256_and_pd(inv, valid);
        __m256d ex = _mm256_sub_pd(wx, _mm256_mul_pd(dx, inv));
        __m256d ey = _mm256_sub_pd(wy, _mm256_mul_pd(dy, inv));
        __m256d d2 = _mm256_add_pd(_mm256_mul_pd(ex, ex), _mm256_mul_pd(ey, ey));
        vbest = _mm256_min_pd(vbest, d2);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, vbest);
    double best = std::min(std::min(lanes[0], lanes[1]), std::min(lanes[2], lanes[3]));
    for (; i < s.n; ++i) {
        double dx = s.bx[i] - s.ax[i];
        double dy = s.by[i] - s.ay[i];
        double wx = px - s.ax[i];
        double wy = py - s.ay[i];
        double len2 = dx * dx + dy * dy;
        double t = wx * dx + wy * dy;
        t = std::max(0.0, std::min(t, len2));
        double inv = len2 > 0.0 ? t / len2 : 0.0;
        double ex = wx - dx * inv;
        double ey = wy - dy * inv;
        double d2 = ex * ex + ey * ey;
        best = std::min(best, d2);
    }
    return best;
}

void window_sums(const double* values, size_t n, size_t len, double* out) {
    if (n < len) return;
    size_t m = n - len + 1;
    size_t i = 0;
    // four adjacent windows per iteration; each lane accumulates its own
    // window left-to-right, matching the scalar order
    for (; i + 4 <= m; i += 4) {
        __m256d acc = _mm256_setzero_pd();
        for (size_t k = 0; k < len; ++k) acc = _mm256_add_pd(acc, _mm256_loadu_pd(values + i + k));
        _mm256_storeu_pd(out + i, acc);
    }
    for (; i < m; ++i) {
        double acc = 0.0;
        for (size_t k = 0; k < len; ++k) acc += values[i + k];
        out[i] = acc;
    }
}

void haversine_lt(double sin_lat, double cos_lat, double sin_lon, double cos_lon,
                  const GeoTrig& pts, size_t n, double a_threshold, uint8_t* out_lt) {
    const __m256d vsp = _mm256_set1_pd(sin_lat);
    const __m256d vcp = _mm256_set1_pd(cos_lat);
    const __m256d vsl = _mm256_set1_pd(sin_lon);
    const __m256d vcl = _mm256_set1_pd(cos_lon);
    const __m256d half = _mm256_set1_pd(0.5);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d thr = _mm256_set1_pd(a_threshold);
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d cp2 = _mm256_loadu_pd(pts.cos_lat + i);
        __m256d sp2 = _mm256_loadu_pd(pts.sin_lat + i);
        __m256d cl2 = _mm256_loadu_pd(pts.cos_lon + i);
        __m256d sl2 = _mm256_loadu_pd(pts.sin_lon + i);
        __m256d cos_dphi = _mm256_add_pd(_mm256_mul_pd(vcp, cp2), _mm256_mul_pd(vsp, sp2));
        __m256d cos_dlam = _mm256_add_pd(_mm256_mul_pd(vcl, cl2), _mm256_mul_pd(vsl, sl2));
        __m256d a = _mm256_add_pd(
            _mm256_mul_pd(half, _mm256_sub_pd(one, cos_dphi)),
            _mm256_mul_pd(_mm256_mul_pd(vcp, cp2),
                          _mm256_mul_pd(half, _mm256_sub_pd(one, cos_dlam))));
        __m256d lt = _mm256_cmp_pd(a, thr, _CMP_LT_OQ);
        int mask = _mm256_movemask_pd(lt);
        out_lt[i + 0] = (mask >> 0) & 1;
        out_lt[i + 1] = (mask >> 1) & 1;
        out_lt[i + 2] = (mask >> 2) & 1;
        out_lt[i + 3] = (mask >> 3) & 1;
    }
    for (; i < n; ++i) {
        double cos_dphi = cos_lat * pts.cos_lat[i] + sin_lat * pts.sin_lat[i];
        double cos_dlam = cos_lon * pts.cos_lon[i] + sin_lon * pts.sin_lon[i];
        double a = 0.5 * (1.0 - cos_dphi) + cos_lat * pts.cos_lat[i] * (0.5 * (1.0 - cos_dlam));
        out_lt[i] = a < a_threshold ? 1 : 0;
    }
}

} // namespace avx2

const Kernels* avx2_kernels() {
    static const Kernels k{"avx2", &avx2::min_dist_sq_to_segments, &avx2::window_sums,
                           &avx2::haversine_lt};
    if (__builtin_cpu_supports("avx2")) return &k;
    return nullptr;
}

#else

const Kernels* avx2_kernels() { return nullptr; }

#endif

} // namespace hf::kernels
