#include "hf/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

// Compiled with -ffp-contract=off so the scalar reference and the AVX2 lanes
// execute the same rounding sequence.

namespace hf::kernels {

namespace scalar {

double min_dist_sq_to_segments(double px, double py, const Segments& s) {
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < s.n; ++i) {
        double dx = s.bx[i] - s.ax[i];
        double dy = s.by[i] - s.ay[i];
        double wx = px - s.ax[i];
        double wy = py - s.ay[i];
        double len2 = dx * dx + dy * dy;
        double t = wx * dx + wy * dy;
        // clamp projection parameter to [0, len2]
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
    for (size_t i = 0; i < m; ++i) {
        double acc = 0.0;
        for (size_t k = 0; k < len; ++k) acc += values[i + k];
        out[i] = acc;
    }
}

void haversine_lt(double sin_lat, double cos_lat, double sin_lon, double cos_lon,
                  const GeoTrig& pts, size_t n, double a_threshold, uint8_t* out_lt) {
    for (size_t i = 0; i < n; ++i) {
        // a = (1 - cos dphi)/2 + cos(phi1)cos(phi2)(1 - cos dlam)/2, with the
        // delta cosines expanded through the per-point tables.
        double cos_dphi = cos_lat * pts.cos_lat[i] + sin_lat * pts.sin_lat[i];
        double cos_dlam = cos_lon * pts.cos_lon[i] + sin_lon * pts.sin_lon[i];
        double a = 0.5 * (1.0 - cos_dphi) + cos_lat * pts.cos_lat[i] * (0.5 * (1.0 - cos_dlam));
        out_lt[i] = a < a_threshold ? 1 : 0;
    }
}

} // namespace scalar

const Kernels& scalar_kernels() {
    static const Kernels k{"scalar", &scalar::min_dist_sq_to_segments, &scalar::window_sums,
                           &scalar::haversine_lt};
    return k;
}

double haversine_a_from_km(double dist_km) {
    constexpr double earth_radius_km = 6371.0088;
    double s = std::sin(dist_km / (2.0 * earth_radius_km));
    return s * s;
}

} // namespace hf::kernels
