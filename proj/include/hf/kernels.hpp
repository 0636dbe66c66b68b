#pragma once

#include <cstddef>
#include <cstdint>

namespace hf::kernels {

// Data-parallel inner loops used by the geometry and window code. Each kernel
// has a scalar reference implementation and an AVX2 variant selected at
// runtime. Both variants perform the same per-element operation sequence, so
// results are bit-identical; the equivalence tests assert that.

struct Segments {
    // SoA endpoints in a local projected plane (km).
    const double* ax;
    const double* ay;
    const double* bx;
    const double* by;
    size_t n;
};

// Per-point sin/cos of latitude and longitude, precomputed once so the
// pairwise proximity loop is trig-free.
struct GeoTrig {
    const double* sin_lat;
    const double* cos_lat;
    const double* sin_lon;
    const double* cos_lon;
};

using MinDistSqFn = double (*)(double px, double py, const Segments& segs);

// out[i] = values[i] + values[i+1] + ... + values[i+len-1], for i in [0, n-len].
// Summation order within each window is left-to-right in both variants.
using WindowSumsFn = void (*)(const double* values, size_t n, size_t len, double* out);

// Haversine proximity mask against one anchor point, compared on the
// haversine intermediate a = sin^2(dphi/2) + cos(phi1)cos(phi2)sin^2(dlam/2):
// out_lt[j] = 1 iff a(anchor, j) < a_threshold.
using HaversineLtFn = void (*)(double sin_lat, double cos_lat, double sin_lon, double cos_lon,
                               const GeoTrig& pts, size_t n, double a_threshold, uint8_t* out_lt);

struct Kernels {
    const char* name;
    MinDistSqFn min_dist_sq_to_segments;
    WindowSumsFn window_sums;
    HaversineLtFn haversine_lt;
};

const Kernels& scalar_kernels();
const Kernels* avx2_kernels(); // nullptr when the CPU lacks AVX2
const Kernels& active();       // scalar unless AVX2 is available (or forced)
void force_implementation(const char* name); // "scalar" | "avx2" | "auto"

// a-threshold corresponding to a great-circle distance in km.
double haversine_a_from_km(double dist_km);

} // namespace hf::kernels
