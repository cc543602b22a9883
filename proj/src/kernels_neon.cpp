#include <arm_neon.h>

#include <algorithm>

#include "mffa/kernels.hpp"

namespace mffa::simd {

namespace {

double squared_distance_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc01 = vdupq_n_f64(0.0);
    float64x2_t acc23 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const float64x2_t d01 = vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
        const float64x2_t d23 = vsubq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
        acc01 = vaddq_f64(acc01, vmulq_f64(d01, d01));
        acc23 = vaddq_f64(acc23, vmulq_f64(d23, d23));
    }
    double lane[4];
    vst1q_f64(lane, acc01);
    vst1q_f64(lane + 2, acc23);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        lane[i % 4] += d * d;
    }
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

void attract_neon(double* w, const double* target, const double* noise, double beta, double alpha,
                  std::size_t n) {
    const float64x2_t vbeta = vdupq_n_f64(beta);
    const float64x2_t valpha = vdupq_n_f64(alpha);
    const float64x2_t half = vdupq_n_f64(0.5);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t wi = vld1q_f64(w + i);
        const float64x2_t pull = vmulq_f64(vbeta, vsubq_f64(vld1q_f64(target + i), wi));
        const float64x2_t jitter = vmulq_f64(valpha, vsubq_f64(vld1q_f64(noise + i), half));
        vst1q_f64(w + i, vaddq_f64(vaddq_f64(wi, pull), jitter));
    }
    for (; i < n; ++i) {
        const double pull = beta * (target[i] - w[i]);
        const double jitter = alpha * (noise[i] - 0.5);
        w[i] = (w[i] + pull) + jitter;
    }
}

void clamp_neon(double* w, double lb, double ub, std::size_t n) {
    // Plain compares and selects; vmaxq/vminq differ from std::max on signed zeros.
    const float64x2_t lo = vdupq_n_f64(lb);
    const float64x2_t hi = vdupq_n_f64(ub);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t x = vld1q_f64(w + i);
        x = vbslq_f64(vcltq_f64(x, lo), lo, x);
        x = vbslq_f64(vcltq_f64(hi, x), hi, x);
        vst1q_f64(w + i, x);
    }
    for (; i < n; ++i) w[i] = std::min(std::max(w[i], lb), ub);
}

void affine_neon(double* w, const double* u, double scale, double offset, std::size_t n) {
    const float64x2_t vs = vdupq_n_f64(scale);
    const float64x2_t vo = vdupq_n_f64(offset);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(w + i, vaddq_f64(vmulq_f64(vs, vld1q_f64(u + i)), vo));
    for (; i < n; ++i) w[i] = scale * u[i] + offset;
}

}  // namespace

namespace detail {
const Kernels neon_kernels{Isa::neon, squared_distance_neon, attract_neon, clamp_neon, affine_neon};
}

}  // namespace mffa::simd
