// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <algorithm>

#include "mffa/kernels.hpp"

namespace mffa::simd {

namespace {

double squared_distance_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
    }
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        lane[i % 4] += d * d;
    }
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

void attract_avx2(double* w, const double* target, const double* noise, double beta, double alpha,
                  std::size_t n) {
    const __m256d vbeta = _mm256_set1_pd(beta);
    const __m256d valpha = _mm256_set1_pd(alpha);
    const __m256d half = _mm256_set1_pd(0.5);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d wi = _mm256_loadu_pd(w + i);
        const __m256d pull = _mm256_mul_pd(vbeta, _mm256_sub_pd(_mm256_loadu_pd(target + i), wi));
        const __m256d jitter = _mm256_mul_pd(valpha, _mm256_sub_pd(_mm256_loadu_pd(noise + i), half));
        _mm256_storeu_pd(w + i, _mm256_add_pd(_mm256_add_pd(wi, pull), jitter));
    }
    for (; i < n; ++i) {
        const double pull = beta * (target[i] - w[i]);
        const double jitter = alpha * (noise[i] - 0.5);
        w[i] = (w[i] + pull) + jitter;
    }
}

void clamp_avx2(double* w, double lb, double ub, std::size_t n) {
    const __m256d lo = _mm256_set1_pd(lb);
    const __m256d hi = _mm256_set1_pd(ub);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        // max(x, lb) then min(., ub), operand order matching std::max/std::min
        const __m256d x = _mm256_loadu_pd(w + i);
        _mm256_storeu_pd(w + i, _mm256_min_pd(hi, _mm256_max_pd(lo, x)));
    }
    for (; i < n; ++i) w[i] = std::min(std::max(w[i], lb), ub);
}

void affine_avx2(double* w, const double* u, double scale, double offset, std::size_t n) {
    const __m256d vs = _mm256_set1_pd(scale);
    const __m256d vo = _mm256_set1_pd(offset);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(w + i, _mm256_add_pd(_mm256_mul_pd(vs, _mm256_loadu_pd(u + i)), vo));
    }
    for (; i < n; ++i) w[i] = scale * u[i] + offset;
}

}  // namespace

namespace detail {
const Kernels avx2_kernels{Isa::avx2, squared_distance_avx2, attract_avx2, clamp_avx2, affine_avx2};
}

}  // namespace mffa::simd
