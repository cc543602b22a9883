#include "mffa/kernels.hpp"

#include <algorithm>

namespace mffa::simd {

namespace {

double squared_distance_scalar(const double* a, const double* b, std::size_t n) {
    double lane[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        lane[i % 4] += d * d;
    }
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

void attract_scalar(double* w, const double* target, const double* noise, double beta, double alpha,
                    std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double pull = beta * (target[i] - w[i]);
        const double jitter = alpha * (noise[i] - 0.5);
        w[i] = (w[i] + pull) + jitter;
    }
}

void clamp_scalar(double* w, double lb, double ub, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) w[i] = std::min(std::max(w[i], lb), ub);
}

void affine_scalar(double* w, const double* u, double scale, double offset, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) w[i] = scale * u[i] + offset;
}

}  // namespace

namespace detail {
const Kernels scalar_kernels{Isa::scalar, squared_distance_scalar, attract_scalar, clamp_scalar,
                             affine_scalar};
}

}  // namespace mffa::simd
