#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace mffa::simd {

enum class Isa { scalar, avx2, neon };

std::string_view to_string(Isa isa) noexcept;
std::optional<Isa> parse_isa(std::string_view name) noexcept;

/**
 * Dense arithmetic over weight vectors.
 *
 * Every variant rounds exactly like the scalar one: squared distances are
 * accumulated in four interleaved lanes (element i goes to lane i % 4) and
 * the lanes are combined as (l0 + l1) + (l2 + l3); updates use separate
 * multiply and add. Results are therefore bit-identical whichever variant is
 * selected at runtime.
 */
struct Kernels {
    Isa isa;
    /// sum_i (a_i - b_i)^2
    double (*squared_distance)(const double* a, const double* b, std::size_t n);
    /// w_i += beta * (target_i - w_i) + alpha * (noise_i - 0.5)
    void (*attract)(double* w, const double* target, const double* noise, double beta, double alpha,
                    std::size_t n);
    /// w_i = min(max(w_i, lb), ub)
    void (*clamp)(double* w, double lb, double ub, std::size_t n);
    /// w_i = scale * u_i + offset
    void (*affine)(double* w, const double* u, double scale, double offset, std::size_t n);
};

namespace detail {
extern const Kernels scalar_kernels;
#if defined(MFFA_HAVE_AVX2)
extern const Kernels avx2_kernels;
#endif
#if defined(MFFA_HAVE_NEON)
extern const Kernels neon_kernels;
#endif
}  // namespace detail

/// Compiled in and supported by the running CPU.
bool isa_available(Isa isa) noexcept;
std::vector<Isa> available_isas();

/// Throws std::invalid_argument if the variant is unavailable.
const Kernels& kernels_for(Isa isa);

/// Widest available variant, detected once.
const Kernels& active_kernels();

}  // namespace mffa::simd
