#include <stdexcept>
#include <string>

#include "mffa/kernels.hpp"

namespace mffa::simd {

std::string_view to_string(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "unknown";
}

std::optional<Isa> parse_isa(std::string_view name) noexcept {
    if (name == "scalar") return Isa::scalar;
    if (name == "avx2") return Isa::avx2;
    if (name == "neon") return Isa::neon;
    return std::nullopt;
}

bool isa_available(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return true;
        case Isa::avx2:
#if defined(MFFA_HAVE_AVX2)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Isa::neon:
#if defined(MFFA_HAVE_NEON)
            return true;
#else
            return false;
#endif
    }
    return false;
}

std::vector<Isa> available_isas() {
    std::vector<Isa> out;
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
        if (isa_available(isa)) out.push_back(isa);
    }
    return out;
}

const Kernels& kernels_for(Isa isa) {
    if (!isa_available(isa)) {
        throw std::invalid_argument("kernel variant '" + std::string(to_string(isa)) +
                                    "' is not available on this machine");
    }
    switch (isa) {
#if defined(MFFA_HAVE_AVX2)
        case Isa::avx2: return detail::avx2_kernels;
#endif
#if defined(MFFA_HAVE_NEON)
        case Isa::neon: return detail::neon_kernels;
#endif
        default: return detail::scalar_kernels;
    }
}

const Kernels& active_kernels() {
    static const Kernels& chosen = [] () -> const Kernels& {
        if (isa_available(Isa::avx2)) return kernels_for(Isa::avx2);
        if (isa_available(Isa::neon)) return kernels_for(Isa::neon);
        return detail::scalar_kernels;
    }();
    return chosen;
}

}  // namespace mffa::simd
