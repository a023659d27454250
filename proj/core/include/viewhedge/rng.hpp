#pragma once

#include <array>
#include <cstdint>

namespace viewhedge {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11). Output is a
/// pure function of (key, counter), so any path's draws can be regenerated
/// independently of evaluation order or thread assignment.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key) noexcept;

/// Substream ids; distinct ids give statistically independent sequences.
enum class Substream : std::uint32_t {
    Underlying = 0,  ///< Z₁, drives W₁
    Vol = 1,         ///< Z₂ and later vol sub-steps, drives W₂
};

/// Standard normal draws keyed by (seed, path, substream, index).
class PathNormals {
public:
    explicit PathNormals(std::uint64_t seed) noexcept
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

    /// The `index`-th normal of a path's substream. Consecutive even/odd
    /// indices share one Box–Muller pair.
    double normal(std::uint64_t path, Substream stream, std::uint32_t index) const noexcept;

    /// Uniform on (0, 1], 53-bit resolution.
    double uniform(std::uint64_t path, Substream stream, std::uint32_t index) const noexcept;

private:
    std::array<std::uint32_t, 2> key_;
};

/// Both shocks of a path: Z₁ for the underlying, Z₂ for implied vol.
struct PathDraw {
    double z1;
    double z2;
};

inline PathDraw draw_path(const PathNormals& normals, std::uint64_t path) noexcept {
    return {normals.normal(path, Substream::Underlying, 0), normals.normal(path, Substream::Vol, 0)};
}

}  // namespace viewhedge
