#include "viewhedge/rng.hpp"

#include <cmath>
#include <numbers>

namespace viewhedge {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) noexcept {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

inline double to_unit(std::uint32_t hi, std::uint32_t lo) noexcept {
    const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 32) | lo;
    return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key) noexcept {
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, ctr[0], hi0, lo0);
        mulhilo(kMul1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

double PathNormals::uniform(std::uint64_t path, Substream stream, std::uint32_t index) const noexcept {
    const auto out = philox4x32_10({static_cast<std::uint32_t>(path), static_cast<std::uint32_t>(path >> 32),
                                    static_cast<std::uint32_t>(stream), index / 2},
                                   key_);
    return index % 2 == 0 ? to_unit(out[0], out[1]) : to_unit(out[2], out[3]);
}

double PathNormals::normal(std::uint64_t path, Substream stream, std::uint32_t index) const noexcept {
    const std::uint32_t pair = index / 2;
    const auto out = philox4x32_10({static_cast<std::uint32_t>(path), static_cast<std::uint32_t>(path >> 32),
                                    static_cast<std::uint32_t>(stream) | 0x80000000u, pair},
                                   key_);
    const double u1 = to_unit(out[0], out[1]);
    const double u2 = to_unit(out[2], out[3]);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return index % 2 == 0 ? radius * std::cos(angle) : radius * std::sin(angle);
}

}  // namespace viewhedge
