#include "viewhedge/normal.hpp"

#include <cmath>
#include <numbers>

namespace viewhedge {

double norm_pdf(double x) noexcept {
    constexpr double kInvSqrt2Pi = 0.5 * std::numbers::inv_sqrtpi * std::numbers::sqrt2;
    return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

double norm_cdf(double x) noexcept {
    constexpr double kInvSqrt2 = 0.5 * std::numbers::sqrt2;
    return 0.5 * std::erfc(-x * kInvSqrt2);
}

}  // namespace viewhedge
