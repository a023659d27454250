#pragma once

namespace viewhedge {

/// Standard normal density.
double norm_pdf(double x) noexcept;

/// Standard normal CDF, Φ(x) = erfc(-x/√2)/2. The erfc form keeps full
/// relative accuracy in the lower tail; absolute error is below 1e-15.
double norm_cdf(double x) noexcept;

}  // namespace viewhedge
