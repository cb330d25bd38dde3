#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>

#include "pass/constants.hpp"

namespace pass {

using Complex = std::complex<double>;

/// sin(x)/x with the removable singularity at zero filled in by its Taylor
/// series, so sinc(0) == 1 exactly.
inline double sinc(double x) {
  if (std::abs(x) < 1e-6) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

/// Maps an angle onto [0, 2*pi).
inline double wrap_two_pi(double angle) {
  double r = std::fmod(angle, constants::kTwoPi);
  if (r < 0.0) r += constants::kTwoPi;
  if (r >= constants::kTwoPi) r = 0.0;
  return r;
}

/// Composite Simpson rule with `panels` subintervals (rounded up to even).
/// Works for any integrand returning double or std::complex<double>.
template <typename F>
auto simpson(F&& f, double a, double b, std::size_t panels) {
  if (panels < 2) panels = 2;
  if (panels % 2 != 0) ++panels;
  const double h = (b - a) / static_cast<double>(panels);
  auto sum = f(a) + f(b);
  decltype(sum) odd{};
  decltype(sum) even{};
  for (std::size_t i = 1; i < panels; ++i) {
    const double x = a + h * static_cast<double>(i);
    if (i % 2 != 0) {
      odd += f(x);
    } else {
      even += f(x);
    }
  }
  sum += 4.0 * odd + 2.0 * even;
  return sum * (h / 3.0);
}

}  // namespace pass
