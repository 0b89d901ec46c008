#include "adugs/core/erf.hpp"

#include <cmath>
#include <numbers>

namespace adugs {

namespace {

constexpr double kTwoOverSqrtPi = 2.0 / std::numbers::sqrtpi;

// Maclaurin series, adequate for |x| < 2 where cancellation stays mild.
double erf_series(double x) {
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int n = 1; n < 64; ++n) {
    term *= -x2 / n;
    const double add = term / (2 * n + 1);
    sum += add;
    if (std::fabs(add) < 1e-18 * std::fabs(sum)) break;
  }
  return kTwoOverSqrtPi * sum;
}

// Continued fraction for the complement, modified Lentz. Valid for x >= 2:
// erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + 1/2/(x + 1/(x + 3/2/(x + ...))))
double erfc_cf(double x) {
  constexpr double tiny = 1e-300;
  double f = x;
  double c = x;
  double d = 0.0;
  for (int k = 1; k < 128; ++k) {
    const double a = 0.5 * k;
    d = x + a * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = x + a / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < 1e-17) break;
  }
  return std::exp(-x * x) / (std::numbers::sqrtpi * f);
}

}  // namespace

double erf(double x) {
  const double ax = std::fabs(x);
  double r;
  if (ax < 2.0) {
    r = erf_series(ax);
  } else {
    r = 1.0 - erfc_cf(ax);
  }
  return x < 0.0 ? -r : r;
}

}  // namespace adugs
