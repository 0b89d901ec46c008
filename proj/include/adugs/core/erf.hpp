#pragma once

namespace adugs {

/// Gaussian error function, absolute error below 1e-7 everywhere.
/// Maclaurin series for |x| < 2, continued-fraction complement beyond.
double erf(double x);

}  // namespace adugs
