#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <limits>

namespace qvlc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Default tolerances. Callers can override where an operation takes an
// explicit tolerance; everything else reads these.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kSupportEps = 1e-12;        // eigenvalue <= this counts as zero
inline constexpr double kAmplitudePruneEps = 1e-12; // Fock amplitudes below this are dropped
inline constexpr double kKraftTol = 1e-12;
inline constexpr double kBoundTol = 1e-9;           // one-sided slack for inequality checks
inline constexpr double kLogDomainThresholdT = 32.0; // above this, merge weights in log domain

inline constexpr double kPosInfinity = std::numeric_limits<double>::infinity();

/// Logarithm in base k.
inline double log_base(double x, int k) { return std::log(x) / std::log(static_cast<double>(k)); }

/// Ceiling that snaps values within eps above an integer down to it, so that
/// -log_k of an exactly representable power of k yields that integer despite
/// rounding in the log. eps sits three orders above eigensolver noise.
inline int snapped_ceil(double x, double eps = 1e-12) {
  return static_cast<int>(std::ceil(x - eps));
}

} // namespace qvlc
