#include "qvlc/entropy.hpp"

#include <cmath>
#include <string>

namespace qvlc {

namespace {

void require_base(int k) {
  if (k < 2) throw DomainError("alphabet size k must be >= 2, got " + std::to_string(k));
}

void require_same_dim(const DensityOperator& a, const DensityOperator& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("operators have dimensions " + std::to_string(a.dim()) + " and " +
                            std::to_string(b.dim()));
  }
}

// Weight of rho on the numerical kernel of the decomposition `dec`.
double kernel_leak(const DensityOperator& rho, const SpectralDecomposition& dec) {
  double leak = 0.0;
  for (int i = 0; i < dec.dim(); ++i) {
    if (dec.eigenvalues(i) <= kSupportEps) {
      const Vector v = dec.eigenvectors.col(i);
      leak += (v.adjoint() * rho.matrix * v)(0, 0).real();
    }
  }
  return leak;
}

} // namespace

EntropyValue von_neumann(const DensityOperator& rho, int k) {
  require_base(k);
  const SpectralDecomposition dec = eigh(rho);
  double s = 0.0;
  for (int i = 0; i < dec.dim(); ++i) {
    const double p = dec.eigenvalues(i);
    if (p > kSupportEps) s -= p * log_base(p, k);
  }
  return {s, k, 1.0};
}

EntropyValue renyi(const DensityOperator& rho, double alpha, int k) {
  require_base(k);
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw AlphaOutOfRange("Renyi order must be a finite real >= 0, got " + std::to_string(alpha));
  }
  if (alpha == 1.0) throw AlphaIsOne("use von_neumann for order 1");

  const SpectralDecomposition dec = eigh(rho);
  if (alpha == 0.0) {
    const int rank = static_cast<int>((dec.eigenvalues.array() > kSupportEps).count());
    return {log_base(static_cast<double>(rank), k), k, 0.0};
  }
  double z = 0.0;
  for (int i = 0; i < dec.dim(); ++i) {
    const double p = dec.eigenvalues(i);
    if (p > 0.0) z += std::pow(p, alpha);
  }
  return {log_base(z, k) / (1.0 - alpha), k, alpha};
}

double relative_entropy(const DensityOperator& rho, const DensityOperator& tau, int k) {
  require_base(k);
  require_same_dim(rho, tau);

  const SpectralDecomposition tau_dec = eigh(tau);
  if (kernel_leak(rho, tau_dec) > kSupportEps) return kPosInfinity;

  const SpectralDecomposition rho_dec = eigh(rho);
  double tr_rho_log_rho = 0.0;
  for (int i = 0; i < rho_dec.dim(); ++i) {
    const double p = rho_dec.eigenvalues(i);
    if (p > kSupportEps) tr_rho_log_rho += p * log_base(p, k);
  }
  const Matrix log_tau =
      mat_fn(tau_dec, [k](double x) { return x > kSupportEps ? log_base(x, k) : 0.0; });
  const double tr_rho_log_tau = (rho.matrix * log_tau).trace().real();
  return tr_rho_log_rho - tr_rho_log_tau;
}

double renyi_divergence(const DensityOperator& rho, const DensityOperator& sigma, double alpha,
                        int k) {
  require_base(k);
  require_same_dim(rho, sigma);
  if (!(alpha > 1.0)) {
    throw AlphaOutOfRange("divergence order must be > 1, got " + std::to_string(alpha));
  }

  const SpectralDecomposition sigma_dec = eigh(sigma);
  if (kernel_leak(rho, sigma_dec) > kSupportEps) return kPosInfinity;

  const Matrix rho_pow = mat_fn(rho, [alpha](double x) { return x > 0.0 ? std::pow(x, alpha) : 0.0; });
  const Matrix sigma_pow = mat_fn(
      sigma_dec, [alpha](double x) { return x > kSupportEps ? std::pow(x, 1.0 - alpha) : 0.0; });
  const double overlap = (rho_pow * sigma_pow).trace().real();
  return log_base(overlap, k) / (alpha - 1.0);
}

DensityOperator escort(const DensityOperator& rho, double t) {
  if (!(t >= 0.0)) throw DomainError("escort parameter t must be >= 0");
  if (t == 0.0) return rho;

  const double expo = 1.0 / (1.0 + t);
  const SpectralDecomposition dec = eigh(rho);
  RealVector powered(dec.dim());
  for (int i = 0; i < dec.dim(); ++i) {
    const double p = dec.eigenvalues(i);
    powered(i) = p > 0.0 ? std::pow(p, expo) : 0.0;
  }
  powered /= powered.sum();
  DensityOperator out;
  out.matrix = dec.eigenvectors * powered.asDiagonal() * dec.eigenvectors.adjoint();
  return out;
}

RealVector escort_distribution(const RealVector& p, double t) {
  if (!(t >= 0.0)) throw DomainError("escort parameter t must be >= 0");
  const double expo = 1.0 / (1.0 + t);
  RealVector out(p.size());
  for (int i = 0; i < p.size(); ++i) out(i) = p(i) > 0.0 ? std::pow(p(i), expo) : 0.0;
  const double z = out.sum();
  if (z <= 0.0) throw DomainError("escort of an all-zero vector");
  return out / z;
}

} // namespace qvlc
