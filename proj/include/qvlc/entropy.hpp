#pragma once

#include "qvlc/linalg.hpp"

namespace qvlc {

/// An entropy in k-ary digits: `order` is the Renyi order (1 = von Neumann).
struct EntropyValue {
  double value;
  int base_k;
  double order;
};

/// S(rho) = -Tr(rho log_k rho), with 0 log 0 = 0.
EntropyValue von_neumann(const DensityOperator& rho, int k);

/// S_alpha(rho) = (1/(1-alpha)) log_k Tr rho^alpha for alpha >= 0, alpha != 1.
/// alpha = 0 counts the rank (eigenvalues above kSupportEps).
EntropyValue renyi(const DensityOperator& rho, double alpha, int k);

/// S(rho||tau) = Tr[rho (log_k rho - log_k tau)]. Returns +infinity when the
/// support of rho is not contained in the support of tau.
double relative_entropy(const DensityOperator& rho, const DensityOperator& tau, int k);

/// Petz divergence S_alpha(rho||sigma) = (1/(alpha-1)) log_k Tr rho^alpha sigma^{1-alpha},
/// alpha > 1. +infinity on support violation.
double renyi_divergence(const DensityOperator& rho, const DensityOperator& sigma, double alpha,
                        int k);

/// Escort operator rho^{1/(1+t)} / Tr rho^{1/(1+t)}; shares eigenvectors with rho.
DensityOperator escort(const DensityOperator& rho, double t);

/// Escort map on a bare spectrum / probability vector.
RealVector escort_distribution(const RealVector& p, double t);

} // namespace qvlc
