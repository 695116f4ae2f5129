#pragma once

#include <functional>

#include "qvlc/errors.hpp"
#include "qvlc/types.hpp"

namespace qvlc {

/// Hermitian, positive semi-definite, unit-trace operator on C^d.
/// Construct through validate_density(); the stored matrix has its spectrum
/// clamped to [0,1] and trace renormalized to 1.
struct DensityOperator {
  Matrix matrix;

  int dim() const { return static_cast<int>(matrix.rows()); }
};

/// Eigensystem of a density operator: eigenvalues sorted descending,
/// eigenvectors as matching orthonormal columns.
struct SpectralDecomposition {
  RealVector eigenvalues;
  Matrix eigenvectors;

  int dim() const { return static_cast<int>(eigenvalues.size()); }
};

/// Checks Hermiticity, unit trace and positivity of `matrix` (each within
/// `tolerance`), clamps eigenvalues to [0,1], renormalizes the trace and
/// returns the cleaned operator.
DensityOperator validate_density(const Matrix& matrix, double tolerance = kHermitianTol);

/// Spectral decomposition with a deterministic phase convention: in each
/// eigenvector the largest-magnitude component is made real positive.
/// Degenerate eigenvalues may resolve to any orthonormal basis of their
/// eigenspace.
SpectralDecomposition eigh(const DensityOperator& rho);

/// V f(Lambda) V^dag. `f` must be finite on the clamped spectrum [0,1];
/// a non-finite f(eigenvalue) raises DomainError.
Matrix mat_fn(const DensityOperator& rho, const std::function<double(double)>& f);

/// mat_fn applied to a precomputed decomposition (avoids re-diagonalizing).
Matrix mat_fn(const SpectralDecomposition& dec, const std::function<double(double)>& f);

} // namespace qvlc
