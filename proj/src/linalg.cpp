#include "qvlc/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <sstream>

namespace qvlc {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

// Eigen's solver returns ascending eigenvalues; we want descending plus a
// fixed phase convention so repeated runs give identical columns.
SpectralDecomposition decompose_hermitian(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
  if (solver.info() != Eigen::Success) {
    throw NoConvergence("eigensolver did not converge on a " + fmt(a.rows()) + "x" +
                        fmt(a.cols()) + " matrix");
  }
  const int d = static_cast<int>(a.rows());
  SpectralDecomposition dec;
  dec.eigenvalues.resize(d);
  dec.eigenvectors.resize(d, d);
  for (int i = 0; i < d; ++i) {
    const int src = d - 1 - i; // reverse to descending
    dec.eigenvalues(i) = solver.eigenvalues()(src);
    Vector v = solver.eigenvectors().col(src);
    int pivot = 0;
    double best = 0.0;
    for (int j = 0; j < d; ++j) {
      const double m = std::abs(v(j));
      if (m > best) {
        best = m;
        pivot = j;
      }
    }
    if (best > 0.0) v *= std::conj(v(pivot)) / best;
    dec.eigenvectors.col(i) = v;
  }
  return dec;
}

} // namespace

DensityOperator validate_density(const Matrix& matrix, double tolerance) {
  if (matrix.rows() != matrix.cols()) {
    throw DimensionMismatch("density matrix must be square, got " + fmt(matrix.rows()) + "x" +
                            fmt(matrix.cols()));
  }
  if (matrix.rows() == 0) throw DimensionMismatch("density matrix must be non-empty");

  const double herm = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tolerance) {
    throw NotHermitian("max |A - A^dag| = " + fmt(herm) + " exceeds " + fmt(tolerance));
  }
  const double tr = matrix.trace().real();
  if (std::abs(tr - 1.0) > tolerance) {
    throw NotUnitTrace("trace = " + fmt(tr) + " is not 1 within " + fmt(tolerance));
  }

  Matrix sym = (matrix + matrix.adjoint()) / 2.0;
  SpectralDecomposition dec = decompose_hermitian(sym);
  const double lo = dec.eigenvalues.minCoeff();
  if (lo < -tolerance) {
    throw NegativeEigenvalue("eigenvalue " + fmt(lo) + " below -" + fmt(tolerance));
  }

  RealVector clamped = dec.eigenvalues.cwiseMax(0.0).cwiseMin(1.0);
  const double total = clamped.sum();
  if (total <= 0.0) throw NegativeEigenvalue("spectrum sums to zero after clamping");
  clamped /= total;

  DensityOperator rho;
  rho.matrix = dec.eigenvectors * clamped.asDiagonal() * dec.eigenvectors.adjoint();
  return rho;
}

SpectralDecomposition eigh(const DensityOperator& rho) { return decompose_hermitian(rho.matrix); }

Matrix mat_fn(const SpectralDecomposition& dec, const std::function<double(double)>& f) {
  RealVector mapped(dec.eigenvalues.size());
  for (int i = 0; i < dec.eigenvalues.size(); ++i) {
    const double y = f(dec.eigenvalues(i));
    if (!std::isfinite(y)) {
      throw DomainError("f(" + fmt(dec.eigenvalues(i)) + ") is not finite");
    }
    mapped(i) = y;
  }
  return dec.eigenvectors * mapped.asDiagonal() * dec.eigenvectors.adjoint();
}

Matrix mat_fn(const DensityOperator& rho, const std::function<double(double)>& f) {
  return mat_fn(eigh(rho), f);
}

} // namespace qvlc
