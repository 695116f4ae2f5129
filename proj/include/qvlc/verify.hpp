#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qvlc/qcode.hpp"

namespace qvlc {

struct TrialParams {
  int d = 0;
  int k = 2;
  double t = 0.0;
  std::uint64_t seed = 0;
};

/// One bound check: lower <= achieved < upper with one-sided kBoundTol slack.
struct BoundReport {
  std::string theorem_id;
  double lower = 0.0;
  double achieved = 0.0;
  double upper = 0.0;
  bool lower_ok = false;
  bool upper_ok = false;
  double gap_lower = 0.0;
  double gap_upper = 0.0;
  TrialParams params;
  int base_length = -1; // set by the tradeoff check, -1 elsewhere

  bool pass() const { return lower_ok && upper_ok; }
};

struct TrialConfig {
  std::uint64_t master_seed = 0;
  std::vector<int> dims;
  std::vector<int> ks;
  std::vector<double> ts; // empty means: run the t = 0 checks only
  int trials_per_cell = 1;
};

/// d in {2..8}, k in {2,3}, t in {0, 0.5, 1, 2, 8}, 20 trials per cell.
TrialConfig default_trial_config();

/// Ginibre sample: G with i.i.d. standard complex Gaussian entries (filled
/// row by row, real part before imaginary), rho = G G^dag / Tr(G G^dag).
/// Identical seeds give identical operators.
DensityOperator random_density(int d, std::uint64_t seed);

/// Splitting rule for per-trial seeds: splitmix64 chaining of
/// (master_seed, d, k, t_index, trial_index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b, std::uint64_t c,
                          std::uint64_t e);

/// Penalty-optimal encoder: eigenbasis of rho with the exponential Huffman
/// code built on its spectrum. Infinite t uses a large-t surrogate tree
/// (t = 64 in log domain), whose lengths realize the minimax code.
QuantumEncoder optimal_encoder(const DensityOperator& rho, int k, double t);

/// Renyi entropy routed through von_neumann at order 1.
double order_entropy(const DensityOperator& rho, double alpha, int k);

/// S_{1/(1+t)}(rho) <= l_t(optimal code) < S_{1/(1+t)}(rho) + 1.
BoundReport check_optimal_bounds(const DensityOperator& rho, int k, double t);

/// Bounds for the escort-Shannon code designed for tau but fed rho:
/// S_{1/(1+t)}(rho) + divergence <= l_t < same + 1. Throws InfiniteBound
/// when supp(rho) is not contained in supp(tau).
BoundReport check_wrong_code(const DensityOperator& rho, const DensityOperator& tau, int k,
                             double t);

/// Residual |l_t(C(rho)) - [S_{1/(1+t)}(rho) + S_{1+t}(rho_t||sigma) - log_k beta]|
/// (at t = 0 the relative-entropy form). Exact identity: residual stays below
/// numerical noise for every valid encoder.
double check_length_identity(const QuantumEncoder& enc, const DensityOperator& rho, double t);

/// Standard average of the escort-Shannon code against its convex-combination
/// bounds (1/(1+t)) S(rho) + (t/(1+t)) S_{1/(1+t)}(rho) + {0,1}. Requires a
/// full-support spectrum. The report carries the code's base length.
BoundReport check_tradeoff(const DensityOperator& rho, int k, double t);

/// Per-source penalized length of the optimal block code on rho^{otimes K},
/// K = 1..K_max, computed on the product spectrum.
std::vector<std::pair<int, double>> block_limit_sweep(const DensityOperator& rho, int k, double t,
                                                      int K_max);

/// Spectrum of rho^{otimes K}: all K-fold products of the input eigenvalues.
RealVector product_spectrum(const RealVector& spectrum, int K);

/// Runs every check over the seeded grid; the returned list is sorted by
/// (theorem_id, d, k, t, seed) and is identical for identical configs.
std::vector<BoundReport> run_suite(const TrialConfig& config);

bool all_pass(const std::vector<BoundReport>& reports);

} // namespace qvlc
