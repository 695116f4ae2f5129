#include "qvlc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <tuple>

#include "qvlc/entropy.hpp"

namespace qvlc {

namespace {

constexpr double kIdentityResidualCap = 1e-8;
constexpr double kFullRankFloor = 1e-10;

BoundReport make_report(std::string id, double lower, double achieved, double upper) {
  BoundReport r;
  r.theorem_id = std::move(id);
  r.lower = lower;
  r.achieved = achieved;
  r.upper = upper;
  r.gap_lower = achieved - lower;
  r.gap_upper = upper - achieved;
  r.lower_ok = achieved >= lower - kBoundTol;
  r.upper_ok = achieved < upper + kBoundTol;
  return r;
}

Distribution spectrum_distribution(const SpectralDecomposition& dec) {
  return make_distribution(dec.eigenvalues);
}

DensityOperator random_full_rank(int d, std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    DensityOperator rho = random_density(d, derive_seed(seed, 0x66756c6c, attempt, 0, 0));
    if (eigh(rho).eigenvalues.minCoeff() > kFullRankFloor) return rho;
  }
}

} // namespace

TrialConfig default_trial_config() {
  TrialConfig c;
  c.master_seed = 0;
  c.dims = {2, 3, 4, 5, 6, 7, 8};
  c.ks = {2, 3};
  c.ts = {0.0, 0.5, 1.0, 2.0, 8.0};
  c.trials_per_cell = 20;
  return c;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b, std::uint64_t c,
                          std::uint64_t e) {
  auto mix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  std::uint64_t h = mix(master);
  for (std::uint64_t v : {a, b, c, e}) h = mix(h ^ v);
  return h;
}

DensityOperator random_density(int d, std::uint64_t seed) {
  if (d < 1) throw DomainError("dimension must be >= 1");
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const double re = gauss(gen);
      const double im = gauss(gen);
      g(i, j) = Complex(re, im);
    }
  }
  Matrix a = g * g.adjoint();
  a /= a.trace().real();
  return validate_density(a);
}

double order_entropy(const DensityOperator& rho, double alpha, int k) {
  return alpha == 1.0 ? von_neumann(rho, k).value : renyi(rho, alpha, k).value;
}

QuantumEncoder optimal_encoder(const DensityOperator& rho, int k, double t) {
  const SpectralDecomposition dec = eigh(rho);
  const double merge_t = std::isinf(t) ? 64.0 : t;
  const ClassicalCode code = exp_huffman(spectrum_distribution(dec), k, merge_t);
  return build_encoder(dec.eigenvectors, code);
}

BoundReport check_optimal_bounds(const DensityOperator& rho, int k, double t) {
  const QuantumEncoder enc = optimal_encoder(rho, k, t);
  const double achieved = source_t_avg_length(enc, rho, t);
  const double alpha = std::isinf(t) ? 0.0 : 1.0 / (1.0 + t);
  const double lower = order_entropy(rho, alpha, k);
  BoundReport r = make_report("optimal_bounds", lower, achieved, lower + 1.0);
  r.params = {rho.dim(), k, t, 0};
  return r;
}

BoundReport check_wrong_code(const DensityOperator& rho, const DensityOperator& tau, int k,
                             double t) {
  if (rho.dim() != tau.dim()) {
    throw DimensionMismatch("rho and tau dimensions differ");
  }
  const SpectralDecomposition tau_dec = eigh(tau);

  std::vector<int> support;
  double leak = 0.0;
  std::vector<double> overlaps(static_cast<std::size_t>(tau.dim()));
  for (int i = 0; i < tau.dim(); ++i) {
    const Vector v = tau_dec.eigenvectors.col(i);
    overlaps[static_cast<std::size_t>(i)] = (v.adjoint() * rho.matrix * v)(0, 0).real();
    if (tau_dec.eigenvalues(i) > kSupportEps) {
      support.push_back(i);
    } else {
      leak += overlaps[static_cast<std::size_t>(i)];
    }
  }
  if (leak > kSupportEps) {
    throw InfiniteBound("supp(rho) is not contained in supp(tau); leaked weight " +
                        std::to_string(leak));
  }

  // Escort-Shannon lengths for tau, restricted to its support.
  RealVector tau_support(static_cast<int>(support.size()));
  RealVector q(static_cast<int>(support.size()));
  for (std::size_t i = 0; i < support.size(); ++i) {
    tau_support(static_cast<int>(i)) = tau_dec.eigenvalues(support[i]);
    q(static_cast<int>(i)) = std::max(0.0, overlaps[static_cast<std::size_t>(support[i])]);
  }
  tau_support /= tau_support.sum();
  q /= q.sum();
  const RealVector esc = escort_distribution(tau_support, t);
  const LengthVector lengths = shannon_lengths(make_distribution(esc), k);
  const double achieved = classical_avg_length(make_distribution(q), lengths, t);

  const double divergence = t == 0.0
                                ? relative_entropy(rho, tau, k)
                                : renyi_divergence(escort(rho, t), escort(tau, t), 1.0 + t, k);
  if (!std::isfinite(divergence)) {
    throw InfiniteBound("divergence between rho and tau is infinite");
  }
  const double lower = order_entropy(rho, 1.0 / (1.0 + t), k) + divergence;
  BoundReport r = make_report("wrong_code", lower, achieved, lower + 1.0);
  r.params = {rho.dim(), k, t, 0};
  return r;
}

double check_length_identity(const QuantumEncoder& enc, const DensityOperator& rho, double t) {
  const auto [sigma, beta] = code_induced_state(enc);
  const int k = enc.k;
  const double lhs = source_t_avg_length(enc, rho, t);
  double rhs;
  if (t == 0.0) {
    rhs = von_neumann(rho, k).value + relative_entropy(rho, sigma, k) - log_base(beta, k);
  } else {
    rhs = renyi(rho, 1.0 / (1.0 + t), k).value +
          renyi_divergence(escort(rho, t), sigma, 1.0 + t, k) - log_base(beta, k);
  }
  if (!std::isfinite(rhs)) throw InfiniteBound("identity right-hand side is infinite");
  return std::abs(lhs - rhs);
}

BoundReport check_tradeoff(const DensityOperator& rho, int k, double t) {
  const SpectralDecomposition dec = eigh(rho);
  if (dec.eigenvalues.minCoeff() <= kSupportEps) {
    throw ZeroEigenvalue("tradeoff check needs a full-support spectrum");
  }
  const Distribution spectrum = spectrum_distribution(dec);
  const RealVector esc = escort_distribution(spectrum.probs, t);
  const LengthVector lengths = shannon_lengths(make_distribution(esc), k);
  const double achieved = classical_avg_length(spectrum, lengths, 0.0);

  const double s1 = von_neumann(rho, k).value;
  const double sa = order_entropy(rho, 1.0 / (1.0 + t), k);
  const double lower = s1 / (1.0 + t) + sa * t / (1.0 + t);
  BoundReport r = make_report("tradeoff", lower, achieved, lower + 1.0);
  r.params = {rho.dim(), k, t, 0};
  r.base_length = *std::max_element(lengths.lengths.begin(), lengths.lengths.end());
  return r;
}

RealVector product_spectrum(const RealVector& spectrum, int K) {
  if (K < 1) throw DomainError("block size K must be >= 1");
  RealVector out = RealVector::Ones(1);
  for (int step = 0; step < K; ++step) {
    RealVector next(out.size() * spectrum.size());
    int idx = 0;
    for (int i = 0; i < out.size(); ++i) {
      for (int j = 0; j < spectrum.size(); ++j) next(idx++) = out(i) * spectrum(j);
    }
    out = std::move(next);
  }
  return out;
}

std::vector<std::pair<int, double>> block_limit_sweep(const DensityOperator& rho, int k, double t,
                                                      int K_max) {
  const SpectralDecomposition dec = eigh(rho);
  if (std::pow(static_cast<double>(rho.dim()), K_max) > 1e6) {
    throw InstanceTooLarge("product spectrum of size d^K_max exceeds 1e6");
  }
  std::vector<std::pair<int, double>> rows;
  for (int K = 1; K <= K_max; ++K) {
    const Distribution block = make_distribution(product_spectrum(dec.eigenvalues, K));
    const LengthVector lengths = exp_huffman_lengths(block, k, t);
    rows.emplace_back(K, classical_avg_length(block, lengths, t) / K);
  }
  return rows;
}

std::vector<BoundReport> run_suite(const TrialConfig& config) {
  if (config.trials_per_cell < 1) throw DomainError("trials_per_cell must be >= 1");
  const std::vector<double> ts = config.ts.empty() ? std::vector<double>{0.0} : config.ts;

  std::vector<BoundReport> reports;
  for (int d : config.dims) {
    for (int k : config.ks) {
      for (std::size_t ti = 0; ti < ts.size(); ++ti) {
        const double t = ts[ti];
        for (int trial = 0; trial < config.trials_per_cell; ++trial) {
          const std::uint64_t seed = derive_seed(
              config.master_seed, static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(k),
              static_cast<std::uint64_t>(ti), static_cast<std::uint64_t>(trial));
          // Full-rank sources keep the tradeoff check and all divergences
          // finite on every trial.
          const DensityOperator rho = random_full_rank(d, seed);
          const DensityOperator tau = random_full_rank(d, derive_seed(seed, 0x746175, 0, 0, 0));

          auto stamped = [&](BoundReport r) {
            r.params.seed = seed;
            reports.push_back(std::move(r));
          };

          stamped(check_optimal_bounds(rho, k, t));

          const QuantumEncoder opt = optimal_encoder(rho, k, t);
          BoundReport kraft = make_report("kraft", 0.0, quantum_kraft_sum(opt), 1.0);
          kraft.params = {d, k, t, 0};
          stamped(std::move(kraft));

          stamped(check_wrong_code(rho, tau, k, t));

          const QuantumEncoder mismatched = optimal_encoder(tau, k, t);
          BoundReport identity = make_report(
              "length_identity", 0.0, check_length_identity(mismatched, rho, t),
              kIdentityResidualCap);
          identity.params = {d, k, t, 0};
          stamped(std::move(identity));

          stamped(check_tradeoff(rho, k, t));
        }
      }
    }
  }
  std::stable_sort(reports.begin(), reports.end(), [](const BoundReport& a, const BoundReport& b) {
    return std::tie(a.theorem_id, a.params.d, a.params.k, a.params.t, a.params.seed) <
           std::tie(b.theorem_id, b.params.d, b.params.k, b.params.t, b.params.seed);
  });
  return reports;
}

bool all_pass(const std::vector<BoundReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const BoundReport& r) { return r.pass(); });
}

} // namespace qvlc
