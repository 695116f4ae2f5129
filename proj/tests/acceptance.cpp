// Acceptance suite: drives every library-level guarantee end to end and
// prints one PASS/FAIL line per criterion. Exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qvlc/entropy.hpp"
#include "qvlc/verify.hpp"
#include "test_util.hpp"

using namespace qvlc;

namespace {

int failures = 0;

class Criterion {
public:
  Criterion(int number, std::string title)
      : number_(number), title_(std::move(title)), start_(std::chrono::steady_clock::now()) {}

  void require(bool ok, const std::string& detail) {
    if (!ok && first_failure_.empty()) first_failure_ = detail;
    ok_ = ok_ && ok;
  }

  void require_runtime_below(double seconds) {
    const double elapsed = elapsed_seconds();
    require(elapsed < seconds,
            "runtime " + std::to_string(elapsed) + "s exceeds " + std::to_string(seconds) + "s");
  }

  ~Criterion() {
    std::printf("[%s] %d. %s (%.2fs)%s%s\n", ok_ ? "PASS" : "FAIL", number_, title_.c_str(),
                elapsed_seconds(), first_failure_.empty() ? "" : " -- ",
                first_failure_.c_str());
    if (!ok_) ++failures;
  }

private:
  double elapsed_seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  int number_;
  std::string title_;
  std::chrono::steady_clock::time_point start_;
  bool ok_ = true;
  std::string first_failure_;
};

DensityOperator diag_density(const std::vector<double>& spectrum) {
  return testutil::diag_density(spectrum);
}

// Spectrum whose escort at `t` is exactly the dyadic target: rho_i
// proportional to e_i^{1+t}.
std::vector<double> spectrum_with_escort(const std::vector<double>& target, double t) {
  std::vector<double> rho(target.size());
  double total = 0.0;
  for (std::size_t i = 0; i < target.size(); ++i) {
    rho[i] = std::pow(target[i], 1.0 + t);
    total += rho[i];
  }
  for (double& x : rho) x /= total;
  return rho;
}

} // namespace

int main() {
  const std::vector<double> t_grid{0.0, 0.5, 1.0, 2.0, 8.0};
  std::vector<BoundReport> sweep;

  {
    Criterion c(1, "quantum Kraft sum <= 1 + 1e-12 for every sweep encoder");
    sweep = run_suite(default_trial_config());
    int seen = 0;
    for (const auto& r : sweep) {
      if (r.theorem_id != "kraft") continue;
      ++seen;
      c.require(r.achieved <= 1.0 + 1e-12,
                "kraft sum " + std::to_string(r.achieved) + " at d=" +
                    std::to_string(r.params.d));
    }
    c.require(seen == 1400, "expected 1400 kraft trials, saw " + std::to_string(seen));
    c.require_runtime_below(10.0);
  }

  {
    Criterion c(2, "exponential Huffman matches the brute-force oracle objective");
    std::mt19937_64 gen(20240817);
    for (int trial = 0; trial < 200; ++trial) {
      const int d = 2 + static_cast<int>(gen() % 5);
      const Distribution p{testutil::random_simplex(d, gen)};
      for (int k : {2, 3}) {
        for (double t : t_grid) {
          const double built = classical_avg_length(p, exp_huffman_lengths(p, k, t), t);
          const double best = classical_avg_length(
              p, oracle_optimal_lengths(p, k, t, default_oracle_cap(p, k, t)), t);
          c.require(std::abs(built - best) <= 1e-10,
                    "objective gap " + std::to_string(built - best) + " at d=" +
                        std::to_string(d) + " k=" + std::to_string(k) + " t=" +
                        std::to_string(t));
        }
      }
    }
    c.require_runtime_below(60.0);
  }

  {
    Criterion c(3, "penalized averages sit inside the Renyi entropy window");
    int seen = 0;
    for (const auto& r : sweep) {
      if (r.theorem_id != "optimal_bounds") continue;
      ++seen;
      c.require(r.lower_ok && r.upper_ok,
                "bounds failed at d=" + std::to_string(r.params.d) + " seed=" +
                    std::to_string(r.params.seed));
    }
    c.require(seen == 1400, "expected 1400 bound trials");

    // dyadic escorts reach the lower bound
    const std::vector<std::vector<double>> dyadic_k2{
        {0.5, 0.25, 0.25}, {0.25, 0.25, 0.25, 0.25}, {0.5, 0.25, 0.125, 0.125}};
    const std::vector<std::vector<double>> dyadic_k3{
        {1.0 / 3, 1.0 / 3, 1.0 / 3},
        {1.0 / 3, 1.0 / 3, 1.0 / 9, 1.0 / 9, 1.0 / 9}};
    for (double t : {0.0, 0.5, 1.0, 2.0}) {
      for (const auto& target : dyadic_k2) {
        const BoundReport r =
            check_optimal_bounds(diag_density(spectrum_with_escort(target, t)), 2, t);
        c.require(r.gap_lower >= -1e-9 && r.gap_lower <= 1e-9,
                  "k=2 dyadic escort gap " + std::to_string(r.gap_lower));
      }
      for (const auto& target : dyadic_k3) {
        const BoundReport r =
            check_optimal_bounds(diag_density(spectrum_with_escort(target, t)), 3, t);
        c.require(r.gap_lower >= -1e-9 && r.gap_lower <= 1e-9,
                  "k=3 dyadic escort gap " + std::to_string(r.gap_lower));
      }
    }
  }

  {
    Criterion c(4, "length decompositions are exact to 1e-8");
    for (int trial = 0; trial < 100; ++trial) {
      const int d = 2 + trial % 5;
      const int k = trial % 2 == 0 ? 2 : 3;
      const double t = t_grid[trial % t_grid.size()];
      const DensityOperator rho = random_density(d, derive_seed(4, trial, 0, 0, 0));
      const DensityOperator tau = random_density(d, derive_seed(4, trial, 1, 0, 0));
      const QuantumEncoder enc = optimal_encoder(tau, k, t);
      const double residual = check_length_identity(enc, rho, t);
      c.require(residual <= 1e-8, "residual " + std::to_string(residual) + " at trial " +
                                      std::to_string(trial));
    }
  }

  {
    Criterion c(5, "mismatched codes pay exactly the divergence penalty");
    for (int trial = 0; trial < 100; ++trial) {
      const int d = 2 + trial % 6;
      const int k = trial % 2 == 0 ? 2 : 3;
      const double t = t_grid[trial % t_grid.size()];
      DensityOperator rho = random_density(d, derive_seed(5, trial, 0, 0, 0));
      DensityOperator tau = random_density(d, derive_seed(5, trial, 1, 0, 0));
      const BoundReport r = check_wrong_code(rho, tau, k, t);
      c.require(r.lower_ok && r.upper_ok, "bounds failed at trial " + std::to_string(trial));

      // self-designed codes carry no penalty
      const double self_div = t == 0.0
                                  ? relative_entropy(rho, rho, k)
                                  : renyi_divergence(escort(rho, t), escort(rho, t), 1.0 + t, k);
      c.require(std::abs(self_div) <= 1e-9, "self divergence " + std::to_string(self_div));
      const BoundReport self = check_wrong_code(rho, rho, k, t);
      c.require(std::abs(self.lower - order_entropy(rho, 1.0 / (1.0 + t), k)) <= 1e-9,
                "self-designed lower bound keeps a penalty term");
    }
  }

  {
    Criterion c(6, "average/base tradeoff behaves across the penalty range");
    int seen = 0;
    for (const auto& r : sweep) {
      if (r.theorem_id != "tradeoff") continue;
      ++seen;
      c.require(r.lower_ok && r.upper_ok,
                "convex-combination bounds failed at seed " + std::to_string(r.params.seed));
    }
    c.require(seen == 1400, "expected 1400 tradeoff trials");

    const DensityOperator skewed = diag_density({0.97, 0.01, 0.01, 0.01});
    const int rank_floor = 2; // ceil(log2 rank)
    int prev_base = std::numeric_limits<int>::max();
    double prev_bound = -kPosInfinity;
    std::vector<double> achieved;
    for (double t : t_grid) {
      const BoundReport r = check_tradeoff(skewed, 2, t);
      c.require(r.lower_ok && r.upper_ok, "skewed-instance bounds failed at t=" +
                                              std::to_string(t));
      c.require(r.base_length <= prev_base,
                "base length grew from " + std::to_string(prev_base) + " at t=" +
                    std::to_string(t));
      c.require(r.base_length >= rank_floor, "base length fell below ceil(log_k rank)");
      c.require(r.lower >= prev_bound - 1e-9, "ideal average bound decreased in t");
      prev_base = r.base_length;
      prev_bound = r.lower;
      achieved.push_back(r.achieved);
    }
    // the endpoints show the tradeoff: shorter registers cost average length
    c.require(achieved.back() > achieved.front(),
              "largest-t average does not exceed the unpenalized average");
    c.require(prev_base < check_tradeoff(skewed, 2, 0.0).base_length,
              "base length never shrank");
  }

  {
    Criterion c(7, "block codes converge onto the entropy at rate 1/K");
    for (double t : {0.0, 1.0}) {
      const DensityOperator rho = diag_density({0.9, 0.1});
      const double limit = order_entropy(rho, 1.0 / (1.0 + t), 2);
      double prev_gap = kPosInfinity;
      for (const auto& [K, value] : block_limit_sweep(rho, 2, t, 3)) {
        c.require(value >= limit - 1e-9, "per-source length fell below the entropy");
        c.require(value < limit + 1.0 / K + 1e-9, "per-source length escaped the 1/K window");
        const double gap = value - limit;
        c.require(gap < prev_gap, "upper gap did not shrink at K=" + std::to_string(K));
        prev_gap = gap;
      }
    }
    c.require_runtime_below(5.0);
  }

  {
    Criterion c(8, "block encode/decode round trips are lossless");
    std::mt19937_64 gen(808);
    for (int trial = 0; trial < 60; ++trial) {
      const int d = 2 + trial % 3;
      const int M = 1 + trial % 3;
      const int k = trial % 2 == 0 ? 2 : 3;
      RealVector spectrum = testutil::random_simplex(d, gen);
      std::sort(spectrum.data(), spectrum.data() + spectrum.size(),
                std::greater<double>());
      spectrum(0) += 0.3; // skew so codeword lengths differ
      spectrum /= spectrum.sum();
      const ClassicalCode code = huffman(make_distribution(spectrum), k);
      if (d > k) {
        const LengthVector ls = code.lengths();
        c.require(*std::max_element(ls.lengths.begin(), ls.lengths.end()) !=
                      *std::min_element(ls.lengths.begin(), ls.lengths.end()),
                  "expected mixed codeword lengths");
      }
      const QuantumEncoder enc = build_encoder(testutil::random_unitary(d, gen), code);

      std::vector<Vector> states;
      Vector expected = Vector::Ones(1);
      for (int m = 0; m < M; ++m) {
        states.push_back(testutil::random_state(d, gen));
        const Vector coeffs = enc.basis.adjoint() * states.back();
        Vector next(expected.size() * d);
        for (int i = 0; i < expected.size(); ++i) {
          for (int j = 0; j < d; ++j) next(i * d + j) = expected(i) * coeffs(j);
        }
        expected = std::move(next);
      }
      const Vector decoded = decode(enc, encode_block(enc, states), M);
      const Complex overlap = expected.dot(decoded);
      const double fidelity = std::norm(overlap) / (expected.squaredNorm() * decoded.squaredNorm());
      c.require(fidelity >= 1.0 - 1e-9,
                "fidelity " + std::to_string(fidelity) + " at trial " + std::to_string(trial));
    }
  }

  {
    Criterion c(9, "penalized lengths reach both limiting cases");
    std::mt19937_64 gen(909);
    for (int trial = 0; trial < 50; ++trial) {
      const int d = 3 + trial % 4;
      const int k = trial % 2 == 0 ? 2 : 3;
      const ClassicalCode code = huffman(Distribution{testutil::random_simplex(d, gen)}, k);

      // dominant amplitude on a longest word, remainder spread at random
      int longest = 0;
      for (int i = 1; i < d; ++i) {
        if (code.words[i].size() > code.words[longest].size()) longest = i;
      }
      Vector amps = testutil::random_state(d, gen);
      amps *= std::sqrt(0.01) / amps.norm();
      amps(longest) = Complex(std::sqrt(1.0 - amps.squaredNorm() + std::norm(amps(longest))), 0);
      FockVector w;
      w.k = k;
      for (int i = 0; i < d; ++i) {
        if (std::abs(amps(i)) > kAmplitudePruneEps) w.terms[code.words[i]] = amps(i);
      }

      const double mean = t_codeword_length(w, 0.0);
      const double near_zero = t_codeword_length(w, 1e-6);
      c.require(std::abs(near_zero - mean) <= 1e-4,
                "t->0 limit off by " + std::to_string(near_zero - mean));

      const double base = t_codeword_length(w, kPosInfinity);
      const double near_inf = t_codeword_length(w, 64.0);
      c.require(std::abs(near_inf - base) <= 1e-3,
                "t->inf limit off by " + std::to_string(near_inf - base));
    }
  }

  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria failed\n", failures);
  return 1;
}
